#include "superosc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace superosc {

template <class T>
GaussLegendreRule<T> gauss_legendre(int points) {
  using std::abs;
  using std::cos;
  if (points < 1) throw std::invalid_argument("rule needs at least one point");
  GaussLegendreRule<T> rule;
  rule.nodes.resize(static_cast<std::size_t>(points));
  rule.weights.resize(static_cast<std::size_t>(points));
  const T tol = 16 * machine_epsilon<T>();
  const T p = pi<T>();
  // P_n(x) and P_n'(x) by the three-term recurrence.
  const auto legendre = [points](const T& x) {
    T p0(1);
    T p1 = x;
    for (int k = 2; k <= points; ++k) {
      const T p2 = (T(2 * k - 1) * x * p1 - T(k - 1) * p0) / T(k);
      p0 = p1;
      p1 = p2;
    }
    if (points == 1) p0 = T(1);
    return std::make_pair(p1, T(T(points) * (x * p1 - p0) / (x * x - 1)));
  };
  for (int i = 0; i < (points + 1) / 2; ++i) {
    T x = cos(p * (T(i) + T(0.75)) / (T(points) + T(0.5)));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [value, slope] = legendre(x);
      const T step = value / slope;
      x -= step;
      if (abs(step) <= tol * abs(x) || abs(step) <= tol) break;
    }
    const T derivative = legendre(x).second;
    const T w = T(2) / ((1 - x * x) * derivative * derivative);
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.nodes[static_cast<std::size_t>(points - 1 - i)] = -x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(points - 1 - i)] = w;
  }
  if (points % 2 == 1) rule.nodes[static_cast<std::size_t>(points / 2)] = T(0);
  return rule;
}

namespace {

template <class T>
struct Estimate {
  T value;
  T magnitude;
};

template <class T>
Estimate<T> apply(const GaussLegendreRule<T>& rule, const std::function<T(const T&)>& f,
                  const T& lo, const T& hi) {
  using std::abs;
  const T half = (hi - lo) / 2;
  const T mid = (hi + lo) / 2;
  T sum(0);
  T mag(0);
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const T v = f(mid + half * rule.nodes[k]);
    sum += rule.weights[k] * v;
    mag += rule.weights[k] * abs(v);
  }
  return {sum * half, mag * half};
}

template <class T>
T refine(const GaussLegendreRule<T>& rule, const std::function<T(const T&)>& f,
         const T& lo, const T& hi, const Estimate<T>& whole, const T& abs_tol,
         const T& floor, int depth, int& budget) {
  using std::abs;
  using std::max;
  const T mid = (lo + hi) / 2;
  const Estimate<T> left = apply(rule, f, lo, mid);
  const Estimate<T> right = apply(rule, f, mid, hi);
  const T both = left.value + right.value;
  if (abs(both - whole.value) <= abs_tol || depth >= 30 || --budget <= 0) return both;
  const T child_tol = max(T(abs_tol / 2), floor);
  return refine(rule, f, lo, mid, left, child_tol, floor, depth + 1, budget) +
         refine(rule, f, mid, hi, right, child_tol, floor, depth + 1, budget);
}

}  // namespace

template <class T>
T integrate(const std::function<T(const T&)>& f, const T& lo, const T& hi, const T& rel_tol) {
  if (lo == hi) return T(0);
  if (hi < lo) return -integrate(f, hi, lo, rel_tol);
  const GaussLegendreRule<T> rule = gauss_legendre<T>(24);
  const Estimate<T> whole = apply(rule, f, lo, hi);
  const T scale = whole.magnitude > T(0) ? whole.magnitude : T(1);
  // Rounding noise sets a floor below which halving the tolerance is futile.
  const T floor = 64 * machine_epsilon<T>() * scale;
  int budget = 4096;
  return refine(rule, f, lo, hi, whole, std::max(T(rel_tol * scale), floor), floor, 0, budget);
}

template GaussLegendreRule<double> gauss_legendre<double>(int);
template GaussLegendreRule<HighPrecision> gauss_legendre<HighPrecision>(int);
template double integrate(const std::function<double(const double&)>&, const double&,
                          const double&, const double&);
template HighPrecision integrate(const std::function<HighPrecision(const HighPrecision&)>&,
                                 const HighPrecision&, const HighPrecision&,
                                 const HighPrecision&);

}  // namespace superosc
