#include "superosc/domain.hpp"

#include "superosc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace superosc {

namespace {

template <class T>
T merge_tolerance() {
  return T(1e-15);
}

}  // namespace

template <class T>
Domain<T>::Domain(std::vector<Interval> intervals) {
  using std::isfinite;
  if (intervals.empty()) throw DomainError("domain has no intervals");
  const T half_period = pi<T>();
  const T tol = merge_tolerance<T>();
  for (auto& [lo, hi] : intervals) {
    if (!isfinite(lo) || !isfinite(hi)) {
      throw DomainError("domain endpoint is not finite");
    }
    if (lo < -half_period && lo >= -half_period - tol) lo = -half_period;
    if (hi > half_period && hi <= half_period + tol) hi = half_period;
    if (!(lo < hi)) throw DomainError("domain interval has lo >= hi");
    if (lo < -half_period || hi > half_period) {
      throw DomainError("domain interval leaves [-pi, pi]");
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& x, const Interval& y) { return x.first < y.first; });
  for (auto& iv : intervals) {
    if (intervals_.empty()) {
      intervals_.push_back(iv);
      continue;
    }
    Interval& last = intervals_.back();
    if (iv.first < last.second - tol) {
      throw DomainError("domain intervals overlap");
    }
    if (iv.first - last.second <= tol) {
      last.second = iv.second;
    } else {
      intervals_.push_back(iv);
    }
  }
}

template <class T>
Domain<T> Domain<T>::centered(const T& half_width) {
  return Domain({{-half_width, half_width}});
}

template <class T>
Domain<T> Domain<T>::full_period() {
  const T p = pi<T>();
  return Domain({{-p, p}});
}

template <class T>
T Domain<T>::measure() const {
  T total(0);
  for (const auto& [lo, hi] : intervals_) total += hi - lo;
  return total;
}

template <class T>
bool Domain<T>::contains(const T& t) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv.first < t && t < iv.second; });
}

template <class T>
Domain<T> symmetric_pair(const T& a, const T& b) {
  if (!(a >= T(0)) || !(a < b) || b > pi<T>() + merge_tolerance<T>()) {
    throw std::invalid_argument("symmetric pair needs 0 <= a < b <= pi");
  }
  if (a == T(0)) return Domain<T>({{-b, b}});
  return Domain<T>({{-b, -a}, {a, b}});
}

template <class T>
Domain<T> parse_domain(const std::string& text) {
  std::vector<typename Domain<T>::Interval> intervals;
  std::stringstream all(text);
  std::string piece;
  while (std::getline(all, piece, ';')) {
    if (piece.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = piece.find(',');
    if (comma == std::string::npos || piece.find(',', comma + 1) != std::string::npos) {
      throw DomainError("interval '" + piece + "' is not of the form lo,hi");
    }
    try {
      intervals.emplace_back(parse_real<T>(piece.substr(0, comma)),
                             parse_real<T>(piece.substr(comma + 1)));
    } catch (const std::invalid_argument& e) {
      throw DomainError(e.what());
    }
  }
  return Domain<T>(std::move(intervals));
}

namespace {

// Antiderivative of cos(mt) cos(nt) with m, n >= 0.
template <class T>
T product_antiderivative(int m, int n, const T& t) {
  using std::sin;
  if (m == n) {
    if (m == 0) return t;
    return t / 2 + sin(T(2 * m) * t) / T(4 * m);
  }
  return sin(T(m - n) * t) / T(2 * (m - n)) + sin(T(m + n) * t) / T(2 * (m + n));
}

}  // namespace

template <class T>
OverlapMatrix<T> overlap_matrix(const Domain<T>& domain, int band_limit) {
  using std::sqrt;
  if (band_limit < 1) throw std::invalid_argument("band limit must be >= 1");
  const T p = pi<T>();
  const T both_zero = T(1) / (2 * p);
  const T one_zero = T(1) / (sqrt(T(2)) * p);
  const T none_zero = T(1) / p;

  Matrix<T> delta(band_limit + 1, band_limit + 1);
  for (int m = 0; m <= band_limit; ++m) {
    for (int n = m; n <= band_limit; ++n) {
      T integral(0);
      for (const auto& [lo, hi] : domain.intervals()) {
        integral += product_antiderivative(m, n, hi) - product_antiderivative(m, n, lo);
      }
      const T& scale = (m == 0 && n == 0) ? both_zero
                       : (m == 0 || n == 0) ? one_zero
                                            : none_zero;
      delta(m, n) = scale * integral;
      delta(n, m) = delta(m, n);
    }
  }
  return OverlapMatrix<T>{band_limit, std::move(delta), domain};
}

template class Domain<double>;
template class Domain<HighPrecision>;
template Domain<double> symmetric_pair(const double&, const double&);
template Domain<HighPrecision> symmetric_pair(const HighPrecision&, const HighPrecision&);
template Domain<double> parse_domain<double>(const std::string&);
template Domain<HighPrecision> parse_domain<HighPrecision>(const std::string&);
template OverlapMatrix<double> overlap_matrix(const Domain<double>&, int);
template OverlapMatrix<HighPrecision> overlap_matrix(const Domain<HighPrecision>&, int);

}  // namespace superosc
