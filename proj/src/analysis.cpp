#include "superosc/analysis.hpp"

#include "superosc/errors.hpp"
#include "superosc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace superosc {

namespace {

template <class T>
T quadrature_tolerance() {
  if constexpr (is_high_precision_v<T>) {
    return pow10<T>(-std::min(30, working_digits<T>() - 8));
  } else {
    return T(1e-13);
  }
}

}  // namespace

template <class T>
YieldReport<T> yield_of(const CosineSignal<T>& signal, const Domain<T>& domain,
                        const OverlapMatrix<T>* overlap) {
  const T energy = signal.energy_per_period();
  if (!(energy > T(0))) throw std::invalid_argument("yield of a zero-energy signal");
  const Vector<T>& a = signal.coeffs();

  T inside;
  if (overlap != nullptr) {
    if (overlap->entries.rows() != a.size()) {
      throw std::invalid_argument("overlap matrix does not match the signal band limit");
    }
    inside = a.dot(overlap->entries * a);
  } else {
    const OverlapMatrix<T> built = overlap_matrix(domain, signal.band_limit());
    inside = a.dot(built.entries * a);
  }

  const std::function<T(const T&)> squared = [&](const T& t) {
    const T v = signal.evaluate(t);
    return v * v;
  };
  const T tol = quadrature_tolerance<T>();
  T numerator(0);
  for (const auto& [lo, hi] : domain.intervals()) numerator += integrate(squared, lo, hi, tol);
  const T p = pi<T>();
  const T denominator = integrate(squared, T(-p), p, tol);
  return YieldReport<T>{inside / energy, numerator / denominator};
}

template <class T>
int zero_crossings(const CosineSignal<T>& signal, const Domain<T>& domain, int grid_points) {
  if (grid_points < 1000) throw std::invalid_argument("zero_crossings needs >= 1000 grid points");
  const Vector<T>& a = signal.coeffs();
  if (a.isZero(0)) return 0;

  // Samples are first evaluated in double. A sign is accepted when |f| clears
  // a bound on the rounding and argument errors; otherwise the sample is
  // re-evaluated in T.
  const int n = signal.band_limit();
  const double root_pi = std::sqrt(3.14159265358979323846);
  std::vector<double> c(static_cast<std::size_t>(n + 1));
  c[0] = scalar_cast<double>(a(0)) / (std::sqrt(2.0) * root_pi);
  double magnitude = std::abs(c[0]);
  double slope = 0.0;
  for (int m = 1; m <= n; ++m) {
    c[static_cast<std::size_t>(m)] = scalar_cast<double>(a(m)) / root_pi;
    magnitude += std::abs(c[static_cast<std::size_t>(m)]);
    slope += m * std::abs(c[static_cast<std::size_t>(m)]);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double trusted = 32.0 * eps * (n + 2) * (magnitude + 4.0 * slope);

  const T total = domain.measure();
  int crossings = 0;
  for (const auto& [lo, hi] : domain.intervals()) {
    const T share = T(grid_points) * (hi - lo) / total;
    const long count = std::max<long>(2, std::lround(scalar_cast<double>(share)));
    const T step = (hi - lo) / T(count - 1);
    const double lo_d = scalar_cast<double>(lo);
    const double hi_d = scalar_cast<double>(hi);
    const double step_d = scalar_cast<double>(step);

    int previous_sign = 0;
    bool in_zero_run = false;
    for (long k = 0; k < count; ++k) {
      const bool last = k == count - 1;
      const double t = last ? hi_d : lo_d + static_cast<double>(k) * step_d;
      double value = c[0];
      for (int m = 1; m <= n; ++m) value += c[static_cast<std::size_t>(m)] * std::cos(m * t);

      int sign = (value > 0.0) - (value < 0.0);
      if constexpr (is_high_precision_v<T>) {
        if (std::abs(value) <= trusted) {
          const T exact = signal.evaluate(last ? hi : T(lo + T(k) * step));
          sign = (exact > T(0)) - (exact < T(0));
        }
      }
      if (sign == 0) {
        if (!in_zero_run) ++crossings;
        in_zero_run = true;
      } else {
        if (previous_sign != 0 && sign != previous_sign && !in_zero_run) ++crossings;
        previous_sign = sign;
        in_zero_run = false;
      }
    }
  }
  return crossings;
}

template <class T>
GeneralizedSpectrum<T> interval_spectrum(int band_limit, int constraints, const T& a,
                                         std::uint64_t seed) {
  const Problem<T> problem =
      build_problem(Domain<T>::centered(a), alternating_constraints<T>(T(0), a, constraints),
                    band_limit, seed);
  return secular_spectrum(problem.blocks, problem.frame);
}

int scaling_exponent(int band_limit, int index) { return 4 * (band_limit - index) + 5; }

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope fit needs at least two paired points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("slope fit needs distinct x values");
  return sxy / sxx;
}

namespace {

template <class T>
void append_rows(SweepTable<T>& table, const T& parameter, const T& a,
                 const GeneralizedSpectrum<T>& spectrum) {
  using std::pow;
  for (std::size_t k = 0; k < spectrum.roots.size(); ++k) {
    const int index = static_cast<int>(k) + 1;
    const T& lambda = spectrum.roots[k].eigenvalue;
    const T normalized = lambda / pow(a, T(scaling_exponent(table.band_limit, index)));
    table.rows.push_back(SweepRow<T>{parameter, index, lambda, normalized});
  }
  for (const auto& w : spectrum.warnings) {
    table.warnings.push_back(to_decimal_string(parameter) + ": " + w);
  }
}

}  // namespace

template <class T>
SweepTable<T> scaling_sweep(int band_limit, int constraints, const std::vector<T>& a_values,
                            std::uint64_t seed) {
  using std::log;
  const T p = pi<T>();
  for (const T& a : a_values) {
    if (!(a > T(0) && a < p)) throw std::invalid_argument("sweep values of a must lie in (0, pi)");
  }
  SweepTable<T> table;
  table.band_limit = band_limit;
  std::map<int, std::pair<std::vector<double>, std::vector<double>>> series;
  for (const T& a : a_values) {
    try {
      const GeneralizedSpectrum<T> spectrum = interval_spectrum(band_limit, constraints, a, seed);
      append_rows(table, a, a, spectrum);
      for (std::size_t k = 0; k < spectrum.roots.size(); ++k) {
        auto& [xs, ys] = series[static_cast<int>(k) + 1];
        xs.push_back(scalar_cast<double>(T(log(a))));
        ys.push_back(scalar_cast<double>(T(log(spectrum.roots[k].eigenvalue))));
      }
    } catch (const std::exception& e) {
      table.failures.push_back(to_decimal_string(a) + ": " + e.what());
    }
  }
  if (!series.empty() && series.begin()->second.first.size() >= 2) {
    for (const auto& [index, xy] : series) {
      table.slopes.push_back(least_squares_slope(xy.first, xy.second));
    }
  }
  return table;
}

template <class T>
SweepTable<T> monotonicity_table(int band_limit, const T& a, const std::vector<int>& m_values,
                                 std::uint64_t seed) {
  for (int m : m_values) {
    if (m < 1 || m > band_limit + 1) {
      throw std::invalid_argument("no solution for M>N+1");
    }
  }
  SweepTable<T> table;
  table.band_limit = band_limit;
  for (int m : m_values) {
    try {
      append_rows(table, T(m), a, interval_spectrum(band_limit, m, a, seed));
    } catch (const std::exception& e) {
      table.failures.push_back("M=" + std::to_string(m) + ": " + e.what());
    }
  }
  return table;
}

template <class T>
std::vector<MonotonicityViolation> monotonicity_violations(const SweepTable<T>& table) {
  // (index -> M -> lambda)
  std::map<int, std::map<int, T>> by_index;
  for (const auto& row : table.rows) {
    by_index[row.index][static_cast<int>(std::lround(scalar_cast<double>(row.parameter)))] =
        row.eigenvalue;
  }
  std::vector<MonotonicityViolation> out;
  for (const auto& [index, by_m] : by_index) {
    for (auto lo = by_m.begin(); lo != by_m.end(); ++lo) {
      for (auto hi = std::next(lo); hi != by_m.end(); ++hi) {
        if (lo->second < hi->second) out.push_back({index, lo->first, hi->first});
      }
    }
  }
  return out;
}

#define SUPEROSC_INSTANTIATE(T)                                                              \
  template YieldReport<T> yield_of(const CosineSignal<T>&, const Domain<T>&,                 \
                                   const OverlapMatrix<T>*);                                 \
  template int zero_crossings(const CosineSignal<T>&, const Domain<T>&, int);                \
  template GeneralizedSpectrum<T> interval_spectrum(int, int, const T&, std::uint64_t);      \
  template SweepTable<T> scaling_sweep(int, int, const std::vector<T>&, std::uint64_t);      \
  template SweepTable<T> monotonicity_table(int, const T&, const std::vector<int>&,          \
                                            std::uint64_t);                                  \
  template std::vector<MonotonicityViolation> monotonicity_violations(const SweepTable<T>&);

SUPEROSC_INSTANTIATE(double)
SUPEROSC_INSTANTIATE(HighPrecision)
#undef SUPEROSC_INSTANTIATE

}  // namespace superosc
