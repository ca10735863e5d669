#pragma once

#include "superosc/domain.hpp"
#include "superosc/signal.hpp"
#include "superosc/spectrum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace superosc {

/// Energy fraction inside the domain, computed two ways.
template <class T>
struct YieldReport {
  /// A^T Delta A / A^T A.
  T algebraic;
  /// Integral of f^2 over the domain divided by its integral over a period,
  /// both by adaptive quadrature.
  T quadrature;
};

/// Throws std::invalid_argument for a zero-energy signal or a supplied
/// overlap matrix of the wrong size.
template <class T>
YieldReport<T> yield_of(const CosineSignal<T>& signal, const Domain<T>& domain,
                        const OverlapMatrix<T>* overlap = nullptr);

/// Strict sign changes of f on a uniform grid over each domain interval.
/// grid_points is the total over the domain, split in proportion to interval
/// length; a run of samples that are exactly zero counts once.
/// Throws std::invalid_argument for grid_points < 1000.
template <class T>
int zero_crossings(const CosineSignal<T>& signal, const Domain<T>& domain,
                   int grid_points);

/// Spectrum for the single interval (-a, a) with M alternating constraints
/// on [0, a].
template <class T>
GeneralizedSpectrum<T> interval_spectrum(int band_limit, int constraints, const T& a,
                                         std::uint64_t seed = 1);

template <class T>
struct SweepRow {
  /// Interval half-width a for scaling sweeps, M for monotonicity tables.
  T parameter;
  int index = 0;
  T eigenvalue;
  /// lambda_i / a^(4(N-i)+5).
  T normalized;
};

template <class T>
struct SweepTable {
  int band_limit = 0;
  std::vector<SweepRow<T>> rows;
  /// Per-index log-log slope of lambda_i against a, index i at slot i-1.
  /// Empty when fewer than two a values were solved.
  std::vector<double> slopes;
  /// "parameter: message" for configurations whose solve failed.
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
};

/// 4(N-i)+5.
int scaling_exponent(int band_limit, int index);

/// Solves (-a, a) with M constraints for every a and fits log lambda_i
/// against log a by unweighted least squares.
template <class T>
SweepTable<T> scaling_sweep(int band_limit, int constraints, const std::vector<T>& a_values,
                            std::uint64_t seed = 1);

/// Spectra at fixed (N, a) for each M; rows keyed by (M, i).
template <class T>
SweepTable<T> monotonicity_table(int band_limit, const T& a, const std::vector<int>& m_values,
                                 std::uint64_t seed = 1);

struct MonotonicityViolation {
  int index;
  int smaller_m;
  int larger_m;
};

/// Shared indices i where lambda_i(M) < lambda_i(M') for some M < M'.
template <class T>
std::vector<MonotonicityViolation> monotonicity_violations(const SweepTable<T>& table);

/// Unweighted least-squares slope of y against x.
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace superosc
