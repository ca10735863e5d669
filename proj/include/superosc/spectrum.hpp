#pragma once

#include "superosc/constraints.hpp"
#include "superosc/domain.hpp"
#include "superosc/real.hpp"
#include "superosc/signal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace superosc {

/// R Delta R^T split along the free / constrained coordinates:
///
///   [ delta_free      gamma       ]   (N+1-M rows)
///   [ gamma^T         delta_fixed ]   (M rows)
template <class T>
struct BlockDecomposition {
  Matrix<T> rotated;
  Matrix<T> delta_free;
  Matrix<T> gamma;
  Matrix<T> delta_fixed;

  int free_dim() const { return static_cast<int>(delta_free.rows()); }
};

/// Throws std::invalid_argument when the frame and the overlap matrix were
/// built for different band limits.
template <class T>
BlockDecomposition<T> rotate_and_partition(const OverlapMatrix<T>& overlap,
                                           const RotatedFrame<T>& frame);

/// One stationary value of the constrained yield and the signal attaining it.
template <class T>
struct SpectrumRoot {
  T eigenvalue;
  /// Free coordinates B of the stationary point.
  Vector<T> free_part;
  CosineSignal<T> signal;
  /// |s(lambda)| for the normalized secular function (or the polynomial value
  /// scaled by its largest coefficient, for the polynomial path).
  T secular_residual;
  /// ||(delta_free - lambda I) B + gamma mu_tilde||.
  T stationarity_residual;
  /// False for a deflated pole: the value is a root of the cleared equation
  /// but is approached only in the limit of infinite free amplitude. The
  /// signal is then the pseudo-inverse stationary point.
  bool attained = true;
};

enum class SpectrumMethod { kSecular, kPolynomial };

/// Generalized eigenvalues lambda_1 < ... < lambda_{N+2-M} with their signals.
template <class T>
struct GeneralizedSpectrum {
  SpectrumMethod method = SpectrumMethod::kSecular;
  std::vector<SpectrumRoot<T>> roots;
  std::vector<std::string> warnings;

  std::vector<T> eigenvalues() const;
  const SpectrumRoot<T>& top() const { return roots.back(); }
};

/// Primary solver. Diagonalizes delta_free = U diag(d) U^T, forms
/// v = U^T gamma mu_tilde and brackets every root of
///
///   s(Y) = mu~^T delta_fixed mu~ - sum_k v_k^2 / (d_k - Y) - Y |mu~|^2
///
/// between consecutive poles (s is strictly decreasing on each branch).
/// Poles with negligible |v_k| are deflated and reported as roots with
/// attained == false. Throws SolverFailure on non-convergence, roots outside
/// [0, 1], or coincident roots; std::invalid_argument when mu_tilde = 0.
template <class T>
GeneralizedSpectrum<T> secular_spectrum(const BlockDecomposition<T>& blocks,
                                        const RotatedFrame<T>& frame);

/// Cross-check solver. Builds the degree-(N+2-M) polynomial
///
///   P(Y) = (c - Y |mu~|^2) det(Y I - delta_free) + w^T adj(Y I - delta_free) w
///
/// with w = gamma mu_tilde, the characteristic polynomial and adjugate coming
/// from the Faddeev-LeVerrier recurrence, and finds its real roots by
/// recursive bracketing between roots of successive derivatives. Free parts
/// are recovered by an LU solve of (delta_free - Y I) B = -w. In high
/// precision a failed root search is retried with up to 8x the working digits.
template <class T>
GeneralizedSpectrum<T> polynomial_spectrum(const BlockDecomposition<T>& blocks,
                                           const RotatedFrame<T>& frame);

/// Coefficients (lowest degree first) of the polynomial used by
/// polynomial_spectrum.
template <class T>
std::vector<T> yield_polynomial(const BlockDecomposition<T>& blocks,
                                const Vector<T>& mu_tilde);

/// Minimum-energy interpolant: all free coordinates set to zero.
template <class T>
CosineSignal<T> fk_min_energy_signal(const RotatedFrame<T>& frame);

template <class T>
struct SlepianMode {
  T eigenvalue;
  CosineSignal<T> signal;
};

/// Ordinary eigenpairs of Delta, eigenvalues descending, unit-energy signals.
template <class T>
std::vector<SlepianMode<T>> slepian_modes(const OverlapMatrix<T>& overlap);

/// Everything needed to solve one configuration, built in pipeline order.
template <class T>
struct Problem {
  OverlapMatrix<T> overlap;
  ConstraintSet<T> constraints;
  ReducedConstraints<T> reduced;
  RotatedFrame<T> frame;
  BlockDecomposition<T> blocks;
};

/// overlap -> constraint matrix -> rank reduction -> frame -> blocks.
template <class T>
Problem<T> build_problem(const Domain<T>& domain,
                         const ConstraintSet<T>& constraints, int band_limit,
                         std::uint64_t completion_seed = 1);

}  // namespace superosc
