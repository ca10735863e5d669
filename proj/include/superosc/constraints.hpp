#pragma once

#include "superosc/real.hpp"

#include <cstdint>
#include <vector>

namespace superosc {

/// Interpolation conditions f(t_j) = mu_j.
template <class T>
struct ConstraintSet {
  std::vector<T> points;
  std::vector<T> values;

  int size() const { return static_cast<int>(points.size()); }
};

/// M equally spaced points t_j = lo + (hi - lo) j / M, j = 0..M-1, with
/// alternating targets mu_j = (-1)^j. Throws std::invalid_argument for
/// m < 1 or lo >= hi.
template <class T>
ConstraintSet<T> alternating_constraints(const T& lo, const T& hi, int m);

/// M x (N+1) matrix whose row j holds the basis functions evaluated at t_j,
/// so that (C A)_j = f(t_j).
template <class T>
struct ConstraintMatrix {
  Matrix<T> entries;

  int rows() const { return static_cast<int>(entries.rows()); }
  int band_limit() const { return static_cast<int>(entries.cols()) - 1; }
};

template <class T>
ConstraintMatrix<T> constraint_matrix(const ConstraintSet<T>& constraints,
                                      int band_limit);

template <class T>
struct ReducedConstraints {
  ConstraintMatrix<T> matrix;
  Vector<T> values;
  /// Original row indices that were kept, ascending.
  std::vector<int> kept_rows;
  /// Largest |C_j A_p - mu_j| over the eliminated rows (0 if none).
  T eliminated_residual;
};

/// Drops rows that are linearly dependent on the others, using a column-
/// pivoted QR of C^T with relative pivot threshold `tol`. Each dropped row
/// must be reproduced by the minimal-norm solution of the kept rows to within
/// `tol` (relative to max(1, |mu|)); otherwise InfeasibleConstraints is
/// thrown.
template <class T>
ReducedConstraints<T> reduce_rank(const ConstraintMatrix<T>& matrix,
                                  const Vector<T>& values, const T& tol);

/// Default rank tolerance 10^-((2 digits + 1) / 3): 1e-10 in double, about
/// 1e-67 at 100 digits.
template <class T>
T default_rank_tolerance();

/// Orthogonal change of coordinates B = R A. The last M rows of R span the
/// row space of C; the first N+1-M rows are a seeded random orthonormal
/// completion. Constraints become B_i = mu_tilde_(i - free_dim) for the last
/// M coordinates.
template <class T>
struct RotatedFrame {
  Matrix<T> rotation;
  int free_dim = 0;
  Vector<T> mu_tilde;
  std::uint64_t seed = 0;

  int band_limit() const { return static_cast<int>(rotation.rows()) - 1; }
  int constraint_count() const { return static_cast<int>(mu_tilde.size()); }

  /// A = R^T (free, mu_tilde).
  Vector<T> reconstruct(const Vector<T>& free_part) const;
};

/// Throws RankDeficient if C is not of full row rank M <= N+1.
template <class T>
RotatedFrame<T> orthonormal_frame(const ConstraintMatrix<T>& matrix,
                                  const Vector<T>& values,
                                  std::uint64_t completion_seed);

}  // namespace superosc
