#include "superosc/constraints.hpp"

#include "superosc/errors.hpp"
#include "superosc/signal.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace superosc {

template <class T>
ConstraintSet<T> alternating_constraints(const T& lo, const T& hi, int m) {
  if (m < 1) throw std::invalid_argument("constraint count must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("constraint interval needs lo < hi");
  ConstraintSet<T> out;
  out.points.reserve(static_cast<std::size_t>(m));
  out.values.reserve(static_cast<std::size_t>(m));
  const T width = hi - lo;
  for (int j = 0; j < m; ++j) {
    out.points.push_back(lo + width * T(j) / T(m));
    out.values.push_back(j % 2 == 0 ? T(1) : T(-1));
  }
  return out;
}

template <class T>
ConstraintMatrix<T> constraint_matrix(const ConstraintSet<T>& constraints,
                                      int band_limit) {
  if (band_limit < 1) throw std::invalid_argument("band limit must be >= 1");
  if (constraints.points.size() != constraints.values.size()) {
    throw std::invalid_argument("constraint points and values differ in length");
  }
  Matrix<T> c(constraints.size(), band_limit + 1);
  for (int j = 0; j < constraints.size(); ++j) {
    c.row(j) = basis_values<T>(band_limit, constraints.points[j]).transpose();
  }
  return ConstraintMatrix<T>{std::move(c)};
}

template <class T>
T default_rank_tolerance() {
  const int digits = working_digits<T>();
  return pow10<T>(-(2 * digits + 1) / 3);
}

namespace {

// Minimal-norm solution of C A = mu for C of full row rank.
template <class T>
Vector<T> minimal_norm_solution(const Matrix<T>& c, const Vector<T>& mu) {
  Eigen::HouseholderQR<Matrix<T>> qr(c.transpose());
  const Eigen::Index m = c.rows();
  Matrix<T> r = qr.matrixQR().topLeftCorner(m, m).template triangularView<Eigen::Upper>();
  Vector<T> y = r.transpose().template triangularView<Eigen::Lower>().solve(mu);
  Matrix<T> q = qr.householderQ() * Matrix<T>::Identity(c.cols(), m);
  return q * y;
}

}  // namespace

template <class T>
ReducedConstraints<T> reduce_rank(const ConstraintMatrix<T>& matrix,
                                  const Vector<T>& values, const T& tol) {
  using std::abs;
  using std::max;
  if (!(tol > T(0))) throw std::invalid_argument("rank tolerance must be > 0");
  if (values.size() != matrix.entries.rows()) {
    throw std::invalid_argument("constraint values do not match matrix rows");
  }
  const Matrix<T> transposed = matrix.entries.transpose();
  Eigen::ColPivHouseholderQR<Matrix<T>> qr(transposed);
  qr.setThreshold(tol);
  const auto rank = qr.rank();

  std::vector<int> kept;
  for (Eigen::Index k = 0; k < rank; ++k) {
    kept.push_back(qr.colsPermutation().indices()(k));
  }
  std::sort(kept.begin(), kept.end());

  Matrix<T> c(static_cast<Eigen::Index>(kept.size()), matrix.entries.cols());
  Vector<T> mu(static_cast<Eigen::Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) {
    c.row(static_cast<Eigen::Index>(k)) = matrix.entries.row(kept[k]);
    mu(static_cast<Eigen::Index>(k)) = values(kept[k]);
  }

  T worst(0);
  if (static_cast<Eigen::Index>(kept.size()) < matrix.entries.rows()) {
    const Vector<T> particular = minimal_norm_solution<T>(c, mu);
    for (Eigen::Index j = 0; j < matrix.entries.rows(); ++j) {
      if (std::binary_search(kept.begin(), kept.end(), static_cast<int>(j))) continue;
      const T residual = abs(matrix.entries.row(j).dot(particular) - values(j));
      worst = max(worst, residual);
      if (residual >= tol * max(T(1), abs(values(j)))) {
        throw InfeasibleConstraints("constraint " + std::to_string(j) +
                                    " contradicts the independent constraints");
      }
    }
  }
  return ReducedConstraints<T>{ConstraintMatrix<T>{std::move(c)}, std::move(mu),
                               std::move(kept), worst};
}

template <class T>
Vector<T> RotatedFrame<T>::reconstruct(const Vector<T>& free_part) const {
  if (free_part.size() != free_dim) {
    throw std::invalid_argument("free part has wrong dimension");
  }
  Vector<T> rotated(rotation.rows());
  rotated.head(free_dim) = free_part;
  rotated.tail(mu_tilde.size()) = mu_tilde;
  return rotation.transpose() * rotated;
}

template <class T>
RotatedFrame<T> orthonormal_frame(const ConstraintMatrix<T>& matrix,
                                  const Vector<T>& values,
                                  std::uint64_t completion_seed) {
  using std::abs;
  const Eigen::Index m = matrix.entries.rows();
  const Eigen::Index dim = matrix.entries.cols();
  if (m < 1) throw std::invalid_argument("at least one constraint is required");
  if (m > dim) throw std::invalid_argument("no solution for M>N+1");
  if (values.size() != m) {
    throw std::invalid_argument("constraint values do not match matrix rows");
  }

  Eigen::HouseholderQR<Matrix<T>> qr(matrix.entries.transpose());
  const Matrix<T> r = qr.matrixQR().topLeftCorner(m, m).template triangularView<Eigen::Upper>();
  T largest(0);
  for (Eigen::Index k = 0; k < m; ++k) largest = std::max(largest, T(abs(r(k, k))));
  const T tol = default_rank_tolerance<T>();
  for (Eigen::Index k = 0; k < m; ++k) {
    if (abs(r(k, k)) <= tol * largest) {
      throw RankDeficient("constraint matrix is rank deficient; reduce rank first");
    }
  }
  const Matrix<T> q = qr.householderQ();

  RotatedFrame<T> frame;
  frame.free_dim = static_cast<int>(dim - m);
  frame.seed = completion_seed;
  frame.mu_tilde = r.transpose().template triangularView<Eigen::Lower>().solve(values);
  frame.rotation.resize(dim, dim);
  frame.rotation.bottomRows(m) = q.leftCols(m).transpose();

  if (frame.free_dim > 0) {
    // Random rotation of the deterministic complement from the QR.
    std::mt19937_64 rng(completion_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix<T> noise(frame.free_dim, frame.free_dim);
    for (Eigen::Index i = 0; i < noise.rows(); ++i) {
      for (Eigen::Index j = 0; j < noise.cols(); ++j) noise(i, j) = T(gauss(rng));
    }
    Eigen::HouseholderQR<Matrix<T>> mix(noise);
    const Matrix<T> g = mix.householderQ();
    frame.rotation.topRows(frame.free_dim) = (q.rightCols(frame.free_dim) * g).transpose();
  }
  return frame;
}

template struct RotatedFrame<double>;
template struct RotatedFrame<HighPrecision>;

#define SUPEROSC_INSTANTIATE(T)                                                       \
  template ConstraintSet<T> alternating_constraints(const T&, const T&, int);          \
  template ConstraintMatrix<T> constraint_matrix(const ConstraintSet<T>&, int);        \
  template T default_rank_tolerance<T>();                                              \
  template ReducedConstraints<T> reduce_rank(const ConstraintMatrix<T>&,               \
                                             const Vector<T>&, const T&);              \
  template RotatedFrame<T> orthonormal_frame(const ConstraintMatrix<T>&,               \
                                             const Vector<T>&, std::uint64_t);

SUPEROSC_INSTANTIATE(double)
SUPEROSC_INSTANTIATE(HighPrecision)
#undef SUPEROSC_INSTANTIATE

}  // namespace superosc
