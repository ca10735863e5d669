#include "superosc/errors.hpp"
#include "superosc/spectrum.hpp"
#include "spectrum_internal.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace superosc {

namespace {

template <class T>
T horner(const std::vector<T>& coeffs, const T& x) {
  T acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class T>
std::vector<T> derivative(const std::vector<T>& coeffs) {
  std::vector<T> out;
  for (std::size_t k = 1; k < coeffs.size(); ++k) out.push_back(T(static_cast<int>(k)) * coeffs[k]);
  return out;
}

template <class T>
int sign_of(const T& x) {
  return (x > T(0)) - (x < T(0));
}

// Real roots of a polynomial whose roots are all real and simple. The roots
// of P' separate those of P, so each gap between consecutive critical points
// holds at most one root and P is monotone there.
template <class T>
std::vector<T> real_roots(const std::vector<T>& coeffs, std::vector<std::string>& diagnostics) {
  using std::abs;
  const std::size_t degree = coeffs.size() - 1;
  if (degree == 0) return {};
  if (degree == 1) return {-coeffs[0] / coeffs[1]};

  T bound(0);
  for (std::size_t k = 0; k < degree; ++k) bound = std::max(bound, T(abs(coeffs[k] / coeffs[degree])));
  bound += 1;

  std::vector<T> edges{-bound};
  for (const T& x : real_roots(derivative(coeffs), diagnostics)) edges.push_back(x);
  edges.push_back(bound);

  std::vector<T> roots;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const T& lo = edges[k];
    const T& hi = edges[k + 1];
    const int s_lo = sign_of(horner(coeffs, lo));
    const int s_hi = sign_of(horner(coeffs, hi));
    if (s_lo == 0 || s_hi == 0) {
      // A root on a critical point is a multiple root.
      if (s_hi == 0 && k + 2 < edges.size()) {
        diagnostics.push_back("multiple root of the yield polynomial near an extremum");
      }
      continue;
    }
    if (s_lo == s_hi) continue;
    bool converged = false;
    const std::function<T(const T&)> f = [&](const T& y) { return horner(coeffs, y); };
    roots.push_back(detail::bisect_root<T>(f, lo, hi, s_lo > 0, converged));
    if (!converged) diagnostics.push_back("polynomial bisection did not converge");
  }
  return roots;
}

}  // namespace

template <class T>
std::vector<T> yield_polynomial(const BlockDecomposition<T>& blocks, const Vector<T>& mu_tilde) {
  const Eigen::Index n = blocks.free_dim();
  const Matrix<T>& a = blocks.delta_free;
  const Vector<T> w = blocks.gamma * mu_tilde;
  const T fixed = mu_tilde.dot(blocks.delta_fixed * mu_tilde);
  const T mu_norm2 = mu_tilde.squaredNorm();

  // Faddeev-LeVerrier: det(xI - A) = sum charpoly[k] x^k and
  // adj(xI - A) = sum_{k=1..n} M_k x^(n-k).
  std::vector<T> charpoly(static_cast<std::size_t>(n + 1), T(0));
  std::vector<T> cofactor(static_cast<std::size_t>(std::max<Eigen::Index>(n, 1)), T(0));
  charpoly[static_cast<std::size_t>(n)] = T(1);
  Matrix<T> mk = Matrix<T>::Zero(n, n);
  const Matrix<T> eye = Matrix<T>::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = a * mk + charpoly[static_cast<std::size_t>(n - k + 1)] * eye;
    cofactor[static_cast<std::size_t>(n - k)] = w.dot(mk * w);
    charpoly[static_cast<std::size_t>(n - k)] = -(a * mk).trace() / T(static_cast<int>(k));
  }

  // P(Y) = (fixed - Y |mu~|^2) det(YI - A) + w^T adj(YI - A) w.
  std::vector<T> out(static_cast<std::size_t>(n + 2), T(0));
  for (Eigen::Index k = 0; k <= n; ++k) {
    out[static_cast<std::size_t>(k)] += fixed * charpoly[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k + 1)] -= mu_norm2 * charpoly[static_cast<std::size_t>(k)];
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] += cofactor[static_cast<std::size_t>(k)];
  }
  return out;
}

namespace {

template <class T>
struct RootSet {
  std::vector<T> roots;
  std::vector<T> residuals;
  std::vector<std::string> diagnostics;
};

template <class T>
RootSet<T> roots_at_working_precision(const BlockDecomposition<T>& blocks,
                                      const Vector<T>& mu_tilde) {
  using std::abs;
  RootSet<T> out;
  const std::vector<T> coeffs = yield_polynomial(blocks, mu_tilde);
  T coeff_scale(0);
  for (const T& x : coeffs) coeff_scale = std::max(coeff_scale, T(abs(x)));
  out.roots = real_roots(coeffs, out.diagnostics);
  for (const T& y : out.roots) out.residuals.push_back(T(abs(horner(coeffs, y)) / coeff_scale));
  return out;
}

bool plausible(const RootSet<HighPrecision>& set, std::size_t expected) {
  if (!set.diagnostics.empty() || set.roots.size() != expected) return false;
  return std::all_of(set.roots.begin(), set.roots.end(), [](const HighPrecision& y) {
    return y >= 0 && y <= 1;
  });
}

template <class Derived>
Matrix<HighPrecision> widened(const Eigen::MatrixBase<Derived>& m, unsigned digits) {
  Matrix<HighPrecision> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = HighPrecision(m(i, j), digits);
  }
  return out;
}

// The expanded polynomial loses roughly as many digits as the spread of the
// spectrum, so a failed root search is repeated with the block entries
// carried to 2x, 4x and 8x the working digits.
RootSet<HighPrecision> find_roots(const BlockDecomposition<HighPrecision>& blocks,
                                  const Vector<HighPrecision>& mu_tilde, std::size_t expected) {
  const unsigned digits = static_cast<unsigned>(working_digits<HighPrecision>());
  RootSet<HighPrecision> first = roots_at_working_precision(blocks, mu_tilde);
  if (plausible(first, expected)) return first;
  for (unsigned factor = 2; factor <= 8; factor *= 2) {
    RootSet<HighPrecision> wide;
    {
      const unsigned wide_digits = digits * factor;
      PrecisionScope scope(wide_digits);
      BlockDecomposition<HighPrecision> b;
      b.delta_free = widened(blocks.delta_free, wide_digits);
      b.gamma = widened(blocks.gamma, wide_digits);
      b.delta_fixed = widened(blocks.delta_fixed, wide_digits);
      b.rotated = blocks.rotated;
      wide = roots_at_working_precision(b, Vector<HighPrecision>(widened(mu_tilde, wide_digits)));
    }
    if (plausible(wide, expected)) {
      for (auto& y : wide.roots) y = HighPrecision(y, digits);
      for (auto& r : wide.residuals) r = HighPrecision(r, digits);
      wide.diagnostics.push_back("polynomial roots needed " + std::to_string(digits * factor) +
                                 " digits");
      return wide;
    }
  }
  return first;
}

RootSet<double> find_roots(const BlockDecomposition<double>& blocks,
                           const Vector<double>& mu_tilde, std::size_t) {
  return roots_at_working_precision(blocks, mu_tilde);
}

}  // namespace

template <class T>
GeneralizedSpectrum<T> polynomial_spectrum(const BlockDecomposition<T>& blocks,
                                           const RotatedFrame<T>& frame) {
  if (frame.mu_tilde.size() == 0 || frame.mu_tilde.squaredNorm() == T(0)) {
    throw std::invalid_argument("constrained coordinates are all zero");
  }
  const Eigen::Index n = blocks.free_dim();
  if (n == 0) return detail::unique_interpolant_spectrum(blocks, frame);

  const auto expected = static_cast<std::size_t>(n + 1);
  RootSet<T> found = find_roots(blocks, frame.mu_tilde, expected);

  const Vector<T> w = blocks.gamma * frame.mu_tilde;
  const Matrix<T> eye = Matrix<T>::Identity(n, n);
  GeneralizedSpectrum<T> spectrum;
  spectrum.method = SpectrumMethod::kPolynomial;
  for (std::size_t k = 0; k < found.roots.size(); ++k) {
    const T& y = found.roots[k];
    Eigen::PartialPivLU<Matrix<T>> lu(blocks.delta_free - y * eye);
    Vector<T> free_part = lu.solve(Vector<T>(-w));
    spectrum.roots.push_back(
        detail::spectrum_root(blocks, frame, y, std::move(free_part), found.residuals[k]));
  }
  std::sort(spectrum.roots.begin(), spectrum.roots.end(),
            [](const SpectrumRoot<T>& x, const SpectrumRoot<T>& y) {
              return x.eigenvalue < y.eigenvalue;
            });
  std::vector<std::string> notes;
  std::vector<std::string> failures;
  for (auto& d : found.diagnostics) {
    (d.rfind("polynomial roots needed", 0) == 0 ? notes : failures).push_back(std::move(d));
  }
  detail::finalize_spectrum(spectrum, expected, std::move(failures));
  for (auto& d : notes) spectrum.warnings.push_back(std::move(d));
  return spectrum;
}

template std::vector<double> yield_polynomial(const BlockDecomposition<double>&,
                                              const Vector<double>&);
template std::vector<HighPrecision> yield_polynomial(const BlockDecomposition<HighPrecision>&,
                                                     const Vector<HighPrecision>&);
template GeneralizedSpectrum<double> polynomial_spectrum(const BlockDecomposition<double>&,
                                                         const RotatedFrame<double>&);
template GeneralizedSpectrum<HighPrecision> polynomial_spectrum(
    const BlockDecomposition<HighPrecision>&, const RotatedFrame<HighPrecision>&);

}  // namespace superosc
