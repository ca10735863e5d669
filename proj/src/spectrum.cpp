#include "superosc/spectrum.hpp"

#include "superosc/errors.hpp"
#include "spectrum_internal.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace superosc {

template <class T>
std::vector<T> GeneralizedSpectrum<T>::eigenvalues() const {
  std::vector<T> out;
  out.reserve(roots.size());
  for (const auto& root : roots) out.push_back(root.eigenvalue);
  return out;
}

template <class T>
BlockDecomposition<T> rotate_and_partition(const OverlapMatrix<T>& overlap,
                                           const RotatedFrame<T>& frame) {
  const Eigen::Index dim = overlap.entries.rows();
  if (frame.rotation.rows() != dim) {
    throw std::invalid_argument("frame and overlap matrix have different band limits");
  }
  const Eigen::Index nf = frame.free_dim;
  const Eigen::Index m = dim - nf;
  BlockDecomposition<T> blocks;
  blocks.rotated = frame.rotation * overlap.entries * frame.rotation.transpose();
  // Symmetrize away the rounding of the triple product.
  blocks.rotated = (blocks.rotated + blocks.rotated.transpose()) / T(2);
  blocks.delta_free = blocks.rotated.topLeftCorner(nf, nf);
  blocks.gamma = blocks.rotated.topRightCorner(nf, m);
  blocks.delta_fixed = blocks.rotated.bottomRightCorner(m, m);
  return blocks;
}

namespace {

template <class T>
T relative_bracket_tolerance() {
  if constexpr (is_high_precision_v<T>) {
    return pow10<T>(-(working_digits<T>() - 10));
  } else {
    return 8 * machine_epsilon<T>();
  }
}

// Bisection for a strictly decreasing function with f(lo+) > 0 > f(hi-).
// Endpoints are never evaluated. Splits geometrically while the bracket spans
// more than a factor of two on the positive axis, so roots many orders of
// magnitude below the bracket width are reached quickly.
template <class T, class F>
T bisect_decreasing(F&& f, T lo, T hi, bool& converged) {
  using std::abs;
  using std::sqrt;
  const T tol = relative_bracket_tolerance<T>();
  const T tiny = std::numeric_limits<T>::min();
  converged = false;
  for (int iter = 0; iter < 20000; ++iter) {
    T mid;
    if (lo < T(0) && hi > T(0)) {
      mid = T(0);
    } else if (lo == T(0)) {
      mid = hi / 1024;
    } else if (lo > T(0) && hi > 2 * lo) {
      mid = sqrt(lo * hi);
    } else if (hi == T(0)) {
      mid = lo / 1024;
    } else if (hi < T(0) && lo < 2 * hi) {
      mid = -sqrt(lo * hi);
    } else {
      mid = (lo + hi) / 2;
    }
    if (!(mid > lo && mid < hi)) {
      converged = true;
      return mid <= lo ? lo : hi;
    }
    const T value = f(mid);
    if (value > T(0)) {
      lo = mid;
    } else if (value < T(0)) {
      hi = mid;
    } else {
      converged = true;
      return mid;
    }
    const T scale = std::max(abs(lo), abs(hi));
    if (hi - lo <= tol * scale || scale < tiny) {
      converged = true;
      return (lo + hi) / 2;
    }
  }
  return (lo + hi) / 2;
}

template <class T>
std::string describe(const T& value) {
  std::ostringstream os;
  os.precision(8);
  os << value;
  return os.str();
}

template <class T>
void check_ordered_and_in_range(GeneralizedSpectrum<T>& spectrum,
                                std::vector<std::string>& diagnostics) {
  using std::abs;
  const T slack = 1000 * relative_bracket_tolerance<T>();
  for (std::size_t i = 0; i < spectrum.roots.size(); ++i) {
    const T& y = spectrum.roots[i].eigenvalue;
    if (y < -slack || y > T(1) + slack) {
      diagnostics.push_back("root " + std::to_string(i + 1) + " = " + describe(y) +
                            " lies outside [0, 1]");
    }
    if (i > 0) {
      const T& prev = spectrum.roots[i - 1].eigenvalue;
      if (!(y - prev > slack * std::max(abs(y), abs(prev)))) {
        diagnostics.push_back("roots " + std::to_string(i) + " and " +
                              std::to_string(i + 1) + " coincide at " + describe(y));
      }
    }
  }
}

template <class T>
void add_precision_warning(GeneralizedSpectrum<T>& spectrum) {
  if (spectrum.roots.empty()) return;
  const T trust = T(1e6) * pow10<T>(-working_digits<T>());
  if (spectrum.roots.front().eigenvalue < trust) {
    spectrum.warnings.push_back(
        "smallest eigenvalue " + describe(spectrum.roots.front().eigenvalue) +
        " is within 1e6 ulp of the working precision (" +
        std::to_string(working_digits<T>()) + " digits); increase --precision");
  }
}

template <class T>
SpectrumRoot<T> make_root(const BlockDecomposition<T>& blocks,
                          const RotatedFrame<T>& frame, const T& y,
                          Vector<T> free_part, const T& secular_residual,
                          bool attained) {
  const Vector<T> w = blocks.gamma * frame.mu_tilde;
  const Eigen::Index nf = blocks.free_dim();
  T stationarity(0);
  if (nf > 0) {
    stationarity = ((blocks.delta_free - y * Matrix<T>::Identity(nf, nf)) * free_part + w).norm();
  }
  CosineSignal<T> signal(frame.reconstruct(free_part));
  return SpectrumRoot<T>{y, std::move(free_part), std::move(signal), secular_residual,
                         stationarity, attained};
}

// M = N+1: the unique interpolant and its Rayleigh quotient.
template <class T>
GeneralizedSpectrum<T> unique_interpolant(const BlockDecomposition<T>& blocks,
                                          const RotatedFrame<T>& frame,
                                          SpectrumMethod method) {
  const Vector<T>& mu = frame.mu_tilde;
  const T y = mu.dot(blocks.delta_fixed * mu) / mu.squaredNorm();
  GeneralizedSpectrum<T> spectrum;
  spectrum.method = method;
  spectrum.roots.push_back(make_root(blocks, frame, y, Vector<T>(0), T(0), true));
  return spectrum;
}

template <class T>
void require_nonzero_mu(const RotatedFrame<T>& frame) {
  if (frame.mu_tilde.size() == 0 || frame.mu_tilde.squaredNorm() == T(0)) {
    throw std::invalid_argument("constrained coordinates are all zero");
  }
}

}  // namespace

template <class T>
GeneralizedSpectrum<T> secular_spectrum(const BlockDecomposition<T>& blocks,
                                        const RotatedFrame<T>& frame) {
  using std::abs;
  require_nonzero_mu(frame);
  const Eigen::Index nf = blocks.free_dim();
  if (nf == 0) return unique_interpolant(blocks, frame, SpectrumMethod::kSecular);

  const Vector<T>& mu = frame.mu_tilde;
  const T mu_norm2 = mu.squaredNorm();
  const T c = mu.dot(blocks.delta_fixed * mu) / mu_norm2;
  const Vector<T> w = blocks.gamma * mu;

  Eigen::SelfAdjointEigenSolver<Matrix<T>> eig(blocks.delta_free);
  if (eig.info() != Eigen::Success) {
    throw SolverFailure("eigendecomposition of the free block failed", {});
  }
  std::vector<T> d(eig.eigenvalues().data(), eig.eigenvalues().data() + nf);
  Matrix<T> u = eig.eigenvectors();
  Vector<T> v = u.transpose() * w;

  const T eps = machine_epsilon<T>();
  const T scale = std::max(abs(d.front()), abs(d.back()));

  // Clusters of equal poles: rotate inside the cluster so that the whole
  // weight sits on one vector and the others are deflated.
  for (Eigen::Index k = 0; k + 1 < nf;) {
    Eigen::Index end = k + 1;
    while (end < nf && d[end] - d[k] <= 8 * eps * scale) ++end;
    for (Eigen::Index j = k + 1; j < end; ++j) {
      const T r = hypot(v(k), v(j));
      if (r == T(0)) continue;
      const T cs = v(k) / r;
      const T sn = v(j) / r;
      const Vector<T> uk = u.col(k);
      u.col(k) = cs * uk + sn * u.col(j);
      u.col(j) = -sn * uk + cs * u.col(j);
      v(k) = r;
      v(j) = T(0);
    }
    k = end;
  }

  const T deflation = pow10<T>(-(9 * working_digits<T>()) / 10) *
                      std::max(T(v.norm()), T(scale));
  std::vector<Eigen::Index> active;
  std::vector<Eigen::Index> deflated;
  for (Eigen::Index k = 0; k < nf; ++k) {
    (abs(v(k)) <= deflation ? deflated : active).push_back(k);
  }

  // s(Y) normalized by |mu~|^2.
  auto secular = [&](const T& y) {
    T total = c - y;
    for (Eigen::Index k : active) {
      total -= v(k) * v(k) / mu_norm2 / (d[k] - y);
    }
    return total;
  };

  // Free coordinates for a root y, skipping deflated directions.
  auto free_part_at = [&](const T& y) {
    Vector<T> coeff = Vector<T>::Zero(nf);
    for (Eigen::Index k : active) coeff(k) = -v(k) / (d[k] - y);
    return Vector<T>(u * coeff);
  };

  std::vector<std::string> diagnostics;
  GeneralizedSpectrum<T> spectrum;
  spectrum.method = SpectrumMethod::kSecular;

  // Bracket endpoints: -inf, the active poles in ascending order, +inf.
  std::vector<T> poles;
  for (Eigen::Index k : active) poles.push_back(d[k]);
  const std::size_t branches = poles.size() + 1;
  for (std::size_t b = 0; b < branches; ++b) {
    T lo;
    T hi;
    bool bracketed = true;
    if (poles.empty()) {
      lo = std::min(T(0), c) - 1;
      hi = std::max(T(1), c) + 1;
    } else if (b == 0) {
      hi = poles.front();
      lo = std::min(hi, T(0)) - 1;
      for (int grow = 0; grow < 200 && !(secular(lo) > T(0)); ++grow) lo = 2 * lo - 1;
      bracketed = secular(lo) > T(0);
    } else if (b == poles.size()) {
      lo = poles.back();
      hi = std::max(lo, T(1)) + 1;
      for (int grow = 0; grow < 200 && !(secular(hi) < T(0)); ++grow) hi = 2 * hi + 1;
      bracketed = secular(hi) < T(0);
    } else {
      lo = poles[b - 1];
      hi = poles[b];
    }
    if (!bracketed) {
      diagnostics.push_back("could not bracket the root on branch " + std::to_string(b));
      continue;
    }
    bool converged = false;
    const T y = bisect_decreasing<T>(secular, lo, hi, converged);
    if (!converged) {
      diagnostics.push_back("bisection on branch " + std::to_string(b) + " did not converge");
    }
    spectrum.roots.push_back(make_root(blocks, frame, y, free_part_at(y),
                                       T(abs(secular(y))), true));
  }
  for (Eigen::Index k : deflated) {
    const T y = d[k];
    spectrum.roots.push_back(make_root(blocks, frame, y, free_part_at(y), T(0), false));
  }
  std::sort(spectrum.roots.begin(), spectrum.roots.end(),
            [](const SpectrumRoot<T>& x, const SpectrumRoot<T>& y) {
              return x.eigenvalue < y.eigenvalue;
            });

  if (spectrum.roots.size() != static_cast<std::size_t>(nf + 1)) {
    diagnostics.push_back("found " + std::to_string(spectrum.roots.size()) +
                          " roots, expected " + std::to_string(nf + 1));
  }
  check_ordered_and_in_range(spectrum, diagnostics);
  if (!diagnostics.empty()) {
    throw SolverFailure("secular solver failed", std::move(diagnostics));
  }
  if (!deflated.empty()) {
    spectrum.warnings.push_back(std::to_string(deflated.size()) +
                                " deflated pole(s) reported as unattained roots");
  }
  add_precision_warning(spectrum);
  return spectrum;
}

template <class T>
CosineSignal<T> fk_min_energy_signal(const RotatedFrame<T>& frame) {
  return CosineSignal<T>(frame.reconstruct(Vector<T>::Zero(frame.free_dim)));
}

template <class T>
std::vector<SlepianMode<T>> slepian_modes(const OverlapMatrix<T>& overlap) {
  Eigen::SelfAdjointEigenSolver<Matrix<T>> eig(overlap.entries);
  if (eig.info() != Eigen::Success) {
    throw SolverFailure("eigendecomposition of the overlap matrix failed", {});
  }
  std::vector<SlepianMode<T>> modes;
  const Eigen::Index n = overlap.entries.rows();
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    Vector<T> vec = eig.eigenvectors().col(k);
    vec /= vec.norm();
    modes.push_back(SlepianMode<T>{eig.eigenvalues()(k), CosineSignal<T>(std::move(vec))});
  }
  return modes;
}

template <class T>
Problem<T> build_problem(const Domain<T>& domain, const ConstraintSet<T>& constraints,
                         int band_limit, std::uint64_t completion_seed) {
  OverlapMatrix<T> overlap = overlap_matrix(domain, band_limit);
  const ConstraintMatrix<T> full = constraint_matrix(constraints, band_limit);
  if (constraints.size() > band_limit + 1) {
    throw std::invalid_argument("no solution for M>N+1");
  }
  Vector<T> values(constraints.size());
  for (int j = 0; j < constraints.size(); ++j) values(j) = constraints.values[j];
  ReducedConstraints<T> reduced = reduce_rank(full, values, default_rank_tolerance<T>());
  RotatedFrame<T> frame = orthonormal_frame(reduced.matrix, reduced.values, completion_seed);
  BlockDecomposition<T> blocks = rotate_and_partition(overlap, frame);
  return Problem<T>{std::move(overlap), constraints, std::move(reduced), std::move(frame),
                    std::move(blocks)};
}

namespace detail {

// Shared with polynomial_spectrum.cpp.
template <class T>
GeneralizedSpectrum<T> unique_interpolant_spectrum(const BlockDecomposition<T>& blocks,
                                                   const RotatedFrame<T>& frame) {
  return unique_interpolant(blocks, frame, SpectrumMethod::kPolynomial);
}

template <class T>
SpectrumRoot<T> spectrum_root(const BlockDecomposition<T>& blocks,
                              const RotatedFrame<T>& frame, const T& y,
                              Vector<T> free_part, const T& residual) {
  return make_root(blocks, frame, y, std::move(free_part), residual, true);
}

template <class T>
void finalize_spectrum(GeneralizedSpectrum<T>& spectrum, std::size_t expected,
                       std::vector<std::string> diagnostics) {
  if (spectrum.roots.size() != expected) {
    diagnostics.push_back("found " + std::to_string(spectrum.roots.size()) +
                          " roots, expected " + std::to_string(expected));
  }
  check_ordered_and_in_range(spectrum, diagnostics);
  if (!diagnostics.empty()) {
    throw SolverFailure("polynomial solver failed", std::move(diagnostics));
  }
  add_precision_warning(spectrum);
}

template <class T>
T bisect_root(const std::function<T(const T&)>& f, const T& lo, const T& hi,
              bool decreasing, bool& converged) {
  if (decreasing) return bisect_decreasing<T>(f, lo, hi, converged);
  return bisect_decreasing<T>([&](const T& y) { return -f(y); }, lo, hi, converged);
}

}  // namespace detail

#define SUPEROSC_INSTANTIATE(T)                                                           \
  template struct GeneralizedSpectrum<T>;                                                 \
  template BlockDecomposition<T> rotate_and_partition(const OverlapMatrix<T>&,            \
                                                      const RotatedFrame<T>&);            \
  template GeneralizedSpectrum<T> secular_spectrum(const BlockDecomposition<T>&,          \
                                                   const RotatedFrame<T>&);               \
  template CosineSignal<T> fk_min_energy_signal(const RotatedFrame<T>&);                  \
  template std::vector<SlepianMode<T>> slepian_modes(const OverlapMatrix<T>&);            \
  template Problem<T> build_problem(const Domain<T>&, const ConstraintSet<T>&, int,       \
                                    std::uint64_t);                                       \
  template GeneralizedSpectrum<T> detail::unique_interpolant_spectrum(                    \
      const BlockDecomposition<T>&, const RotatedFrame<T>&);                              \
  template SpectrumRoot<T> detail::spectrum_root(const BlockDecomposition<T>&,            \
                                                 const RotatedFrame<T>&, const T&,        \
                                                 Vector<T>, const T&);                    \
  template void detail::finalize_spectrum(GeneralizedSpectrum<T>&, std::size_t,           \
                                          std::vector<std::string>);                      \
  template T detail::bisect_root(const std::function<T(const T&)>&, const T&, const T&,   \
                                 bool, bool&);

SUPEROSC_INSTANTIATE(double)
SUPEROSC_INSTANTIATE(HighPrecision)
#undef SUPEROSC_INSTANTIATE

}  // namespace superosc
