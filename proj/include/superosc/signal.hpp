#pragma once

#include "superosc/real.hpp"

#include <utility>
#include <vector>

namespace superosc {

/// Even, 2pi-periodic band-limited signal
///
///   f(t) = A_0 / sqrt(2 pi) + sum_{m=1..N} A_m cos(m t) / sqrt(pi)
///
/// stored by its coefficients in that orthonormal cosine basis.
template <class T>
class CosineSignal {
 public:
  /// Throws std::invalid_argument unless coeffs has at least two entries
  /// (band limit >= 1) and every entry is finite.
  explicit CosineSignal(Vector<T> coeffs);

  /// All-zero signal with the given band limit.
  static CosineSignal zero(int band_limit);

  int band_limit() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Vector<T>& coeffs() const { return coeffs_; }

  /// Direct summation of the cosine series.
  T evaluate(const T& t) const;

  /// Sum of squared coefficients, i.e. the integral of f^2 over one period.
  T energy_per_period() const;

  /// `count` equally spaced (t, f(t)) pairs from lo to hi inclusive.
  std::vector<std::pair<T, T>> sample(const T& lo, const T& hi,
                                      int count) const;

 private:
  Vector<T> coeffs_;
};

/// Row vector of basis-function values at t: (1/sqrt(2pi), cos(t)/sqrt(pi),
/// ..., cos(Nt)/sqrt(pi)). Its dot product with coefficients is f(t).
template <class T>
Vector<T> basis_values(int band_limit, const T& t);

}  // namespace superosc
