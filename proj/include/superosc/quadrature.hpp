#pragma once

#include "superosc/real.hpp"

#include <functional>
#include <vector>

namespace superosc {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], computed
/// by Newton iteration at the working precision of T.
template <class T>
struct GaussLegendreRule {
  std::vector<T> nodes;
  std::vector<T> weights;
};

template <class T>
GaussLegendreRule<T> gauss_legendre(int points);

/// Adaptive Gauss-Legendre integration: an interval is accepted when the
/// rule on it and on its two halves agree to rel_tol times the running
/// estimate of the integral of |f|.
template <class T>
T integrate(const std::function<T(const T&)>& f, const T& lo, const T& hi,
            const T& rel_tol);

}  // namespace superosc
