#pragma once

// Pieces of the secular solver reused by the polynomial cross-check.

#include "superosc/spectrum.hpp"

#include <functional>
#include <string>
#include <vector>

namespace superosc::detail {

template <class T>
GeneralizedSpectrum<T> unique_interpolant_spectrum(const BlockDecomposition<T>& blocks,
                                                   const RotatedFrame<T>& frame);

template <class T>
SpectrumRoot<T> spectrum_root(const BlockDecomposition<T>& blocks,
                              const RotatedFrame<T>& frame, const T& y,
                              Vector<T> free_part, const T& residual);

/// Checks count, ordering and range; throws SolverFailure with the collected
/// diagnostics.
template <class T>
void finalize_spectrum(GeneralizedSpectrum<T>& spectrum, std::size_t expected,
                       std::vector<std::string> diagnostics);

/// Bisection of a monotone function bracketed on (lo, hi).
template <class T>
T bisect_root(const std::function<T(const T&)>& f, const T& lo, const T& hi,
              bool decreasing, bool& converged);

}  // namespace superosc::detail
