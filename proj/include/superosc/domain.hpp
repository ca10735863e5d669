#pragma once

#include "superosc/real.hpp"

#include <string>
#include <utility>
#include <vector>

namespace superosc {

/// Superoscillation region: a finite union of disjoint open subintervals of
/// (-pi, pi), kept sorted.
template <class T>
class Domain {
 public:
  using Interval = std::pair<T, T>;

  /// Validates and canonicalizes: sorts, merges intervals whose gap is below
  /// 1e-15, and clamps endpoints within 1e-15 of +-pi onto +-pi.
  /// Throws DomainError for empty input, reversed or out-of-range intervals,
  /// and overlaps.
  explicit Domain(std::vector<Interval> intervals);

  /// (-a, a).
  static Domain centered(const T& half_width);

  /// (-pi, pi).
  static Domain full_period();

  const std::vector<Interval>& intervals() const { return intervals_; }

  /// Total length of the intervals.
  T measure() const;

  bool contains(const T& t) const;

 private:
  std::vector<Interval> intervals_;
};

/// (-b, -a) U (a, b); for a == 0 the single interval (-b, b).
/// Throws std::invalid_argument unless 0 <= a < b <= pi.
template <class T>
Domain<T> symmetric_pair(const T& a, const T& b);

/// Parses "lo,hi;lo,hi;..." (radians; "pi" and "-pi" allowed).
template <class T>
Domain<T> parse_domain(const std::string& text);

/// Gram matrix of the orthonormal cosine basis restricted to a domain.
template <class T>
struct OverlapMatrix {
  int band_limit = 0;
  Matrix<T> entries;
  Domain<T> domain;
};

/// Builds Delta_mn = integral over the domain of phi_m(t) phi_n(t) dt from the
/// closed-form antiderivatives of cos(mt)cos(nt), summed interval by interval.
/// The result is symmetric by construction.
template <class T>
OverlapMatrix<T> overlap_matrix(const Domain<T>& domain, int band_limit);

}  // namespace superosc
