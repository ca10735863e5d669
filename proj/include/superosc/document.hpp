#pragma once

// Result documents written by the command-line tool.
//
// All real numbers are carried as decimal strings so that values such as
// 1e-26 computed at 100 digits survive JSON consumers unchanged. Optional
// sections are empty vectors when absent.

#include <cstdint>
#include <string>
#include <vector>

namespace superosc {

struct ConfigEcho {
  std::string command;
  int band_limit = 0;
  int constraints = 0;
  /// "interval", "annulus" or "general".
  std::string domain_kind;
  /// Canonical "lo,hi;lo,hi" form of the domain actually solved.
  std::string domain;
  /// Window [lo, hi] holding the alternating constraint points.
  std::string constraint_window;
  int precision = 0;
  /// "double" or "mpfr".
  std::string scalar;
  std::string method;
  std::uint64_t seed = 0;
  std::string format;
  int samples = 0;
  std::vector<std::string> a_values;
  std::vector<int> m_values;

  bool operator==(const ConfigEcho&) const = default;
};

struct RootRecord {
  /// 1-based, ascending eigenvalue order.
  int index = 0;
  std::string eigenvalue;
  bool attained = true;
  std::vector<std::string> coefficients;
  std::string yield_algebraic;
  std::string yield_quadrature;
  int crossings = 0;
  std::string secular_residual;
  std::string stationarity_residual;
  /// max_j |f(t_j) - mu_j|.
  std::string constraint_residual;

  bool operator==(const RootRecord&) const = default;
};

struct CrossMethodRecord {
  int index = 0;
  std::string secular;
  std::string polynomial;
  std::string relative_delta;

  bool operator==(const CrossMethodRecord&) const = default;
};

struct SignalRecord {
  std::string label;
  std::string eigenvalue;
  std::string energy;
  std::string yield_algebraic;
  std::string yield_quadrature;
  std::vector<std::string> coefficients;

  bool operator==(const SignalRecord&) const = default;
};

struct SweepRecord {
  std::string parameter;
  int index = 0;
  std::string eigenvalue;
  std::string normalized;

  bool operator==(const SweepRecord&) const = default;
};

struct SlopeRecord {
  int index = 0;
  std::string slope;
  int expected = 0;

  bool operator==(const SlopeRecord&) const = default;
};

/// Sampled signal for plotting. log10_magnitude holds log10 |f(t)|, or
/// "-inf" where f vanishes exactly.
struct SeriesRecord {
  std::string name;
  int index = 0;
  std::vector<std::string> t;
  std::vector<std::string> value;
  std::vector<std::string> log10_magnitude;

  bool operator==(const SeriesRecord&) const = default;
};

struct Diagnostics {
  std::uint64_t seed = 0;
  std::vector<int> kept_constraint_rows;
  std::string eliminated_residual;
  std::string mu_tilde_norm2;
  std::vector<std::string> warnings;
  std::vector<std::string> failures;

  bool operator==(const Diagnostics&) const = default;
};

struct ResultDocument {
  ConfigEcho config;
  std::vector<RootRecord> roots;
  std::vector<CrossMethodRecord> cross_method;
  /// Minimum-energy interpolant and the yield-optimal signal it is compared
  /// against (baseline command only).
  std::vector<SignalRecord> baseline;
  std::vector<SignalRecord> slepian;
  std::vector<SweepRecord> sweep;
  std::vector<SlopeRecord> slopes;
  std::vector<SeriesRecord> series;
  Diagnostics diagnostics;

  bool operator==(const ResultDocument&) const = default;
};

/// Pretty-printed JSON with sorted keys and a trailing newline.
std::string to_json(const ResultDocument& doc);

/// Throws std::invalid_argument on malformed input or missing fields.
ResultDocument from_json(const std::string& text);

/// Main table: eigenvalue rows (index, eigenvalue, yield_quadrature,
/// crossings) for design/spectrum, Slepian and baseline rows for baseline,
/// (parameter, index, eigenvalue, normalized) for sweeps.
std::string to_csv(const ResultDocument& doc);

/// t,value,log10_magnitude rows of one series.
std::string series_to_csv(const SeriesRecord& series);

}  // namespace superosc
