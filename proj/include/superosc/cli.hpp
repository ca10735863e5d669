#pragma once

#include "superosc/document.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace superosc::cli {

/// Invalid command-line configuration (exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  /// design | spectrum | baseline | sweep
  std::string command;
  int band_limit = 10;
  int constraints = 5;
  /// interval | annulus | general
  std::string domain_kind = "interval";
  /// {a} for interval, {a, b} for annulus, {"lo,hi;..."} for general.
  std::vector<std::string> domain_values{"1"};
  /// Significant digits; 16 or fewer runs in double.
  int precision = 100;
  /// secular | polynomial | both
  std::string method = "secular";
  std::uint64_t seed = 1;
  /// json | csv
  std::string format = "json";
  /// Points per exported series; negative selects the command default.
  int samples = -1;
  std::string out;
  /// Sweep grids. Values of a may be written as fractions ("1/64").
  std::vector<std::string> a_values;
  std::vector<int> m_values;
};

/// Parses argv into a RunConfig. Throws ConfigError on bad flags or values.
RunConfig parse_arguments(int argc, const char* const* argv);

/// Throws ConfigError for N < 1, M < 1, M > N+1 ("no solution for M>N+1"),
/// fewer than 15 digits, or an unknown method/format/command.
void validate(const RunConfig& config);

/// Runs one command. Throws ConfigError / std::invalid_argument for bad
/// input and SolverFailure (or other runtime errors) for numerical failure.
ResultDocument execute(const RunConfig& config);

ResultDocument cmd_design(const RunConfig& config);
ResultDocument cmd_spectrum(const RunConfig& config);
ResultDocument cmd_baseline(const RunConfig& config);
ResultDocument cmd_sweep(const RunConfig& config);

/// Full program: parse, execute, write the document to --out (or `out`).
/// Returns 0 on success, 2 on invalid input, 3 on solver failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superosc::cli
