#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace superosc {

/// Malformed or out-of-range superoscillation domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An eliminated constraint contradicts the ones that were kept.
class InfeasibleConstraints : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The constraint matrix lost row rank; run reduce_rank first.
class RankDeficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The eigenvalue solver could not produce the expected root set.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, std::vector<std::string> diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}

  const std::vector<std::string>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  std::vector<std::string> diagnostics_;
};

}  // namespace superosc
