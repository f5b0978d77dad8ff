#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eplab {

// Argument outside the mathematical domain of an operation (negative
// density handed to an EOS call, mismatched array lengths, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Structural misuse: inputs that are individually valid but violate a
// documented precondition (wall-incompatible velocity, misaligned
// sample times, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Neumann problems need a mean-free right hand side.
struct CompatibilityError : std::runtime_error {
  double defect;
  CompatibilityError(const std::string& msg, double defect_)
      : std::runtime_error(msg), defect(defect_) {}
};

// Newton loop exhausted its iteration budget.
struct NonconvergenceError : std::runtime_error {
  int iterations;
  double residual;
  NonconvergenceError(const std::string& msg, int iters, double res)
      : std::runtime_error(msg), iterations(iters), residual(res) {}
};

struct TimestepCollapseError : std::runtime_error {
  double dt;
  TimestepCollapseError(const std::string& msg, double dt_)
      : std::runtime_error(msg), dt(dt_) {}
};

// Raised when the vacuum floor stays active over too many cells for
// too many consecutive steps; such runs are outside the regime the
// scheme is trusted in.
struct VacuumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File or directory the caller asked for cannot be produced.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries every violation found while parsing a config, not just the
// first one.
struct ConfigError : std::runtime_error {
  std::vector<std::string> violations;
  explicit ConfigError(std::vector<std::string> v)
      : std::runtime_error(join(v)), violations(std::move(v)) {}

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "config error";
    for (const auto& s : v) {
      out += "\n  - ";
      out += s;
    }
    return out;
  }
};

}  // namespace eplab
