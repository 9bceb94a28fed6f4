#pragma once

#include <stdexcept>
#include <string>

namespace bdf3ns {

/// A field that must be mean-free carries a mean beyond tolerance.
class MeanViolation : public std::domain_error {
 public:
  explicit MeanViolation(double mean_value)
      : std::domain_error("field mean " + std::to_string(mean_value) + " exceeds the zero-mean tolerance"),
        mean_(mean_value) {}
  double mean() const noexcept { return mean_; }

 private:
  double mean_;
};

/// Operands live on different grids.
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operator does not hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A multistep integrator was called without enough history levels.
class StartupRequired : public std::logic_error {
 public:
  StartupRequired(int required, int available)
      : std::logic_error("integrator needs " + std::to_string(required) + " history levels, have " +
                         std::to_string(available)),
        required_(required),
        available_(available) {}
  int required() const noexcept { return required_; }
  int available() const noexcept { return available_; }

 private:
  int required_;
  int available_;
};

/// A time step produced NaN or Inf values.
class NonFiniteField : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration or missing configuration data.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The telescope coefficient search did not converge.
class SolverFailure : public std::runtime_error {
 public:
  explicit SolverFailure(double best_residual)
      : std::runtime_error("telescope coefficient search failed; best residual " + std::to_string(best_residual)),
        best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace bdf3ns
