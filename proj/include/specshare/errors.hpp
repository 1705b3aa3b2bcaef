#pragma once

#include <stdexcept>
#include <string>

namespace specshare {

// A statistical moment that does not exist for the requested model.
struct UndefinedMomentError : std::domain_error {
  using std::domain_error::domain_error;
};

// A (model, model) combination outside the supported closed forms.
struct UnsupportedCombinationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An iteration or bracket expansion hit its limit before converging.
struct NonConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A constraint target that no admissible dual variable can meet.
struct InfeasibleTargetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scenario-file validation failure with location diagnostics.
struct ScenarioError : std::runtime_error {
  ScenarioError(int line_no, std::string field_name, const std::string& message)
      : std::runtime_error(message), line(line_no), field(std::move(field_name)) {}
  int line;          // 0 when the failure is not tied to a specific line
  std::string field; // empty when not tied to a specific field
};

}  // namespace specshare
