#pragma once

#include <stdexcept>
#include <string>

namespace bewit {

/// A parameter point lies outside the admissible set. `constraint()` names
/// the violated condition (e.g. "delta > 0").
class OutsideDomain : public std::invalid_argument {
 public:
  OutsideDomain(std::string constraint, const std::string& detail)
      : std::invalid_argument("outside domain: " + constraint + " (" + detail + ")"),
        constraint_(std::move(constraint)) {}

  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

/// The reduced 2x2 form has no negative eigenvalue, so there is no direction
/// (a, b) that violates the inequality.
class NoViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative routine hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bewit
