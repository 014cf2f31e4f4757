#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lqres {

// Malformed text or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (e.g. quotient by a non-divisor).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Mixed degrees inside a polynomial, or a matrix entry of the wrong degree.
class HomogeneityError : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

// Rejected ideal presentation (zero generator, mixed degrees, dependence).
class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A lift during the horseshoe construction had no solution. This is how a
// false linear-quotients certificate surfaces.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::size_t step, std::size_t position, const std::string& what)
      : std::runtime_error("construction failed at step k=" + std::to_string(step) +
                           ", position i=" + std::to_string(position) + ": " + what),
        step_(step),
        position_(position) {}

  std::size_t step() const noexcept { return step_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t step_;
  std::size_t position_;
};

}  // namespace lqres
