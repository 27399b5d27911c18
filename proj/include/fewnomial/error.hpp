#pragma once

#include <stdexcept>
#include <string>

namespace fewnomial {

/// A genericity assumption failed at runtime. The target says which random
/// choice has to be re-drawn: the Morse direction u or the simplex M.
class GenericityError : public std::runtime_error {
 public:
  enum class Target { direction, simplex };

  GenericityError(Target target, const std::string& what)
      : std::runtime_error(what), target_(target) {}

  Target target() const noexcept { return target_; }

 private:
  Target target_;
};

/// Retry budget for a genericity re-draw (or the shift doubling) ran out.
class GenericityExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A stratum produced more critical points than the fewnomial system bound
/// allows. This is never a valid state: it means duplicated roots or broken
/// genericity.
class BoundViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative stabilization (resolution or truncation doubling) did not
/// settle within its budget.
class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance input. The code doubles as the CLI exit status.
class InputError : public std::runtime_error {
 public:
  enum class Code { malformed = 4, zero_coefficient = 5, dimension_mismatch = 6 };

  InputError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

}  // namespace fewnomial
