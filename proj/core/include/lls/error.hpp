#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lls {

// Malformed or out-of-contract input: wrong shapes, unknown indices, bad
// scalars. The CLI maps these to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Well-formed input that fails a mathematical validation (not exact, not
// minimal, gluing failure, ...). The CLI maps these to exit code 1.
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a consecutive pair of a level-delta series cannot be glued.
// Positions refer to the ordered index set Delta.
class GluingFailure : public ValidationFailure {
 public:
  GluingFailure(std::size_t left, std::size_t right, const std::string& what)
      : ValidationFailure(what), left_(left), right_(right) {}

  std::size_t left() const noexcept { return left_; }
  std::size_t right() const noexcept { return right_; }

 private:
  std::size_t left_;
  std::size_t right_;
};

// A caller invoked an operation outside the hypotheses it is defined under.
class HypothesisViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lls
