#pragma once

#include <stdexcept>
#include <string>

namespace qlogic {

/// Dimension disagreement between operands.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Division by zero and friends.
struct ArithmeticError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Violation of a domain precondition (zero state vector, trivial state
/// subspace, singular Gram matrix).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed scalar/vector/scenario text.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A structurally well-formed input that fails semantic validation
/// (context orthogonality/completeness, unresolved names, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qlogic
