#ifndef REGTESS_ERRORS_HPP
#define REGTESS_ERRORS_HPP

#include <stdexcept>

namespace regtess {

/// Caller supplied a value outside an operation's domain.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// (p,q) is Euclidean or spherical. Kept apart from a negative verdict.
class NotHyperbolic : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// A desk-scale cap (enumeration degree, patch depth) was exceeded.
class LimitExceeded : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// An involution was offered as a witness but (sigma rho)^q != 1.
class InvalidWitness : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A constructed object failed its own numeric invariants.
class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace regtess

#endif // REGTESS_ERRORS_HPP
