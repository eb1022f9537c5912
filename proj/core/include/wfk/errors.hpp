#pragma once

#include <stdexcept>
#include <string>

namespace wfk {

/// Input outside the mathematical domain of an operation (invalid
/// parameters, evaluation point outside [-1, 1], tolerance <= 0, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two functions built over different (a, b) parameter pairs were combined.
class ParamMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bound degenerated to something useless (e.g. a lower covering bound
/// that is <= 0). Raised instead of silently returning a vacuous value.
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wfk
