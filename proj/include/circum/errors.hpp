#pragma once

#include <stdexcept>

namespace circum {

/// An exhaustive procedure was asked to run above its size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that violates the documented precondition of a procedure.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace circum
