#pragma once

#include <stdexcept>
#include <string>

namespace adw {

/// Malformed or shape-inconsistent input. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A structure that an operation requires to be verified is not. Maps to exit code 1.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace adw
