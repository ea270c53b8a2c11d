#pragma once

#include <stdexcept>
#include <string>

namespace celestial {

// malformed or invalid user input (CLI exit 1)
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input violates an operation's precondition
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// construction collapses to something that is not a surface (CLI exit 2)
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// configuration outside what the solvers handle
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace celestial
