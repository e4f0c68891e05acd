#pragma once

#include <stdexcept>
#include <string>

namespace bimat {

// Violated operation precondition (bad dimensions, caps exceeded, non-prime
// modulus, ...).  The CLI maps this to exit code 2.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input document.  The CLI maps this to exit code 1.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bimat
