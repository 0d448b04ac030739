#pragma once

#include <stdexcept>
#include <string>

namespace kn {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact division by zero (scalar, polynomial or rational function).
struct zero_division : error {
    zero_division() : error("division by zero") {}
    explicit zero_division(const std::string& what) : error(what) {}
};

// Operation applied to forms whose weights do not fit the operation.
struct weight_mismatch : error {
    using error::error;
};

// Bad textual or JSON input.
struct parse_error : error {
    using error::error;
};

// A structural precondition failed (invalid geometry, index out of the
// allowed index set, non-admissible pole, ...).
struct domain_error : error {
    using error::error;
};

// A verification routine found a counterexample.  The message carries the
// witness so callers can print it.
struct defect_error : error {
    using error::error;
};

}  // namespace kn
