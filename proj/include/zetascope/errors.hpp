#pragma once

#include <stdexcept>

namespace zetascope {

// Base class for every numeric failure raised by the library.  Callers that
// only want "did it work" can catch this; callers that route on failure kind
// catch the subclasses.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside a function's domain (log of zero, nonpositive f, ...).
struct domain_error : numeric_error {
    using numeric_error::numeric_error;
};

// Evaluation at, or too close to, a pole of the function.
struct pole_error : numeric_error {
    using numeric_error::numeric_error;
};

// A method invoked outside the parameter region where it converges.
struct region_error : numeric_error {
    using numeric_error::numeric_error;
};

// Intermediate value left the representable range.
struct overflow_error : numeric_error {
    using numeric_error::numeric_error;
};

// An integration contour passes too close to a singularity.
struct contour_error : numeric_error {
    using numeric_error::numeric_error;
};

// An internal cross-check failed (a value that must be real was not, ...).
struct consistency_error : numeric_error {
    using numeric_error::numeric_error;
};

// Malformed input file.
struct parse_error : numeric_error {
    using numeric_error::numeric_error;
};

// Input sequence violates a required ordering.
struct monotonicity_error : numeric_error {
    using numeric_error::numeric_error;
};

}  // namespace zetascope
