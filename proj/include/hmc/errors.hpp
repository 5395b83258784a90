#pragma once

#include <stdexcept>
#include <string>

namespace hmc {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain (e.g. 0 raised to a
// nonpositive power, negative amplitude, nonpositive geometric-mean input).
struct DomainError : Error {
    using Error::Error;
};

// Accumulators with different exponents cannot be merged.
struct MismatchedExponent : Error {
    using Error::Error;
};

// project() requires a nonzero projective weight.
struct VectorHasNoProjection : Error {
    using Error::Error;
};

// Operation not defined for the requested exponent (p = 0, or a closed
// form that only exists for specific p).
struct UnsupportedExponent : Error {
    using Error::Error;
};

// Weight sum too close to zero to project (point at infinity).
struct DegenerateWeight : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct UnknownPreset : Error {
    using Error::Error;
};

// Material matrices act on coefficient vectors only.
struct NotAVector : Error {
    using Error::Error;
};

struct InvalidMatrix : Error {
    using Error::Error;
};

} // namespace hmc
