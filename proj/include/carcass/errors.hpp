#pragma once

#include <stdexcept>
#include <string>

namespace carcass {

// Base of every error raised by the library. The CLI maps the concrete
// subclass onto a process exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (x outside
// [0,1], one-sided slope requested past an endpoint, index out of range).
class DomainError : public Error {
public:
    using Error::Error;
};

// Input that fails a shape requirement: malformed map, non-carcass map,
// non-homeomorphism, duplicate abscissae, bad parameter.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A configured resource cap (lattice points, denominator bits) was hit.
class ResourceError : public Error {
public:
    using Error::Error;
};

// An internal invariant did not hold (e.g. lattice level count mismatch).
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace carcass
