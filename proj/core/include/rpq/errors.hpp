#pragma once

#include <stdexcept>
#include <string>

namespace rpq {

// Base of every error raised by the library. The CLI maps all of them to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters outside a deformation's domain, or an argument violating a precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

// A denominator that vanishes at the requested point.
class SingularError : public Error {
public:
    using Error::Error;
};

// A truncated series or tail that did not settle within the term budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Linear system too ill-conditioned for the working precision.
class ConditioningError : public Error {
public:
    using Error::Error;
};

// Interpolation nodes that coincide, so the basis does not span.
class DegenerateBasisError : public Error {
public:
    using Error::Error;
};

// An input table (moments, Stirling rows) is too short for the requested sum.
class DependencyError : public Error {
public:
    using Error::Error;
};

}  // namespace rpq
