#pragma once

#include <stdexcept>
#include <string>

namespace nodallab {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (|x| > 1, k > n, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Finite-difference stencil too close to a coordinate pole.
class PoleProximityError : public Error {
public:
    using Error::Error;
};

/// Circle axes too close to parallel for the intersection formulas.
class ParallelAxesError : public Error {
public:
    using Error::Error;
};

/// Zero is (numerically) a critical value: gradient below floor on a nodal set.
class CriticalLevelError : public Error {
public:
    using Error::Error;
};

/// Too many samples below the dead band; the function is numerically zero.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// An iteration failed to converge within its budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Randomized descent exhausted its restart budget.
class SearchFailureError : public Error {
public:
    using Error::Error;
};

/// Request above a documented desk-scale cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace nodallab
