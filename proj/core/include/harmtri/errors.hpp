#pragma once

#include <stdexcept>
#include <string>

namespace harmtri {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: non-coprime exponents, zero leading coefficient, NaN, ...
struct ValidationError : Error {
    using Error::Error;
};

// A coefficient that the operation needs to be nonzero is zero.
struct DegenerateCoefficientError : Error {
    using Error::Error;
};

// The three side lengths violate a strict triangle inequality.
struct NotATriangleError : Error {
    using Error::Error;
};

// A triangle inequality holds with equality (within the boundary band).
struct DegenerateTriangleError : Error {
    using Error::Error;
};

// The requested radius sits on an excluded band (a root circle or a
// profile breakpoint). Carries admissible radii on both sides.
struct OnBoundaryError : Error {
    double v = 0;
    double suggest_below = 0;
    double suggest_above = 0;
    OnBoundaryError(const std::string& what, double v_, double lo, double hi)
        : Error(what), v(v_), suggest_below(lo), suggest_above(hi) {}
};

struct NoConvergenceError : Error {
    using Error::Error;
};

// The root scan accepted more roots than the theoretical bound allows.
struct OracleIncompleteError : Error {
    int count = 0;
    int bound = 0;
    OracleIncompleteError(const std::string& what, int count_, int bound_)
        : Error(what), count(count_), bound(bound_) {}
};

struct SingularJacobianError : Error {
    using Error::Error;
};

struct ExponentMismatchError : Error {
    using Error::Error;
};

struct InvalidGeometryError : Error {
    using Error::Error;
};

}  // namespace harmtri
