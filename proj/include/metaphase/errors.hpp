#pragma once

#include <stdexcept>
#include <string>

namespace metaphase {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// det(S - I) vanishes where a closed form needs its inverse.
struct DegenerateEndpoint : Error {
    using Error::Error;
};

// det(S S' - I) vanishes in a product/composition formula.
struct DegenerateProduct : Error {
    using Error::Error;
};

// omega * t hits pi * Z in a closed-form harmonic expression.
struct DegenerateTime : Error {
    using Error::Error;
};

// B-block of a symplectic matrix is singular (no generating function).
struct NotFree : Error {
    using Error::Error;
};

// A det(S_t - I) or det(B_t) zero could not be resolved to a clean crossing.
struct UnresolvedCrossing : Error {
    using Error::Error;
};

struct SearchFailed : Error {
    using Error::Error;
};

// State fails the quantum admissibility condition where one is required.
struct AdmissibilityError : Error {
    using Error::Error;
};

// Fock-space truncation too lossy for the requested computation.
struct TruncationError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace metaphase
