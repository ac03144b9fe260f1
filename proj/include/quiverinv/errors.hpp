#ifndef QUIVERINV_ERRORS_HPP
#define QUIVERINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quiverinv {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input (bad dimensions, bad JSON, out-of-range flags).
struct InputError : Error {
    using Error::Error;
};

// A matrix is singular to working tolerance (pivot below threshold, or an
// inverse failed its residual check).
struct SingularMatrix : Error {
    using Error::Error;
};

// An iterative solver ran out of iterations or missed its residual target.
struct ConvergenceFailure : Error {
    using Error::Error;
};

// Eigenvalues too close together for the distinct-spectrum eigensolver.
struct ClusteredSpectrum : Error {
    using Error::Error;
};

// A representation point failed the genericity test where one was required.
struct NotGeneric : Error {
    using Error::Error;
};

// Rejection sampling exhausted its attempt budget.
struct SamplingFailure : Error {
    using Error::Error;
};

// A requested enumeration exceeds the configured size cap.
struct TooLarge : Error {
    using Error::Error;
};

// A gauged L-point failed to land back inside the embedded L subspace.
// Indicates an implementation bug, never a valid state.
struct StabilityViolation : Error {
    using Error::Error;
};

// A trace-word path failed to close up at its base vertex.
struct PathClosureError : Error {
    using Error::Error;
};

// Rational reconstruction of a numerically accumulated value missed its guard.
struct ReconstructionFailure : Error {
    using Error::Error;
};

// A scalar double-quiver point does not satisfy the moment equations.
struct NotInZ1 : Error {
    using Error::Error;
};

// The cycle product vanishes where a nonzero value is required.
struct VanishingProduct : Error {
    using Error::Error;
};

// An input point's moment residual exceeds the admission tolerance.
struct ResidualTooLarge : Error {
    using Error::Error;
};

}  // namespace quiverinv

#endif
