#pragma once

#include <stdexcept>
#include <string>

namespace cubica {

// Error taxonomy shared by all modules.  Everything derives from Error so
// callers (and the CLI) can catch one base type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arity / dimension mismatch between values (wrong number of variables,
// wrong ambient dimension, index out of range).
struct DimensionError : Error {
    using Error::Error;
};

// Two Weil-algebra values from incompatible contexts were combined.
struct ContextError : Error {
    using Error::Error;
};

// Affine-combination coefficients do not sum to 1.
struct AffineError : Error {
    using Error::Error;
};

// Composition attempted on non-matching cells / non-chaining words.
struct CompositionError : Error {
    using Error::Error;
};

// A shell's faces fail the adjacency equations.  When the faces came out
// of our own face operators this signals an internal bug.
struct AdjacencyError : Error {
    using Error::Error;
};

// Operation not available for the given target (e.g. extracting a form
// from a connection whose target is not M_n(Q)).
struct UnsupportedError : Error {
    using Error::Error;
};

// Malformed input file.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace cubica
