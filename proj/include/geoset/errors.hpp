#pragma once

#include <stdexcept>
#include <string>

namespace geoset {

// Base for all library errors so callers can catch the whole family at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed JSON, unknown schema version/kind, or an unparseable rational.
struct ParseError : Error {
    using Error::Error;
};

// A constructed or loaded value violates a documented type invariant.
struct InvariantViolation : Error {
    using Error::Error;
};

// Generator parameters outside their documented domain.
struct InvalidParams : Error {
    using Error::Error;
};

// Rejection sampling exhausted its retry budget.
struct GenerationExhausted : Error {
    using Error::Error;
};

// A cover instance whose full object set fails to cover every point.
struct InfeasibleInstance : Error {
    using Error::Error;
};

// The containment-replacement loop exceeded its iteration cap.
struct IterationCapExceeded : Error {
    using Error::Error;
};

// The exact oracle hit its size, node, or time budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Two boundaries share a positive-length segment, so transversal
// crossings are undefined.
struct DegenerateOverlap : Error {
    using Error::Error;
};

// Decomposition preconditions or phase invariants failed.
struct NotCoverFree : Error {
    using Error::Error;
};
struct NotPseudodisks : Error {
    using Error::Error;
};
struct DegenerateChord : Error {
    using Error::Error;
};

// Petal intervals of the two families interleave around the lens boundary.
struct ConflictingCO : Error {
    using Error::Error;
};

// No chord through two boundary-intersection points separates the petals.
struct NoSeparator : Error {
    using Error::Error;
};

}  // namespace geoset
