#pragma once

#include <stdexcept>
#include <string>

namespace credal {

/// Shapes of two values (distribution, loss table, rule, ...) do not agree.
struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Conditioning wiped out every vertex: the event has probability zero
/// under the whole credal set.
struct EmptyConditionedSetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An observation that no distribution in the credal set can produce.
struct UnreachableObservationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration (partition lattice, decision-rule grid) would exceed the
/// configured size bound.
struct SizeBoundExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A malformed linear program (ragged rows, empty objective, ...).
struct MalformedLpError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace credal
