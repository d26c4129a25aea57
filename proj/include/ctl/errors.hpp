#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ctl {

/* Base class for every error raised by the library. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Matrix shapes do not line up. */
struct DimensionMismatch : Error {
    using Error::Error;
};

/* Values from different prime fields were mixed. Never coerced. */
struct CharacteristicMismatch : Error {
    using Error::Error;
};

/* Representations over different algebras were combined. */
struct AlgebraMismatch : Error {
    using Error::Error;
};

/* A representation's matrices are inconsistent with its dimension vector. */
struct ShapeMismatch : Error {
    using Error::Error;
};

/* Bad input file or malformed in-memory data. */
struct ParseError : Error {
    using Error::Error;
};

/* Lookup of a vertex, arrow, class or module name failed. */
struct UnknownName : Error {
    using Error::Error;
};

/* Path-basis enumeration exceeded its length cap: the quotient is
 * (or appears) infinite dimensional. */
struct NonTerminating : Error {
    int cap;
    explicit NonTerminating(int cap_)
        : Error("path basis did not terminate within length cap " + std::to_string(cap_)),
          cap(cap_) {}
};

/* Syzygy iteration exceeded its cap. */
struct Diverges : Error {
    int cap;
    explicit Diverges(int cap_)
        : Error("syzygy iteration did not reach zero within cap " + std::to_string(cap_)),
          cap(cap_) {}
};

struct InfiniteGlobalDimension : Error {
    using Error::Error;
};

/* An enumeration (iso search, class enumeration, ...) would exceed its cap. */
struct CapExceeded : Error {
    using Error::Error;
};

/* A decision procedure ran out of budget without deciding.
 * This is a first-class outcome, never silently mapped to false. */
struct Inconclusive : Error {
    using Error::Error;
};

/* Theorem preconditions on the input pair classes do not hold. */
struct HypothesisViolated : Error {
    std::vector<std::string> violators;
    HypothesisViolated(const std::string& msg, std::vector<std::string> violators_)
        : Error(msg), violators(std::move(violators_)) {}
};

/* Krull-Schmidt peeling left a nonzero remainder with no catalog summand. */
struct ResidueNotInCatalog : Error {
    using Error::Error;
};

}  // namespace ctl
