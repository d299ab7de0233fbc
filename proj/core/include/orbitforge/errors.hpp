/**
 * @file errors.hpp
 * @brief Exception types thrown across the library.
 *
 * Every failure mode callers are expected to handle has its own type so that
 * tests and the CLI can distinguish them without parsing messages. All of
 * them derive from orbitforge::Error (itself a std::runtime_error).
 */
#pragma once

#include <stdexcept>
#include <string>

namespace orbitforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input matrix expected to be skew-symmetric is not (max |A + A^T| too big).
struct NotSkewSymmetric : Error { using Error::Error; };

/// Two operands have incompatible dimensions.
struct DimensionMismatch : Error { using Error::Error; };

/// An operation received an empty collection where at least one item is needed.
struct EmptyInput : Error { using Error::Error; };

/// Finite closure generation exceeded the element cap.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what, std::size_t count)
        : Error(what), count(count) {}
    std::size_t count;
};

/// Continuous sampling requested for a group without Lie generators.
struct NoLieGenerators : Error { using Error::Error; };

/// A base point expected on the unit sphere is not a unit vector.
struct NotUnitVector : Error { using Error::Error; };

/// Unknown builtin group name.
struct UnknownBuiltin : Error { using Error::Error; };

/// Builtin parameters missing, malformed, or out of range.
struct BadParams : Error { using Error::Error; };

/// An orbit with no points was passed to an evaluator or solver.
struct EmptyOrbit : Error { using Error::Error; };

/// An iterative solver failed to reach its stopping criterion.
struct NoConvergence : Error { using Error::Error; };

/// Direction passed to a tangential derivative is not tangent at the point.
struct NotTangent : Error { using Error::Error; };

/// A group sample with no elements was passed to an analysis routine.
struct EmptySample : Error { using Error::Error; };

/// Mutually inconsistent arguments (for example a witness from another orbit).
struct InconsistentInput : Error { using Error::Error; };

/// Rank parameter outside the meaningful range 2..n.
struct BadRank : Error { using Error::Error; };

/// Bracket closure failed to stabilize inside the ambient algebra.
struct BracketNotClosed : Error { using Error::Error; };

/// Convex hull of the focal orbit is degenerate (zero volume in its span).
struct DegenerateHull : Error { using Error::Error; };

/// Orbit construction cannot separate the orbit from the whole sphere.
struct TransitiveGroup : Error { using Error::Error; };

/// Gauge evaluation requires the origin strictly inside the body.
struct OriginOutside : Error { using Error::Error; };

/// Gauge bracketing failed to enclose the boundary crossing.
struct NoBracket : Error { using Error::Error; };

}  // namespace orbitforge
