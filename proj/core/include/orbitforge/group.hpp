/**
 * @file group.hpp
 * @brief Closed subgroups of O(n): specification, sampling, orbits.
 *
 * Mathematical background
 * -----------------------
 * A group is described by finite generators (orthogonal matrices), Lie
 * generators (skew matrices spanning the algebra of the unit component G⁰),
 * and coset representatives for the components of G/G⁰. The element set used
 * numerically is a finite sample: exact when the group is finite, otherwise
 * a grid over the continuous part whose covering radius (an operator-norm
 * bound on the distance from any group element of the sampled component set
 * to the sample) is recorded in covering_resolution. Orbits are the point
 * sets {g·v : g in sample} on the unit sphere, deduplicated, with each point
 * remembering the element that produced it.
 *
 * Sampling the continuous part:
 *  - If the Lie generators commute and are simultaneously block-diagonal with
 *    2x2 skew blocks in the standard positions, and their block-frequency
 *    matrix has full column rank, the closure of the generated flow is the
 *    full block-angle torus; it is sampled directly as a uniform grid over
 *    block angles. This covers circle groups and independent block torus
 *    groups exactly, with covering radius = the angle step.
 *  - Otherwise, if the generators commute, a per-generator parameter grid
 *    over [0, 2π/ω_min) is used (exact when each generator's one-parameter
 *    subgroup is periodic at that length).
 *  - Otherwise (non-commuting), fixed-order products of single-generator
 *    exponentials over a budgeted grid plus seeded random bounded-length
 *    words; the set is closed under inversion by adding transposes. The
 *    recorded covering_resolution reflects the actual grid step, which may
 *    be coarser than requested when the budget binds.
 */
#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace orbitforge {

/// Declarative description of a closed subgroup of O(n).
struct GroupSpec {
    int n = 0;
    std::vector<Eigen::MatrixXd> finite_generators;
    std::vector<Eigen::MatrixXd> lie_generators;
    std::vector<Eigen::MatrixXd> coset_reps;  ///< empty means {I}
    std::string builtin;                      ///< builtin name when applicable
    nlohmann::json builtin_params;            ///< echo of builtin parameters
};

/// A finite set of group elements standing in for the group.
struct GroupSample {
    int n = 0;
    std::vector<Eigen::MatrixXd> elements;
    double covering_resolution = 0.0;  ///< 0 for exact finite groups
    bool exact = false;
    /// Bracket-closed orthonormal basis of the Lie algebra (empty for finite
    /// groups); consumers use it to move points along the orbit manifold.
    std::vector<Eigen::MatrixXd> component_generators;
};

/// Orbit of a base point under a group sample.
struct Orbit {
    Eigen::VectorXd base;
    Eigen::MatrixXd points;          ///< rows are the deduplicated orbit points
    std::vector<int> element_index;  ///< row i was produced by elements[element_index[i]]
    double covering_resolution = 0.0;
    /// Lie basis carried over from the sample (for manifold-aware consumers).
    std::vector<Eigen::MatrixXd> component_generators;
};

/// BFS closure of a finite generating set (identity always included).
/// Deduplication is max-entry at dedup_tol. Throws CapExceeded (carrying the
/// count reached) when the closure grows past cap.
std::vector<Eigen::MatrixXd> generate_finite_closure(
    const std::vector<Eigen::MatrixXd>& generators,
    double dedup_tol = 1e-8, std::size_t cap = 20000);

/// Sample a group with a continuous part. Throws NoLieGenerators when the
/// spec has none (use sample_group for the general entry point).
GroupSample sample_lie_group(const GroupSpec& spec, double resolution,
                             std::uint64_t seed);

/// General entry point: exact closure when the spec is finite, otherwise
/// sample_lie_group.
GroupSample sample_group(const GroupSpec& spec, double resolution,
                         std::uint64_t seed);

/// Orbit of unit vector v (throws NotUnitVector otherwise; EmptySample when
/// the sample has no elements). Points are deduplicated at 1e-9 max-entry,
/// keeping the lowest element index.
Orbit orbit(const GroupSample& sample, const Eigen::VectorXd& v);

/// Construct one of the named builtin groups.
///   so3_axis_fix            rotations about the third axis in R^3
///   o3_axis_fix             the above plus the reflection diag(1,1,-1)
///   cyclic                  k-fold rotation group in the plane     (k)
///   dihedral                k-fold rotations plus a reflection     (k)
///   block_reducible         block-diagonal actions                 (n, blocks)
///   torus_swap_4d           two-block torus plus the block swap    (omega[4])
///   d1_4d                   one-parameter subgroup plus reversal   (omega[2])
///   rank2_d3                three-dimensional algebra family       (x,y,t,s)
/// Throws UnknownBuiltin / BadParams.
GroupSpec builtin_spec(const std::string& name,
                       const nlohmann::json& params = nlohmann::json::object());

}  // namespace orbitforge
