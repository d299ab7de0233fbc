/**
 * @file extremal.hpp
 * @brief Farthest/nearest distance functionals over an orbit and their
 *        minimax / maximin optimizers on the unit sphere.
 *
 * Mathematical background
 * -----------------------
 * For an orbit P = {g·v} on S_{n-1} and a point w, the two functionals are
 *   f(w) = max_{p in P} |w - p|   (farthest distance; convex, 1-Lipschitz)
 *   h(w) = min_{p in P} |w - p|   (nearest distance)
 * The minimax point minimizes f over the sphere, the maximin point maximizes
 * h; their values m and r satisfy m² + r² = 4 through the antipodal identity
 * f²(w) + h²(-w) = 4, which holds exactly for any point set on the sphere.
 * The squared support relation h²(w) = 2(1 - max_p <p,w>) ties the nearest
 * distance to the support function of the orbit's convex hull.
 *
 * Optimization uses projected subgradient iterations with step halving from
 * quasi-uniform multistarts. The subgradient of f at w is (w - p*)/f for a
 * farthest witness p* (ties broken by lowest point index), mirrored for h.
 * Active sets collect every orbit point whose distance is within eps_active
 * of the optimal one; on sampled orbits eps_active defaults to
 * 10·(solver_tol + covering_resolution) so that genuine witnesses of the
 * underlying continuous orbit are not lost to discretization.
 */
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "orbitforge/group.hpp"

namespace orbitforge {

enum class ActiveMode { sup, inf };

/// Orbit points attaining (within eps_active) the extremal distance from w.
struct ActiveSet {
    ActiveMode mode = ActiveMode::sup;
    std::vector<int> indices;                  ///< rows into Orbit::points
    double eps_active = 0.0;
    std::vector<Eigen::VectorXd> witness_points;
};

struct SolveConfig {
    int starts = 0;            ///< 0 = auto (64 for n<=3, 256 for n=4+)
    double solver_tol = 1e-8;  ///< stop when the step drops below this
    int max_iters = 10000;     ///< per start
    double eps_active = -1.0;  ///< <0 = auto: 10*(solver_tol + covering)
    std::uint64_t seed = 42;   ///< reserved for seeded extras; lattice is fixed
};

/// Result of a minimax or maximin solve.
struct ExtremalResult {
    std::string kind;          ///< "minimax" or "maximin"
    Eigen::VectorXd w;
    double value = 0.0;        ///< f(w) for minimax, h(w) for maximin
    ActiveSet active;
    std::vector<double> multistart_values;  ///< final value per start
};

/// f(w): farthest distance from w to the orbit. Throws EmptyOrbit.
double f_sup(const Orbit& orbit, const Eigen::VectorXd& w);

/// h(w): nearest distance from w to the orbit. Throws EmptyOrbit.
double h_inf(const Orbit& orbit, const Eigen::VectorXd& w);

/// max_p <p, w>: support value of the orbit hull in direction w.
double support_value(const Orbit& orbit, const Eigen::VectorXd& w);

/// One-sided directional derivative of f² at w along tangent z:
/// 2·max over the eps-active sup set of <w - p, z>.
/// Throws NotTangent when |<w,z>| > 1e-8.
double directional_derivative_sq(const Orbit& orbit, const Eigen::VectorXd& w,
                                 const Eigen::VectorXd& z, double eps_active);

/// Minimize f over the unit sphere. Throws EmptyOrbit / NoConvergence.
ExtremalResult solve_minimax(const Orbit& orbit, const SolveConfig& cfg = {});

/// Maximize h over the unit sphere. Throws EmptyOrbit / NoConvergence.
ExtremalResult solve_maximin(const Orbit& orbit, const SolveConfig& cfg = {});

/// Active set of w at the given mode and tolerance.
ActiveSet active_set(const Orbit& orbit, const Eigen::VectorXd& w,
                     ActiveMode mode, double eps_active);

}  // namespace orbitforge
