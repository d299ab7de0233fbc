/**
 * @file sphere_points.hpp
 * @brief Deterministic families of points on the unit sphere S_{n-1}.
 *
 * Two families are provided:
 *  - sphere_lattice: a quasi-uniform low-discrepancy set. In the plane it is
 *    the uniform angle grid; on S_2 the classic Fibonacci spiral; in higher
 *    dimension a Halton sequence (bases = first n primes) pushed through the
 *    inverse normal CDF and radially normalized, which is uniform on the
 *    sphere by the rotational symmetry of the Gaussian.
 *  - sphere_random: seeded Gaussian directions (Box–Muller over a mt19937_64
 *    stream, so the same seed reproduces the same points bit for bit on a
 *    given platform).
 *
 * Both families are used for solver multistarts and probe sets; keeping them
 * here makes every consumer reproducible from a single seed.
 */
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace orbitforge {

/// count quasi-uniform points on S_{n-1}, deterministic, no seed involved.
std::vector<Eigen::VectorXd> sphere_lattice(int n, int count);

/// count seeded pseudo-random points on S_{n-1}.
std::vector<Eigen::VectorXd> sphere_random(int n, int count, std::uint64_t seed);

/// Inverse of the standard normal CDF (Acklam's rational approximation,
/// refined by one Halley step; |relative error| < 1e-9 on (0,1)).
double inverse_normal_cdf(double p);

}  // namespace orbitforge
