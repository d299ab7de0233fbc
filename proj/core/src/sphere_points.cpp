#include "orbitforge/sphere_points.hpp"

#include <cmath>
#include <random>

#include "orbitforge/errors.hpp"

namespace orbitforge {

namespace {

double halton(std::uint64_t index, std::uint64_t base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

std::vector<std::uint64_t> first_primes(int count) {
    std::vector<std::uint64_t> primes;
    std::uint64_t cand = 2;
    while (static_cast<int>(primes.size()) < count) {
        bool ok = true;
        for (std::uint64_t p : primes) {
            if (p * p > cand) break;
            if (cand % p == 0) { ok = false; break; }
        }
        if (ok) primes.push_back(cand);
        ++cand;
    }
    return primes;
}

}  // namespace

double inverse_normal_cdf(double p) {
    // Acklam's rational approximation with central/tail split.
    static const double a[] = {-3.969683028665376e+01,  2.209460984245205e+02,
                               -2.759285104469687e+02,  1.383577518672690e+02,
                               -3.066479806614716e+01,  2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01,  1.615858368580409e+02,
                               -1.556989798598866e+02,  6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = { 7.784695709041462e-03,  3.224671290700398e-01,
                                2.445134137142996e+00,  3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    double x;
    if (p < plow) {
        double q = std::sqrt(-2 * std::log(p));
        x = (((((c[0]*q+c[1])*q+c[2])*q+c[3])*q+c[4])*q+c[5]) /
            ((((d[0]*q+d[1])*q+d[2])*q+d[3])*q+1);
    } else if (p <= phigh) {
        double q = p - 0.5, r = q * q;
        x = (((((a[0]*r+a[1])*r+a[2])*r+a[3])*r+a[4])*r+a[5])*q /
            (((((b[0]*r+b[1])*r+b[2])*r+b[3])*r+b[4])*r+1);
    } else {
        double q = std::sqrt(-2 * std::log(1 - p));
        x = -(((((c[0]*q+c[1])*q+c[2])*q+c[3])*q+c[4])*q+c[5]) /
             ((((d[0]*q+d[1])*q+d[2])*q+d[3])*q+1);
    }
    // one Halley refinement against erfc brings the error to ~1e-13
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2 * M_PI) * std::exp(x * x / 2);
    x = x - u / (1 + x * u / 2);
    return x;
}

std::vector<Eigen::VectorXd> sphere_lattice(int n, int count) {
    if (n < 2) throw DimensionMismatch("sphere_lattice: dimension must be >= 2");
    if (count <= 0) throw EmptyInput("sphere_lattice: count must be positive");
    std::vector<Eigen::VectorXd> pts;
    pts.reserve(count);
    if (n == 2) {
        for (int i = 0; i < count; ++i) {
            const double a = 2 * M_PI * i / count;
            pts.push_back(Eigen::Vector2d(std::cos(a), std::sin(a)));
        }
        return pts;
    }
    if (n == 3) {
        // Fibonacci spiral: golden-angle azimuth, equal-area heights
        const double ga = M_PI * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < count; ++i) {
            const double z = 1.0 - 2.0 * (i + 0.5) / count;
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double phi = ga * i;
            pts.push_back(Eigen::Vector3d(rho * std::cos(phi), rho * std::sin(phi), z));
        }
        return pts;
    }
    const auto primes = first_primes(n);
    std::uint64_t index = 1;
    while (static_cast<int>(pts.size()) < count) {
        Eigen::VectorXd g(n);
        for (int k = 0; k < n; ++k) {
            const double u = halton(index, primes[k]);
            g[k] = inverse_normal_cdf(std::min(std::max(u, 1e-12), 1.0 - 1e-12));
        }
        ++index;
        const double nrm = g.norm();
        if (nrm > 1e-9) pts.push_back(g / nrm);
    }
    return pts;
}

std::vector<Eigen::VectorXd> sphere_random(int n, int count, std::uint64_t seed) {
    if (n < 1) throw DimensionMismatch("sphere_random: dimension must be >= 1");
    if (count <= 0) throw EmptyInput("sphere_random: count must be positive");
    std::mt19937_64 rng(seed);
    // Box-Muller from explicit uniforms: std::normal_distribution is not
    // pinned by the standard, this is, so seeds reproduce across compilers.
    auto uniform = [&rng]() {
        return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    };
    std::vector<Eigen::VectorXd> pts;
    pts.reserve(count);
    while (static_cast<int>(pts.size()) < count) {
        Eigen::VectorXd g(n);
        int k = 0;
        while (k < n) {
            const double u1 = uniform(), u2 = uniform();
            const double r = std::sqrt(-2.0 * std::log(u1));
            g[k++] = r * std::cos(2 * M_PI * u2);
            if (k < n) g[k++] = r * std::sin(2 * M_PI * u2);
        }
        const double nrm = g.norm();
        if (nrm > 1e-9) pts.push_back(g / nrm);
    }
    return pts;
}

}  // namespace orbitforge
