#include "orbitforge/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "orbitforge/errors.hpp"
#include "orbitforge/sphere_points.hpp"
#include "orbitforge/threads.hpp"
#include "point_index.hpp"

namespace orbitforge {

namespace {

void require_points(const Orbit& orbit) {
    if (orbit.points.rows() == 0) throw EmptyOrbit("orbit has no points");
}

/// Nearest/farthest by linear scan; ties resolve to the lowest row index.
std::pair<double, int> scan(const Orbit& orbit, const Eigen::VectorXd& w,
                            bool far) {
    const auto d2 =
        (orbit.points.rowwise() - w.transpose()).rowwise().squaredNorm();
    double best = far ? -1.0 : std::numeric_limits<double>::infinity();
    int best_idx = 0;
    for (int i = 0; i < d2.size(); ++i) {
        const bool better = far ? d2[i] > best : d2[i] < best;
        if (better) {
            best = d2[i];
            best_idx = i;
        }
    }
    return {best, best_idx};
}

struct SolveProblem {
    const Orbit& orbit;
    bool maximize;  // maximin maximizes h; minimax minimizes f
};

/// One projected subgradient descent/ascent run from a given start.
std::pair<double, Eigen::VectorXd> run_start(
    const SolveProblem& prob, const detail::PointIndex* index,
    Eigen::VectorXd w, const SolveConfig& cfg) {
    const auto& pts = prob.orbit.points;
    auto extremal = [&](const Eigen::VectorXd& q) -> std::pair<double, int> {
        if (index)
            return prob.maximize ? index->nearest(q) : index->farthest(q);
        return scan(prob.orbit, q, /*far=*/!prob.maximize);
    };

    w.normalize();
    auto [val2, idx] = extremal(w);
    double step = 0.5;
    for (int it = 0; it < cfg.max_iters && step > cfg.solver_tol; ++it) {
        // subgradient direction: away from the nearest witness when
        // maximizing h, toward the farthest witness when minimizing f
        Eigen::VectorXd dir = w - pts.row(idx).transpose();
        if (!prob.maximize) dir = -dir;
        dir -= dir.dot(w) * w;  // project onto the tangent plane at w
        if (prob.maximize) {
            const double nrm = dir.norm();
            if (nrm > 1e-14) dir /= nrm;
        }
        Eigen::VectorXd trial = (w + step * dir).normalized();
        const auto [tval2, tidx] = extremal(trial);
        const bool better = prob.maximize ? tval2 > val2 : tval2 < val2;
        if (better) {
            w = std::move(trial);
            val2 = tval2;
            idx = tidx;
        } else {
            step *= 0.5;
        }
    }
    if (step > cfg.solver_tol)
        return {std::numeric_limits<double>::quiet_NaN(), std::move(w)};
    return {std::sqrt(val2), std::move(w)};
}

ExtremalResult solve(const Orbit& orbit, const SolveConfig& cfg, bool maximize) {
    require_points(orbit);
    const int n = static_cast<int>(orbit.points.cols());

    ExtremalResult out;
    out.kind = maximize ? "maximin" : "minimax";

    const double eps_active = cfg.eps_active >= 0
                                  ? cfg.eps_active
                                  : 10 * (cfg.solver_tol + orbit.covering_resolution);

    // degenerate singleton orbit: the minimax point is the base itself
    if (!maximize && orbit.points.rows() == 1 &&
        (orbit.points.row(0).transpose() - orbit.base).norm() <= 1e-12) {
        out.w = orbit.base;
        out.value = 0.0;
        out.active = active_set(orbit, out.w, ActiveMode::sup, eps_active);
        out.multistart_values = {0.0};
        return out;
    }

    std::unique_ptr<detail::PointIndex> index;
    if (orbit.points.rows() >= 512)
        index = std::make_unique<detail::PointIndex>(orbit.points);

    const int starts = cfg.starts > 0 ? cfg.starts : (n <= 3 ? 64 : 256);
    const auto seeds = sphere_lattice(n, starts);
    const SolveProblem prob{orbit, maximize};

    std::vector<std::pair<double, Eigen::VectorXd>> results(seeds.size());
    parallel_for(seeds.size(), [&](std::size_t i) {
        results[i] = run_start(prob, index.get(), seeds[i], cfg);
    });

    int best = -1;
    out.multistart_values.reserve(results.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        out.multistart_values.push_back(results[i].first);
        if (std::isnan(results[i].first)) continue;
        const bool better =
            best < 0 || (maximize ? results[i].first > results[best].first
                                  : results[i].first < results[best].first);
        if (better) best = static_cast<int>(i);
    }
    if (best < 0)
        throw NoConvergence("solve: no start reached the stopping tolerance");

    out.w = results[best].second;
    out.value = results[best].first;
    out.active = active_set(orbit, out.w,
                            maximize ? ActiveMode::inf : ActiveMode::sup,
                            eps_active);
    return out;
}

}  // namespace

double f_sup(const Orbit& orbit, const Eigen::VectorXd& w) {
    require_points(orbit);
    return std::sqrt(scan(orbit, w, true).first);
}

double h_inf(const Orbit& orbit, const Eigen::VectorXd& w) {
    require_points(orbit);
    return std::sqrt(scan(orbit, w, false).first);
}

double support_value(const Orbit& orbit, const Eigen::VectorXd& w) {
    require_points(orbit);
    return (orbit.points * w).maxCoeff();
}

double directional_derivative_sq(const Orbit& orbit, const Eigen::VectorXd& w,
                                 const Eigen::VectorXd& z, double eps_active) {
    require_points(orbit);
    if (std::abs(w.dot(z)) > 1e-8)
        throw NotTangent("directional_derivative_sq: z is not tangent at w");
    const ActiveSet act = active_set(orbit, w, ActiveMode::sup, eps_active);
    double best = -std::numeric_limits<double>::infinity();
    for (int i : act.indices) {
        const Eigen::VectorXd diff = w - orbit.points.row(i).transpose();
        best = std::max(best, diff.dot(z));
    }
    return 2.0 * best;
}

ExtremalResult solve_minimax(const Orbit& orbit, const SolveConfig& cfg) {
    return solve(orbit, cfg, /*maximize=*/false);
}

ExtremalResult solve_maximin(const Orbit& orbit, const SolveConfig& cfg) {
    return solve(orbit, cfg, /*maximize=*/true);
}

ActiveSet active_set(const Orbit& orbit, const Eigen::VectorXd& w,
                     ActiveMode mode, double eps_active) {
    require_points(orbit);
    const auto d = (orbit.points.rowwise() - w.transpose())
                       .rowwise().norm().eval();
    const double opt = mode == ActiveMode::sup ? d.maxCoeff() : d.minCoeff();
    ActiveSet out;
    out.mode = mode;
    out.eps_active = eps_active;
    for (int i = 0; i < d.size(); ++i) {
        const bool in = mode == ActiveMode::sup ? d[i] >= opt - eps_active
                                                : d[i] <= opt + eps_active;
        if (in) {
            out.indices.push_back(i);
            out.witness_points.push_back(orbit.points.row(i).transpose());
        }
    }
    return out;
}

}  // namespace orbitforge
