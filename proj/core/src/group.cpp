#include "orbitforge/group.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "orbitforge/errors.hpp"
#include "orbitforge/matrix.hpp"
#include "internal.hpp"

namespace orbitforge {

namespace {

constexpr double kDedupTol = 1e-8;
constexpr std::size_t kMaxContinuous = 200000;  // budget for the sampled G⁰ grid
constexpr std::size_t kGridBudget = 20000;      // non-commuting grid words
constexpr std::size_t kMaxElements = 600000;    // hard cap on a full sample

Eigen::MatrixXd identity(int n) { return Eigen::MatrixXd::Identity(n, n); }

/// Appends M to els unless a duplicate is present; returns true if appended.
bool push_unique(std::vector<Eigen::MatrixXd>& els, detail::DedupSet& dedup,
                 Eigen::MatrixXd M) {
    if (dedup.find(M.data()) >= 0) return false;
    els.push_back(std::move(M));
    dedup.insert(els.back().data(), static_cast<int>(els.size()) - 1);
    return true;
}

/// Largest and smallest nonzero singular values of A.
std::pair<double, double> operator_norms(const Eigen::MatrixXd& A) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    double lo = 0.0;
    for (int i = sv.size() - 1; i >= 0; --i)
        if (sv[i] > 1e-12 * sv[0]) { lo = sv[i]; break; }
    return {sv.size() ? sv[0] : 0.0, lo};
}

/// 2x2 rotation block [[cos, -sin], [sin, cos]].
void put_rotation_block(Eigen::MatrixXd& M, int at, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    M(at, at) = c;     M(at, at + 1) = -s;
    M(at + 1, at) = s; M(at + 1, at + 1) = c;
}

/// Tries to read generator A as 2x2 skew blocks in standard positions
/// (0,1),(2,3),...; returns per-block frequencies, or nullopt when A has
/// support outside those blocks.
std::optional<Eigen::VectorXd> block_frequencies(const Eigen::MatrixXd& A) {
    const int n = static_cast<int>(A.rows());
    const int d = n / 2;
    Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool in_block = (i / 2 == j / 2) && i < 2 * d && j < 2 * d;
            if (!in_block) {
                if (std::abs(A(i, j)) > 1e-12) return std::nullopt;
                continue;
            }
            if (i == j) {
                if (std::abs(A(i, j)) > 1e-12) return std::nullopt;
            } else if (i < j) {
                w[i / 2] = A(j, i);  // lower-left entry of the block is +ω
            }
        }
    return w;
}

struct ContinuousSample {
    std::vector<Eigen::MatrixXd> elements;
    double covering = 0.0;
    bool inversion_closed = false;
};

/// Full block-angle torus grid (closure of a full-rank commuting family).
ContinuousSample sample_full_torus(int n, int d, double resolution) {
    std::size_t per_axis = static_cast<std::size_t>(std::ceil(2 * M_PI / resolution));
    per_axis = std::max<std::size_t>(per_axis, 2);
    while (std::pow(static_cast<double>(per_axis), d) >
           static_cast<double>(kMaxContinuous))
        --per_axis;
    const double h = 2 * M_PI / static_cast<double>(per_axis);

    ContinuousSample out;
    out.covering = h;
    out.inversion_closed = true;  // uniform full-period grid
    std::vector<std::size_t> idx(d, 0);
    const std::size_t total =
        static_cast<std::size_t>(std::pow(static_cast<double>(per_axis), d));
    out.elements.reserve(total);
    for (std::size_t c = 0; c < total; ++c) {
        Eigen::MatrixXd M = identity(n);
        for (int j = 0; j < d; ++j)
            put_rotation_block(M, 2 * j, h * static_cast<double>(idx[j]));
        out.elements.push_back(std::move(M));
        for (int j = 0; j < d; ++j) {  // odometer increment
            if (++idx[j] < per_axis) break;
            idx[j] = 0;
        }
    }
    return out;
}

/// Per-generator parameter grids, combined as products (commuting case) or
/// as fixed-order words plus random words (non-commuting case).
ContinuousSample sample_parameter_grid(const std::vector<Eigen::MatrixXd>& gens,
                                       double resolution, bool commuting,
                                       std::uint64_t seed) {
    const int k = static_cast<int>(gens.size());
    const int n = static_cast<int>(gens.front().rows());

    std::vector<double> period(k), norm(k);
    for (int i = 0; i < k; ++i) {
        auto [hi, lo] = operator_norms(gens[i]);
        norm[i] = hi;
        period[i] = (lo > 0) ? 2 * M_PI / lo : 2 * M_PI;
    }

    // per-axis counts at the requested resolution, shrunk uniformly when the
    // total grid would blow the budget
    const std::size_t budget = commuting ? kMaxContinuous : kGridBudget;
    std::vector<std::size_t> counts(k);
    double total = 1.0;
    for (int i = 0; i < k; ++i) {
        counts[i] = std::max<std::size_t>(
            2, static_cast<std::size_t>(std::ceil(period[i] * norm[i] / resolution)));
        total *= static_cast<double>(counts[i]);
    }
    if (total > static_cast<double>(budget)) {
        const double shrink = std::pow(total / static_cast<double>(budget), 1.0 / k);
        total = 1.0;
        for (int i = 0; i < k; ++i) {
            counts[i] = std::max<std::size_t>(
                2, static_cast<std::size_t>(
                       std::floor(static_cast<double>(counts[i]) / shrink)));
            total *= static_cast<double>(counts[i]);
        }
    }

    ContinuousSample out;
    out.covering = 0.0;
    bool periodic = true;
    std::vector<std::vector<Eigen::MatrixXd>> axis(k);
    for (int i = 0; i < k; ++i) {
        const double h = period[i] / static_cast<double>(counts[i]);
        out.covering = std::max(out.covering, h * norm[i]);
        axis[i].reserve(counts[i]);
        for (std::size_t j = 0; j < counts[i]; ++j)
            axis[i].push_back(exp_skew(gens[i], h * static_cast<double>(j)));
        if ((exp_skew(gens[i], period[i]) - identity(n)).cwiseAbs().maxCoeff() > 1e-9)
            periodic = false;
    }

    // odometer over the grid, multiplying axis factors in generator order
    std::vector<std::size_t> idx(k, 0);
    out.elements.reserve(static_cast<std::size_t>(total));
    for (std::size_t c = 0; c < static_cast<std::size_t>(total); ++c) {
        Eigen::MatrixXd M = axis[0][idx[0]];
        for (int i = 1; i < k; ++i) M = M * axis[i][idx[i]];
        out.elements.push_back(std::move(M));
        for (int i = 0; i < k; ++i) {
            if (++idx[i] < counts[i]) break;
            idx[i] = 0;
        }
    }

    if (!commuting) {
        // seeded random bounded-length words fill coverage between grid words
        std::mt19937_64 rng(seed);
        auto uniform = [&rng]() {
            return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        };
        const std::size_t extra = 4 * out.elements.size();
        const int word_len = 2 * k;
        for (std::size_t c = 0; c < extra; ++c) {
            Eigen::MatrixXd M = identity(n);
            for (int f = 0; f < word_len; ++f) {
                const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
                M = M * exp_skew(gens[i], uniform() * period[i]);
            }
            out.elements.push_back(std::move(M));
        }
    }

    // commuting grids over a true common period are already groups
    out.inversion_closed = commuting && periodic;
    return out;
}

}  // namespace

std::vector<Eigen::MatrixXd> generate_finite_closure(
    const std::vector<Eigen::MatrixXd>& generators, double dedup_tol,
    std::size_t cap) {
    int n = 0;
    for (const auto& g : generators) {
        if (g.rows() != g.cols() || (n && g.rows() != n))
            throw DimensionMismatch("generate_finite_closure: generators must be square, same size");
        n = static_cast<int>(g.rows());
    }
    if (n == 0) throw EmptyInput("generate_finite_closure: no generators");

    std::vector<Eigen::MatrixXd> els;
    detail::DedupSet dedup(dedup_tol, n * n);
    push_unique(els, dedup, identity(n));
    std::size_t frontier_begin = 0;
    while (frontier_begin < els.size()) {
        const std::size_t frontier_end = els.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i)
            for (const auto& g : generators) {
                if (els.size() > cap)
                    throw CapExceeded("generate_finite_closure: cap exceeded", els.size());
                push_unique(els, dedup, els[i] * g);
            }
        frontier_begin = frontier_end;
    }
    return els;
}

GroupSample sample_lie_group(const GroupSpec& spec, double resolution,
                             std::uint64_t seed) {
    if (spec.lie_generators.empty())
        throw NoLieGenerators("sample_lie_group: spec has no Lie generators");
    if (!(resolution > 0))
        throw BadParams("sample_lie_group: resolution must be positive");
    const int n = spec.n;
    for (const auto& A : spec.lie_generators) {
        if (A.rows() != n || A.cols() != n)
            throw DimensionMismatch("sample_lie_group: generator dimension mismatch");
        if ((A + A.transpose()).cwiseAbs().maxCoeff() > 1e-10)
            throw NotSkewSymmetric("sample_lie_group: Lie generators must be skew");
    }

    // discrete part: finite generators and coset representatives
    std::vector<Eigen::MatrixXd> discrete_gens = spec.finite_generators;
    discrete_gens.insert(discrete_gens.end(), spec.coset_reps.begin(),
                         spec.coset_reps.end());
    std::vector<Eigen::MatrixXd> discrete =
        discrete_gens.empty() ? std::vector<Eigen::MatrixXd>{identity(n)}
                              : generate_finite_closure(discrete_gens);

    // continuous part
    bool commuting = true;
    for (std::size_t i = 0; i < spec.lie_generators.size() && commuting; ++i)
        for (std::size_t j = i + 1; j < spec.lie_generators.size(); ++j)
            if (commutator(spec.lie_generators[i], spec.lie_generators[j])
                    .cwiseAbs().maxCoeff() > 1e-10) {
                commuting = false;
                break;
            }

    ContinuousSample cont;
    bool torus_path = false;
    if (commuting && n >= 2) {
        // simultaneous standard 2x2 block structure with full-rank frequencies
        // means the flow closure is the whole block-angle torus
        const int d = n / 2;
        Eigen::MatrixXd W(static_cast<int>(spec.lie_generators.size()), d);
        bool blocky = d > 0;
        for (std::size_t i = 0; blocky && i < spec.lie_generators.size(); ++i) {
            auto w = block_frequencies(spec.lie_generators[i]);
            if (w)
                W.row(static_cast<int>(i)) = w->transpose();
            else
                blocky = false;
        }
        if (blocky) {
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(W);
            const auto& sv = svd.singularValues();
            int rank = 0;
            for (int i = 0; i < sv.size(); ++i)
                if (sv[i] > 1e-10 * sv[0]) ++rank;
            if (rank == d) {
                cont = sample_full_torus(n, d, resolution);
                torus_path = true;
            }
        }
    }
    if (!torus_path)
        cont = sample_parameter_grid(spec.lie_generators, resolution, commuting, seed);

    // compose discrete x continuous, deduplicate, then close under inversion
    GroupSample out;
    out.n = n;
    out.covering_resolution = cont.covering;
    out.exact = false;
    out.component_generators = detail::bracket_closure_basis(spec.lie_generators);
    detail::DedupSet dedup(kDedupTol, n * n);
    out.elements.reserve(discrete.size() * cont.elements.size());
    for (const auto& dmat : discrete)
        for (const auto& cmat : cont.elements) {
            if (out.elements.size() >= kMaxElements) break;
            push_unique(out.elements, dedup, dmat * cmat);
        }
    if (!(cont.inversion_closed && discrete.size() == 1)) {
        // transpose = inverse for orthogonal matrices
        const std::size_t base_count = out.elements.size();
        for (std::size_t i = 0; i < base_count; ++i) {
            if (out.elements.size() >= kMaxElements) break;
            push_unique(out.elements, dedup, out.elements[i].transpose());
        }
    }
    return out;
}

GroupSample sample_group(const GroupSpec& spec, double resolution,
                         std::uint64_t seed) {
    if (!spec.lie_generators.empty()) return sample_lie_group(spec, resolution, seed);
    std::vector<Eigen::MatrixXd> gens = spec.finite_generators;
    gens.insert(gens.end(), spec.coset_reps.begin(), spec.coset_reps.end());
    if (gens.empty()) gens.push_back(identity(spec.n));
    GroupSample out;
    out.n = spec.n;
    out.elements = generate_finite_closure(gens);
    out.covering_resolution = 0.0;
    out.exact = true;
    return out;
}

Orbit orbit(const GroupSample& sample, const Eigen::VectorXd& v) {
    if (sample.elements.empty()) throw EmptySample("orbit: sample has no elements");
    if (v.size() != sample.n) throw DimensionMismatch("orbit: base point dimension mismatch");
    if (std::abs(v.norm() - 1.0) > 1e-9)
        throw NotUnitVector("orbit: base point must lie on the unit sphere");

    std::vector<Eigen::VectorXd> pts;
    std::vector<int> idx;
    pts.reserve(sample.elements.size());
    detail::DedupSet dedup(1e-9, sample.n);
    for (std::size_t i = 0; i < sample.elements.size(); ++i) {
        Eigen::VectorXd p = sample.elements[i] * v;
        if (dedup.find(p.data()) >= 0) continue;
        pts.push_back(std::move(p));
        dedup.insert(pts.back().data(), static_cast<int>(pts.size()) - 1);
        idx.push_back(static_cast<int>(i));
    }

    Orbit out;
    out.base = v;
    out.points.resize(static_cast<int>(pts.size()), sample.n);
    for (int i = 0; i < out.points.rows(); ++i) out.points.row(i) = pts[i].transpose();
    out.element_index = std::move(idx);
    out.covering_resolution = sample.covering_resolution;
    out.component_generators = sample.component_generators;
    return out;
}

GroupSpec builtin_spec(const std::string& name, const nlohmann::json& params) {
    auto get_num = [&params](const char* key, double fallback,
                             bool required = false) {
        if (params.contains(key)) {
            if (!params[key].is_number())
                throw BadParams(std::string("builtin_spec: parameter '") + key +
                                "' must be a number");
            return params[key].get<double>();
        }
        if (required)
            throw BadParams(std::string("builtin_spec: missing parameter '") + key + "'");
        return fallback;
    };
    auto rotation2 = [](double angle) {
        Eigen::MatrixXd R(2, 2);
        put_rotation_block(R, 0, angle);
        return R;
    };
    auto planar_skew = [](int n, int i, int j, double w) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
        A(i, j) = -w;
        A(j, i) = w;
        return A;
    };

    GroupSpec spec;
    spec.builtin = name;
    spec.builtin_params = params;

    if (name == "so3_axis_fix" || name == "o3_axis_fix") {
        spec.n = 3;
        spec.lie_generators.push_back(planar_skew(3, 0, 1, 1.0));
        if (name == "o3_axis_fix")
            spec.coset_reps.push_back(Eigen::Vector3d(1, 1, -1).asDiagonal());
        return spec;
    }
    if (name == "cyclic" || name == "dihedral") {
        const double kd = get_num("k", 0.0, true);
        const int k = static_cast<int>(std::lround(kd));
        if (k < 1 || std::abs(kd - k) > 1e-12)
            throw BadParams("builtin_spec: k must be a positive integer");
        spec.n = 2;
        spec.finite_generators.push_back(rotation2(2 * M_PI / k));
        if (name == "dihedral")
            spec.finite_generators.push_back(Eigen::Vector2d(1, -1).asDiagonal());
        return spec;
    }
    if (name == "block_reducible") {
        const int n = static_cast<int>(get_num("n", 0.0, true));
        if (n < 1) throw BadParams("builtin_spec: n must be >= 1");
        if (!params.contains("blocks") || !params["blocks"].is_array())
            throw BadParams("builtin_spec: blocks must be an array of sizes");
        spec.n = n;
        int at = 0;
        for (const auto& bj : params["blocks"]) {
            if (!bj.is_number_integer())
                throw BadParams("builtin_spec: block sizes must be integers");
            const int b = bj.get<int>();
            if (b < 1 || at + b > n)
                throw BadParams("builtin_spec: block sizes must be positive and fit in n");
            if (b == 1) {
                Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
                d[at] = -1;
                spec.finite_generators.push_back(d.asDiagonal());
            } else {
                for (int i = at; i < at + b; ++i)
                    for (int j = i + 1; j < at + b; ++j)
                        spec.lie_generators.push_back(planar_skew(n, i, j, 1.0));
            }
            at += b;
        }
        // remaining coordinates (if any) are fixed
        return spec;
    }
    if (name == "torus_swap_4d") {
        spec.n = 4;
        std::array<double, 4> w{1.0, 0.0, 0.0, 1.0};
        if (params.contains("omega")) {
            if (!params["omega"].is_array() || params["omega"].size() != 4)
                throw BadParams("builtin_spec: omega must be an array of 4 reals");
            for (int i = 0; i < 4; ++i) w[i] = params["omega"][i].get<double>();
        }
        Eigen::MatrixXd A1 = planar_skew(4, 0, 1, w[0]) + planar_skew(4, 2, 3, w[1]);
        Eigen::MatrixXd A2 = planar_skew(4, 0, 1, w[2]) + planar_skew(4, 2, 3, w[3]);
        if (A1.cwiseAbs().maxCoeff() > 0) spec.lie_generators.push_back(A1);
        if (A2.cwiseAbs().maxCoeff() > 0) spec.lie_generators.push_back(A2);
        if (spec.lie_generators.empty())
            throw BadParams("builtin_spec: omega must not vanish identically");
        Eigen::MatrixXd S = Eigen::MatrixXd::Zero(4, 4);
        S(0, 2) = S(1, 3) = S(2, 0) = S(3, 1) = 1.0;  // swap the two blocks
        spec.coset_reps.push_back(S);
        return spec;
    }
    if (name == "d1_4d") {
        spec.n = 4;
        std::array<double, 2> w{1.0, 2.0};
        if (params.contains("omega")) {
            if (!params["omega"].is_array() || params["omega"].size() != 2)
                throw BadParams("builtin_spec: omega must be an array of 2 reals");
            for (int i = 0; i < 2; ++i) w[i] = params["omega"][i].get<double>();
        }
        if (w[0] == 0 && w[1] == 0)
            throw BadParams("builtin_spec: omega must not vanish identically");
        spec.lie_generators.push_back(planar_skew(4, 0, 1, w[0]) +
                                      planar_skew(4, 2, 3, w[1]));
        // time reversal always normalizes the one-parameter subgroup; the
        // block swap does so only when the two frequencies agree
        spec.coset_reps.push_back(Eigen::Vector4d(1, -1, 1, -1).asDiagonal());
        if (w[0] == w[1]) {
            Eigen::MatrixXd S = Eigen::MatrixXd::Zero(4, 4);
            S(0, 2) = S(1, 3) = S(2, 0) = S(3, 1) = 1.0;
            spec.coset_reps.push_back(S);
        }
        return spec;
    }
    if (name == "rank2_d3") {
        spec.n = 4;
        const double x = get_num("x", 1.0), y = get_num("y", 1.0);
        const double t = get_num("t", 0.0), s = get_num("s", 0.0);
        if (x == 0 && y == 0)
            throw BadParams("builtin_spec: x and y must not both vanish");
        Eigen::MatrixXd M1 = planar_skew(4, 2, 3, -1.0);  // lower-left entry -1
        Eigen::MatrixXd M2 = Eigen::MatrixXd::Zero(4, 4);
        M2(0, 2) = x;  M2(0, 3) = y;
        M2(1, 2) = t * x; M2(1, 3) = t * y;
        M2(2, 0) = -x; M2(2, 1) = -t * x;
        M2(3, 0) = -y; M2(3, 1) = -t * y;
        M2(2, 3) = s;  M2(3, 2) = -s;
        spec.lie_generators.push_back(M1);
        spec.lie_generators.push_back(M2);
        return spec;
    }
    throw UnknownBuiltin("builtin_spec: unknown builtin '" + name + "'");
}

}  // namespace orbitforge
