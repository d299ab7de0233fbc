/**
 * @file internal.hpp
 * @brief Shared helpers private to the library: matrix/point deduplication
 *        and bracket-closure bases.
 */
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace orbitforge::detail {

/// Approximate nearest-duplicate set for fixed-size real buffers (matrices or
/// points), max-entry metric. Quantizes two leading coordinates into a hash
/// key and scans the 3x3 neighborhood of cells, so exact duplicates are
/// always caught regardless of quantization boundaries.
class DedupSet {
public:
    DedupSet(double tol, int stride) : tol_(tol), stride_(stride) {}

    /// Returns the index of a stored duplicate of buf, or -1.
    int find(const double* buf) const {
        const long q0 = quant(buf[0]), q1 = quant(stride_ > 1 ? buf[1] : 0.0);
        for (long d0 = -1; d0 <= 1; ++d0)
            for (long d1 = -1; d1 <= 1; ++d1) {
                auto it = buckets_.find(key(q0 + d0, q1 + d1));
                if (it == buckets_.end()) continue;
                for (int idx : it->second)
                    if (max_abs_diff(buf, stored_[idx]) <= tol_) return idx;
            }
        return -1;
    }

    /// Inserts buf with the given payload index (no duplicate check).
    void insert(const double* buf, int payload) {
        stored_.push_back(buf);
        payloads_.push_back(payload);
        const long q0 = quant(buf[0]), q1 = quant(stride_ > 1 ? buf[1] : 0.0);
        buckets_[key(q0, q1)].push_back(static_cast<int>(stored_.size()) - 1);
    }

    int payload(int idx) const { return payloads_[idx]; }

private:
    long quant(double x) const { return std::lround(x / tol_); }
    static std::uint64_t key(long a, long b) {
        return static_cast<std::uint64_t>(a) * 0x9e3779b97f4a7c15ULL ^
               static_cast<std::uint64_t>(b);
    }
    double max_abs_diff(const double* a, const double* b) const {
        double m = 0.0;
        for (int i = 0; i < stride_; ++i) m = std::max(m, std::abs(a[i] - b[i]));
        return m;
    }

    double tol_;
    int stride_;
    std::vector<const double*> stored_;  // non-owning; callers keep data alive
    std::vector<int> payloads_;
    std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

/// Orthonormal basis (Frobenius inner product) of the Lie algebra generated
/// by the given skew matrices: repeatedly adjoins commutators until the span
/// stabilizes or exceeds max_dim (returns an oversized basis in that case so
/// callers can detect the overflow).
std::vector<Eigen::MatrixXd> bracket_closure_basis(
    const std::vector<Eigen::MatrixXd>& generators, double tol = 1e-9,
    int max_dim = 1 << 10);

}  // namespace orbitforge::detail
