#include "point_index.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace orbitforge::detail {

PointIndex::PointIndex(const Eigen::MatrixXd& points) : pts_(points) {
    order_.resize(points.rows());
    std::iota(order_.begin(), order_.end(), 0);
    nodes_.reserve(2 * (points.rows() / kLeafSize + 2));
    if (points.rows() > 0) build(0, static_cast<int>(points.rows()));
}

int PointIndex::build(int begin, int end) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({});
    Node nd;
    nd.begin = begin;
    nd.end = end;
    const int dim = static_cast<int>(pts_.cols());
    nd.lo = Eigen::VectorXd::Constant(dim, std::numeric_limits<double>::infinity());
    nd.hi = -nd.lo;
    for (int i = begin; i < end; ++i) {
        nd.lo = nd.lo.cwiseMin(pts_.row(order_[i]).transpose());
        nd.hi = nd.hi.cwiseMax(pts_.row(order_[i]).transpose());
    }
    if (end - begin > kLeafSize) {
        int axis = 0;
        (nd.hi - nd.lo).maxCoeff(&axis);
        const int mid = (begin + end) / 2;
        std::nth_element(order_.begin() + begin, order_.begin() + mid,
                         order_.begin() + end, [this, axis](int a, int b) {
                             const double xa = pts_(a, axis), xb = pts_(b, axis);
                             return xa < xb || (xa == xb && a < b);
                         });
        nd.left = build(begin, mid);
        nd.right = build(mid, end);
    }
    nodes_[id] = std::move(nd);
    return id;
}

double PointIndex::box_min_dist2(const Node& nd, const Eigen::VectorXd& w) const {
    double s = 0.0;
    for (int k = 0; k < w.size(); ++k) {
        const double d = std::max({nd.lo[k] - w[k], w[k] - nd.hi[k], 0.0});
        s += d * d;
    }
    return s;
}

double PointIndex::box_max_dist2(const Node& nd, const Eigen::VectorXd& w) const {
    double s = 0.0;
    for (int k = 0; k < w.size(); ++k) {
        const double d = std::max(std::abs(w[k] - nd.lo[k]), std::abs(w[k] - nd.hi[k]));
        s += d * d;
    }
    return s;
}

void PointIndex::search_near(int node, const Eigen::VectorXd& w, double& best,
                             int& best_idx) const {
    const Node& nd = nodes_[node];
    if (box_min_dist2(nd, w) > best) return;
    if (nd.left < 0) {
        for (int i = nd.begin; i < nd.end; ++i) {
            const int idx = order_[i];
            const double d = (pts_.row(idx).transpose() - w).squaredNorm();
            if (d < best || (d == best && idx < best_idx)) {
                best = d;
                best_idx = idx;
            }
        }
        return;
    }
    // visit the closer child first for faster pruning
    const double dl = box_min_dist2(nodes_[nd.left], w);
    const double dr = box_min_dist2(nodes_[nd.right], w);
    const int first = dl <= dr ? nd.left : nd.right;
    const int second = dl <= dr ? nd.right : nd.left;
    search_near(first, w, best, best_idx);
    search_near(second, w, best, best_idx);
}

void PointIndex::search_far(int node, const Eigen::VectorXd& w, double& best,
                            int& best_idx) const {
    const Node& nd = nodes_[node];
    if (box_max_dist2(nd, w) < best) return;
    if (nd.left < 0) {
        for (int i = nd.begin; i < nd.end; ++i) {
            const int idx = order_[i];
            const double d = (pts_.row(idx).transpose() - w).squaredNorm();
            if (d > best || (d == best && idx < best_idx)) {
                best = d;
                best_idx = idx;
            }
        }
        return;
    }
    const double dl = box_max_dist2(nodes_[nd.left], w);
    const double dr = box_max_dist2(nodes_[nd.right], w);
    const int first = dl >= dr ? nd.left : nd.right;
    const int second = dl >= dr ? nd.right : nd.left;
    search_far(first, w, best, best_idx);
    search_far(second, w, best, best_idx);
}

std::pair<double, int> PointIndex::nearest(const Eigen::VectorXd& w) const {
    double best = std::numeric_limits<double>::infinity();
    int best_idx = -1;
    search_near(0, w, best, best_idx);
    return {best, best_idx};
}

std::pair<double, int> PointIndex::farthest(const Eigen::VectorXd& w) const {
    double best = -1.0;
    int best_idx = -1;
    search_far(0, w, best, best_idx);
    return {best, best_idx};
}

}  // namespace orbitforge::detail
