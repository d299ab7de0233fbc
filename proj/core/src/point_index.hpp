/**
 * @file point_index.hpp
 * @brief Internal kd-tree over orbit points for nearest/farthest queries.
 *
 * Solver inner loops ask for the closest and the farthest orbit point from a
 * moving query millions of times; on six-figure orbits a pruned tree query
 * is two orders of magnitude cheaper than a linear scan. Exact distance ties
 * resolve to the lowest original point index, independent of tree layout, so
 * solver trajectories are reproducible.
 */
#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace orbitforge::detail {

class PointIndex {
public:
    /// Builds over the rows of points (kept by reference; caller keeps alive).
    explicit PointIndex(const Eigen::MatrixXd& points);

    /// (squared distance, row index) of the nearest point to w.
    std::pair<double, int> nearest(const Eigen::VectorXd& w) const;

    /// (squared distance, row index) of the farthest point from w.
    std::pair<double, int> farthest(const Eigen::VectorXd& w) const;

private:
    struct Node {
        int begin, end;        // range in order_
        int left = -1;         // children; -1 for leaf
        int right = -1;
        Eigen::VectorXd lo, hi;  // bounding box
    };

    int build(int begin, int end);
    void search_near(int node, const Eigen::VectorXd& w, double& best,
                     int& best_idx) const;
    void search_far(int node, const Eigen::VectorXd& w, double& best,
                    int& best_idx) const;
    double box_min_dist2(const Node& nd, const Eigen::VectorXd& w) const;
    double box_max_dist2(const Node& nd, const Eigen::VectorXd& w) const;

    const Eigen::MatrixXd& pts_;
    std::vector<int> order_;
    std::vector<Node> nodes_;
    static constexpr int kLeafSize = 16;
};

}  // namespace orbitforge::detail
