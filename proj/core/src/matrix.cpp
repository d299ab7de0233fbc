#include "orbitforge/matrix.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "orbitforge/errors.hpp"
#include "internal.hpp"

namespace orbitforge {

Eigen::MatrixXd exp_skew(const Eigen::MatrixXd& A, double t) {
    if (A.rows() != A.cols())
        throw DimensionMismatch("exp_skew: matrix must be square");
    const double skew_defect = (A + A.transpose()).cwiseAbs().maxCoeff();
    if (skew_defect > 1e-10)
        throw NotSkewSymmetric("exp_skew: max|A + A^T| = " + std::to_string(skew_defect));
    Eigen::MatrixXd M = (t * A).exp();
    // exp of a skew matrix is orthogonal with determinant +1; a gross
    // violation can only mean overflow-scale inputs, so fail loudly.
    const double ortho_defect =
        (M.transpose() * M - Eigen::MatrixXd::Identity(A.rows(), A.cols()))
            .cwiseAbs().maxCoeff();
    if (!(ortho_defect <= 1e-9))
        throw NoConvergence("exp_skew: exponential lost orthogonality");
    return M;
}

Eigen::MatrixXd commutator(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw DimensionMismatch("commutator: operands must be square and same size");
    return A * B - B * A;
}

SubspaceBasis span_basis(const std::vector<Eigen::VectorXd>& vectors,
                         double sigma_threshold) {
    if (vectors.empty()) throw EmptyInput("span_basis: no vectors");
    const int n = static_cast<int>(vectors.front().size());
    Eigen::MatrixXd X(static_cast<int>(vectors.size()), n);
    for (int i = 0; i < X.rows(); ++i) {
        if (vectors[i].size() != n)
            throw DimensionMismatch("span_basis: mixed vector dimensions");
        X.row(i) = vectors[i].transpose();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    SubspaceBasis out;
    out.n = n;
    out.sigma_threshold = sigma_threshold;
    if (sv.size() == 0 || sv[0] <= 0.0) {
        out.dim = 0;
        return out;
    }
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > sigma_threshold * sv[0]) ++out.dim;
    out.vectors.reserve(out.dim);
    for (int i = 0; i < out.dim; ++i) out.vectors.push_back(svd.matrixV().col(i));
    return out;
}

bool is_orthogonal(const Eigen::MatrixXd& M, double tol) {
    if (M.rows() != M.cols()) return false;
    return (M.transpose() * M - Eigen::MatrixXd::Identity(M.rows(), M.cols()))
               .cwiseAbs().maxCoeff() <= tol;
}

namespace detail {

std::vector<Eigen::MatrixXd> bracket_closure_basis(
    const std::vector<Eigen::MatrixXd>& generators, double tol, int max_dim) {
    std::vector<Eigen::MatrixXd> basis;
    auto add = [&basis, tol](Eigen::MatrixXd M) {
        for (const auto& B : basis)
            M -= (M.cwiseProduct(B)).sum() * B;  // Frobenius projection
        const double nrm = M.norm();
        if (nrm <= tol) return false;
        basis.push_back(M / nrm);
        return true;
    };
    for (const auto& g : generators) add(g);
    bool changed = !basis.empty();
    while (changed && static_cast<int>(basis.size()) <= max_dim) {
        changed = false;
        const auto snapshot = basis;  // iterate over a stable copy
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j)
                if (add(commutator(snapshot[i], snapshot[j]))) changed = true;
    }
    return basis;
}

}  // namespace detail

}  // namespace orbitforge
