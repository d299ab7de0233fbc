/**
 * @file matrix.hpp
 * @brief Skew exponentials, commutators, and numerical span bases.
 *
 * Mathematical background
 * -----------------------
 * A one-parameter subgroup of the orthogonal group is t ↦ exp(tA) with A
 * skew-symmetric (A + Aᵀ = 0); the exponential of a skew matrix is a
 * rotation: exp(tA)ᵀ exp(tA) = I and det exp(tA) = +1. The commutator
 * [A,B] = AB − BA of two skew matrices is again skew, and iterated
 * commutators close up into the Lie algebra generated by a set of matrices.
 * span_basis extracts an orthonormal basis (and a noise-robust dimension)
 * of the linear span of a finite set of vectors via SVD.
 */
#pragma once

#include <Eigen/Dense>

#include <vector>

namespace orbitforge {

/// Orthonormal basis of the span of a set of vectors.
struct SubspaceBasis {
    int n = 0;                              ///< ambient dimension
    std::vector<Eigen::VectorXd> vectors;   ///< orthonormal basis, size dim
    int dim = 0;                            ///< numerical dimension
    double sigma_threshold = 1e-8;          ///< relative cutoff used
};

/// exp(tA) for skew-symmetric A (scaling-and-squaring Padé).
/// Throws NotSkewSymmetric when max|A + Aᵀ| > 1e-10.
Eigen::MatrixXd exp_skew(const Eigen::MatrixXd& A, double t);

/// AB − BA. Throws DimensionMismatch on incompatible shapes.
Eigen::MatrixXd commutator(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

/// SVD span: dimension = number of singular values > sigma_threshold·σ_max.
/// Throws EmptyInput when vectors is empty.
SubspaceBasis span_basis(const std::vector<Eigen::VectorXd>& vectors,
                         double sigma_threshold = 1e-8);

/// true iff max|MᵀM − I| <= tol.
bool is_orthogonal(const Eigen::MatrixXd& M, double tol);

}  // namespace orbitforge
