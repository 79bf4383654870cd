#pragma once

#include <Eigen/Dense>

#include "ridgerec/error.hpp"

namespace ridgerec {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Dense symmetric matrix. Construction mirrors the lower triangle into the
// upper one, so entries[i][j] == entries[j][i] holds exactly in storage.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(const MatrixXd& m);
    static SymmetricMatrix identity(int dim);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const MatrixXd& mat() const { return mat_; }
    double operator()(int i, int j) const { return mat_(i, j); }

private:
    MatrixXd mat_;
};

// Eigendecomposition with descending eigenvalues, orthonormal columns and a
// fixed sign convention (largest-magnitude entry of each column positive).
struct EigenDecomposition {
    VectorXd values;   // descending
    MatrixXd vectors;  // columns
};

// m x n matrix with orthonormal columns, n <= m.
class OrthonormalBasis {
public:
    explicit OrthonormalBasis(const MatrixXd& columns);

    int ambient_dim() const { return static_cast<int>(cols_.rows()); }
    int n() const { return static_cast<int>(cols_.cols()); }
    const MatrixXd& columns() const { return cols_; }

private:
    MatrixXd cols_;
};

EigenDecomposition sym_eig(const SymmetricMatrix& m);

// Symmetric inverse square root of an SPD matrix. Fails loudly on
// near-singular or badly conditioned input instead of regularizing.
SymmetricMatrix inv_sqrt(const SymmetricMatrix& m);

// ||A A^T - B B^T||_2, computed as sqrt(1 - sigma_min(A^T B)^2) for
// equal-dimension orthonormal bases. Result in [0, 1].
double subspace_distance(const OrthonormalBasis& a, const OrthonormalBasis& b);

// Orthonormalize the columns of a full-column-rank matrix (QR), applying the
// same sign convention as sym_eig so the result is reproducible.
OrthonormalBasis orthonormalize(const MatrixXd& columns);

}  // namespace ridgerec
