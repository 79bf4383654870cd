#include "ridgerec/linalg.hpp"

#include <cmath>

namespace ridgerec {

namespace {

void fix_column_signs(MatrixXd& v) {
    for (int j = 0; j < v.cols(); ++j) {
        int imax = 0;
        double amax = -1.0;
        for (int i = 0; i < v.rows(); ++i) {
            const double a = std::abs(v(i, j));
            if (a > amax) {
                amax = a;
                imax = i;
            }
        }
        if (v(imax, j) < 0.0) v.col(j) = -v.col(j);
    }
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(const MatrixXd& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw Error(errc::invalid_input, "symmetric matrix must be square and nonempty");
    if (!m.allFinite())
        throw Error(errc::invalid_input, "symmetric matrix has non-finite entries");
    mat_ = m;
    // Mirror the lower triangle so symmetry holds bit-exactly.
    for (int i = 0; i < mat_.rows(); ++i)
        for (int j = 0; j < i; ++j) mat_(j, i) = mat_(i, j);
}

SymmetricMatrix SymmetricMatrix::identity(int dim) {
    return SymmetricMatrix(MatrixXd::Identity(dim, dim));
}

OrthonormalBasis::OrthonormalBasis(const MatrixXd& columns) {
    const int m = static_cast<int>(columns.rows());
    const int n = static_cast<int>(columns.cols());
    if (n < 1 || n > m)
        throw Error(errc::invalid_input, "basis needs 1 <= n <= ambient dimension");
    const MatrixXd gram = columns.transpose() * columns;
    if ((gram - MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
        throw Error(errc::invalid_input, "basis columns are not orthonormal");
    cols_ = columns;
}

EigenDecomposition sym_eig(const SymmetricMatrix& m) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(m.mat());
    if (solver.info() != Eigen::Success)
        throw Error(errc::invalid_input, "eigendecomposition failed to converge");
    EigenDecomposition out;
    // Eigen returns ascending order; flip to descending.
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    fix_column_signs(out.vectors);
    return out;
}

SymmetricMatrix inv_sqrt(const SymmetricMatrix& m) {
    const EigenDecomposition eig = sym_eig(m);
    const int dim = m.dim();
    const double lambda_max = eig.values(0);
    const double lambda_min = eig.values(dim - 1);
    if (lambda_max <= 0.0 || lambda_min <= dim * 1e-14 * lambda_max)
        throw Error(errc::ill_conditioned_covariance,
                    "matrix is singular or indefinite; cannot form inverse square root");
    if (lambda_max / lambda_min > 1e12)
        throw Error(errc::ill_conditioned_covariance,
                    "condition number exceeds 1e12; refusing to whiten");
    const VectorXd scale = eig.values.cwiseSqrt().cwiseInverse();
    return SymmetricMatrix(eig.vectors * scale.asDiagonal() * eig.vectors.transpose());
}

double subspace_distance(const OrthonormalBasis& a, const OrthonormalBasis& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.n() != b.n())
        throw Error(errc::dimension_mismatch, "subspace distance needs equal shapes");
    Eigen::JacobiSVD<MatrixXd> svd(a.columns().transpose() * b.columns());
    const double smin = svd.singularValues().minCoeff();
    const double c = std::min(1.0, std::max(0.0, smin));
    return std::sqrt(std::max(0.0, 1.0 - c * c));
}

OrthonormalBasis orthonormalize(const MatrixXd& columns) {
    const int m = static_cast<int>(columns.rows());
    const int n = static_cast<int>(columns.cols());
    if (n < 1 || n > m) throw Error(errc::invalid_input, "need 1 <= n <= m columns");
    Eigen::HouseholderQR<MatrixXd> qr(columns);
    MatrixXd q = qr.householderQ() * MatrixXd::Identity(m, n);
    const MatrixXd r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
        if (std::abs(r(j, j)) < 1e-12 * std::max(1.0, columns.col(j).norm()))
            throw Error(errc::invalid_input, "columns are rank deficient");
    fix_column_signs(q);
    return OrthonormalBasis(q);
}

}  // namespace ridgerec
