#include "ridgerec/inverse_regression.hpp"

namespace ridgerec {

const char* method_name(Method m) { return m == Method::SIR ? "sir" : "save"; }

namespace {

void check_partition(const Dataset& z, const SlicePartition& p) {
    int total = 0;
    for (int c : p.counts) total += c;
    if (total != z.n_samples())
        throw Error(errc::dimension_mismatch, "partition does not cover the dataset");
}

}  // namespace

MatrixXd slice_means(const Dataset& z, const SlicePartition& p) {
    check_partition(z, p);
    const int m = z.dim();
    MatrixXd means = MatrixXd::Zero(p.R, m);
    for (int r = 0; r < p.R; ++r) {
        // Fixed ascending-index summation order keeps output bit-reproducible.
        for (int i : p.membership[r]) means.row(r) += z.X.row(i);
        means.row(r) /= static_cast<double>(p.counts[r]);
    }
    return means;
}

std::vector<SymmetricMatrix> slice_covariances(const Dataset& z, const SlicePartition& p) {
    check_partition(z, p);
    const int m = z.dim();
    const MatrixXd means = slice_means(z, p);
    std::vector<SymmetricMatrix> covs;
    covs.reserve(p.R);
    for (int r = 0; r < p.R; ++r) {
        if (p.counts[r] < 2)
            throw Error(errc::slice_too_small,
                        "slice " + std::to_string(r + 1) +
                            " holds a single sample; re-partition with fewer slices");
        MatrixXd cov = MatrixXd::Zero(m, m);
        for (int i : p.membership[r]) {
            const VectorXd d = z.X.row(i).transpose() - means.row(r).transpose();
            cov.noalias() += d * d.transpose();
        }
        cov /= static_cast<double>(p.counts[r] - 1);
        covs.emplace_back(cov);
    }
    return covs;
}

MomentMatrixEstimate sir_matrix(const Dataset& z, const SlicePartition& p) {
    const int m = z.dim();
    const int n = z.n_samples();
    const MatrixXd means = slice_means(z, p);
    MatrixXd c = MatrixXd::Zero(m, m);
    for (int r = 0; r < p.R; ++r)
        c.noalias() += static_cast<double>(p.counts[r]) *
                       (means.row(r).transpose() * means.row(r));
    c /= static_cast<double>(n);
    SymmetricMatrix mat(c);
    EigenDecomposition eig = sym_eig(mat);
    return MomentMatrixEstimate{Method::SIR, std::move(mat), std::move(eig), p.R, p.counts, n};
}

MomentMatrixEstimate save_matrix(const Dataset& z, const SlicePartition& p) {
    const int m = z.dim();
    const int n = z.n_samples();
    const auto covs = slice_covariances(z, p);
    const MatrixXd eye = MatrixXd::Identity(m, m);
    MatrixXd c = MatrixXd::Zero(m, m);
    for (int r = 0; r < p.R; ++r) {
        const MatrixXd d = eye - covs[r].mat();
        c.noalias() += static_cast<double>(p.counts[r]) * (d * d);
    }
    c /= static_cast<double>(n);
    SymmetricMatrix mat(c);
    EigenDecomposition eig = sym_eig(mat);
    return MomentMatrixEstimate{Method::SAVE, std::move(mat), std::move(eig), p.R, p.counts, n};
}

SubspaceEstimate estimate_subspace(const MomentMatrixEstimate& est, int n) {
    const int m = est.matrix.dim();
    if (n < 1 || n > m)
        throw Error(errc::invalid_input, "subspace dimension must be in [1, m]");
    return SubspaceEstimate{OrthonormalBasis(est.eig.vectors.leftCols(n)), n, est.method};
}

}  // namespace ridgerec
