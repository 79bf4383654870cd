#include "ridgerec/standardize.hpp"

namespace ridgerec {

Standardizer Standardizer::fit(const Dataset& data) {
    data.validate();
    const int n = data.n_samples();
    const int m = data.dim();
    if (n <= m)
        throw Error(errc::insufficient_samples,
                    "covariance needs N >= m+1 (got N=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ")");

    VectorXd mean = data.X.colwise().mean();
    MatrixXd centered = data.X.rowwise() - mean.transpose();
    MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(n - 1);
    SymmetricMatrix cov_sym(cov);
    SymmetricMatrix whitener = inv_sqrt(cov_sym);
    return Standardizer(std::move(mean), std::move(cov_sym), std::move(whitener));
}

Dataset Standardizer::apply(const Dataset& data) const {
    if (data.dim() != dim())
        throw Error(errc::dimension_mismatch, "dataset dimension does not match standardizer");
    Dataset out;
    out.X = (data.X.rowwise() - mean_.transpose()) * whitener_.mat();
    out.y = data.y;
    return out;
}

MatrixXd Standardizer::pullback(const OrthonormalBasis& w) const {
    if (w.ambient_dim() != dim())
        throw Error(errc::dimension_mismatch, "basis dimension does not match standardizer");
    MatrixXd directions = whitener_.mat() * w.columns();
    for (int j = 0; j < directions.cols(); ++j) directions.col(j).normalize();
    return directions;
}

}  // namespace ridgerec
