#pragma once

#include "ridgerec/dataset.hpp"
#include "ridgerec/linalg.hpp"

namespace ridgerec {

// Fitted affine transform taking raw inputs to zero-mean, identity-covariance
// coordinates. Whitening uses the symmetric inverse square root, so the
// standardized data are unique up to a data-independent orthogonal factor.
class Standardizer {
public:
    static Standardizer fit(const Dataset& data);

    Dataset apply(const Dataset& data) const;

    // Map directions estimated in standardized coordinates back to original
    // input coordinates (whitener * w, renormalized to unit length).
    MatrixXd pullback(const OrthonormalBasis& w) const;

    const VectorXd& mean() const { return mean_; }
    const SymmetricMatrix& cov() const { return cov_; }
    const SymmetricMatrix& whitener() const { return whitener_; }
    int dim() const { return static_cast<int>(mean_.size()); }

private:
    Standardizer(VectorXd mean, SymmetricMatrix cov, SymmetricMatrix whitener)
        : mean_(std::move(mean)), cov_(std::move(cov)), whitener_(std::move(whitener)) {}

    VectorXd mean_;
    SymmetricMatrix cov_;
    SymmetricMatrix whitener_;
};

}  // namespace ridgerec
