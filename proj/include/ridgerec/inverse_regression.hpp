#pragma once

#include <vector>

#include "ridgerec/dataset.hpp"
#include "ridgerec/linalg.hpp"
#include "ridgerec/slicing.hpp"

namespace ridgerec {

enum class Method { SIR, SAVE };

const char* method_name(Method m);

struct MomentMatrixEstimate {
    Method method;
    SymmetricMatrix matrix;
    EigenDecomposition eig;
    int R;                    // achieved slice count
    std::vector<int> counts;  // per-slice sizes
    int N;                    // sample count
};

struct SubspaceEstimate {
    OrthonormalBasis basis;
    int n;
    Method source;
};

// Per-slice means of standardized inputs, one row per slice.
MatrixXd slice_means(const Dataset& z, const SlicePartition& p);

// Per-slice sample covariances (1/(N_r - 1)); every slice needs N_r >= 2.
std::vector<SymmetricMatrix> slice_covariances(const Dataset& z, const SlicePartition& p);

// C_SIR = (1/N) sum_r N_r mu_r mu_r^T on standardized data.
MomentMatrixEstimate sir_matrix(const Dataset& z, const SlicePartition& p);

// C_SAVE = (1/N) sum_r N_r (I - Sigma_r)^2 on standardized data.
MomentMatrixEstimate save_matrix(const Dataset& z, const SlicePartition& p);

// First n eigenvector columns of the estimate.
SubspaceEstimate estimate_subspace(const MomentMatrixEstimate& est, int n);

}  // namespace ridgerec
