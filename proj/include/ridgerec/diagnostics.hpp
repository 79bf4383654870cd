#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ridgerec/analysis.hpp"
#include "ridgerec/testbed.hpp"

namespace ridgerec {

struct BootstrapRanges {
    int B = 0;
    VectorXd lo, hi;  // percentile bounds per eigenvalue index
    VectorXd point;   // full-data eigenvalues
};

struct ConvergenceReport {
    std::vector<int> grid;  // increasing sample sizes
    int trials = 0;
    int n = 0;
    Method method = Method::SIR;
    // grid_size x trials tables
    std::vector<std::vector<double>> eig_err;  // max-over-k squared error / lambda1(ref)^2
    std::vector<std::vector<double>> sub_err;  // subspace distance to reference
    std::optional<double> eig_slope;           // absent for a single-size grid
    std::optional<double> sub_slope;
    int reference_N = 0;
};

// Row-resample the dataset B times, re-running the full pipeline each time;
// per-resample RNG streams are derived from (seed, resample index), so the
// result is independent of execution order.
BootstrapRanges bootstrap_eigs(const Dataset& data, Method method,
                               const SlicingStrategy& strategy, int B,
                               double lo_percentile, double hi_percentile,
                               std::uint64_t seed);

// argmax over n of the eigenvalue gap; smallest n on ties.
int suggest_dimension(const EigenDecomposition& eig);

// Rows (w_1^T z_i, ..., w_n^T z_i, y_i) with z standardized.
MatrixXd summary_coordinates(const Dataset& data, const Standardizer& s,
                             const SubspaceEstimate& sub);

ConvergenceReport convergence_study(const TestFunction& fn, const std::vector<int>& grid,
                                    int trials, int n, Method method,
                                    const SlicingStrategy& strategy, int reference_N,
                                    std::uint64_t seed);

}  // namespace ridgerec
