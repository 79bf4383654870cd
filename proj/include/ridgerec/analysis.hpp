#pragma once

#include "ridgerec/inverse_regression.hpp"
#include "ridgerec/standardize.hpp"

namespace ridgerec {

// One full fit: standardize, partition, assemble, eigendecompose.
struct FitResult {
    Standardizer standardizer;
    SlicePartition part;
    MomentMatrixEstimate est;
};

FitResult fit_method(const Dataset& data, Method method, const SlicingStrategy& strategy);

}  // namespace ridgerec
