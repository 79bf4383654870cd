#include "ridgerec/analysis.hpp"

namespace ridgerec {

FitResult fit_method(const Dataset& data, Method method, const SlicingStrategy& strategy) {
    data.validate();
    Standardizer standardizer = Standardizer::fit(data);
    Dataset z = standardizer.apply(data);
    SlicingStrategy resolved = strategy;
    resolved.requested_R = strategy.resolve_R(data.n_samples(), data.dim());
    const int min_count = method == Method::SAVE ? 2 : 1;
    SlicePartition part = partition(z.y, resolved, min_count);
    MomentMatrixEstimate est =
        method == Method::SIR ? sir_matrix(z, part) : save_matrix(z, part);
    return FitResult{std::move(standardizer), std::move(part), std::move(est)};
}

}  // namespace ridgerec
