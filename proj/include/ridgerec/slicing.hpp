#pragma once

#include <vector>

#include "ridgerec/linalg.hpp"

namespace ridgerec {

enum class SliceKind { EqualWidth, EqualCount };

struct SlicingStrategy {
    SliceKind kind = SliceKind::EqualCount;
    // 0 means "auto": R = min(20, max(2, N / max(2m, 10))); m supplied at use.
    int requested_R = 0;

    int resolve_R(int n_samples, int dim) const;
};

// Partition of the observed response range into R slices. Empty (or
// under-filled) slices are merged away, so achieved R can be less than
// requested and every count is >= min_count.
struct SlicePartition {
    int R = 0;
    std::vector<double> edges;                // length R+1, nondecreasing
    std::vector<std::vector<int>> membership; // per-slice sample indices, ascending
    std::vector<int> counts;                  // per-slice sizes
    bool degenerate_range = false;            // all responses equal

    int min_count() const;
};

// Build a partition of y. min_count > 1 forces merging of small slices
// (SAVE needs every slice to hold at least 2 samples).
SlicePartition partition(const VectorXd& y, const SlicingStrategy& strategy,
                         int min_count = 1);

// Slice index for a response value; out-of-range values clamp to the end
// slices, values exactly on an interior edge go to the lower slice.
int assign(const SlicePartition& p, double y_value);

}  // namespace ridgerec
