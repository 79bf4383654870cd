#include "ridgerec/slicing.hpp"

#include <algorithm>
#include <numeric>

#include "ridgerec/error.hpp"

namespace ridgerec {

int SlicingStrategy::resolve_R(int n_samples, int dim) const {
    if (requested_R > 0) return requested_R;
    const int denom = std::max(2 * dim, 10);
    return std::min(20, std::max(2, n_samples / denom));
}

int SlicePartition::min_count() const {
    int mc = counts.empty() ? 0 : counts[0];
    for (int c : counts) mc = std::min(mc, c);
    return mc;
}

namespace {

// Merge slices below min_count into a neighbor (lower first), removing the
// shared edge so assign() stays consistent with membership.
void merge_small_slices(SlicePartition& p, int min_count) {
    while (p.R > 1) {
        int victim = -1;
        for (int r = 0; r < p.R; ++r) {
            if (p.counts[r] < std::max(1, min_count)) {
                victim = r;
                break;
            }
        }
        if (victim < 0) return;
        const int target = victim > 0 ? victim - 1 : victim + 1;
        const int lo = std::min(victim, target);
        const int hi = std::max(victim, target);
        std::vector<int> combined;
        combined.reserve(p.membership[lo].size() + p.membership[hi].size());
        std::merge(p.membership[lo].begin(), p.membership[lo].end(), p.membership[hi].begin(),
                   p.membership[hi].end(), std::back_inserter(combined));
        p.membership[lo] = std::move(combined);
        p.counts[lo] += p.counts[hi];
        p.membership.erase(p.membership.begin() + hi);
        p.counts.erase(p.counts.begin() + hi);
        p.edges.erase(p.edges.begin() + hi);  // edge between lo and hi
        --p.R;
    }
    if (p.counts[0] < std::max(1, min_count))
        throw Error(errc::slice_too_small,
                    "cannot form slices with at least " + std::to_string(min_count) +
                        " samples each; use fewer slices or more data");
}

SlicePartition single_slice(const VectorXd& y, bool degenerate) {
    SlicePartition p;
    p.R = 1;
    p.edges = {y.minCoeff(), y.maxCoeff()};
    p.membership.resize(1);
    p.membership[0].resize(y.size());
    std::iota(p.membership[0].begin(), p.membership[0].end(), 0);
    p.counts = {static_cast<int>(y.size())};
    p.degenerate_range = degenerate;
    return p;
}

SlicePartition partition_equal_count(const VectorXd& y, int R) {
    const int n = static_cast<int>(y.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return y(a) != y(b) ? y(a) < y(b) : a < b;
    });

    // Cut positions at order statistics; a cut landing inside a run of tied
    // values advances past the run so ties are never split across slices.
    std::vector<int> cuts;
    int prev = 0;
    for (int r = 1; r < R; ++r) {
        int c = std::max(static_cast<int>(static_cast<long long>(r) * n / R), prev + 1);
        while (c < n && y(order[c]) == y(order[c - 1])) ++c;
        if (c >= n) break;
        cuts.push_back(c);
        prev = c;
    }

    SlicePartition p;
    p.R = static_cast<int>(cuts.size()) + 1;
    p.membership.resize(p.R);
    p.counts.assign(p.R, 0);
    p.edges.resize(p.R + 1);
    p.edges[0] = y(order[0]);
    p.edges[p.R] = y(order[n - 1]);
    int slice = 0;
    for (int pos = 0; pos < n; ++pos) {
        if (slice < static_cast<int>(cuts.size()) && pos == cuts[slice]) {
            p.edges[slice + 1] = y(order[pos - 1]);
            ++slice;
        }
        p.membership[slice].push_back(order[pos]);
    }
    for (int r = 0; r < p.R; ++r) {
        std::sort(p.membership[r].begin(), p.membership[r].end());
        p.counts[r] = static_cast<int>(p.membership[r].size());
    }
    return p;
}

SlicePartition partition_equal_width(const VectorXd& y, int R) {
    const int n = static_cast<int>(y.size());
    SlicePartition p;
    p.R = R;
    p.edges.resize(R + 1);
    const double lo = y.minCoeff();
    const double hi = y.maxCoeff();
    for (int r = 0; r <= R; ++r)
        p.edges[r] = lo + (hi - lo) * static_cast<double>(r) / static_cast<double>(R);
    p.edges[R] = hi;
    p.membership.resize(R);
    for (int i = 0; i < n; ++i) p.membership[assign(p, y(i))].push_back(i);
    p.counts.resize(R);
    for (int r = 0; r < R; ++r) p.counts[r] = static_cast<int>(p.membership[r].size());
    return p;
}

}  // namespace

SlicePartition partition(const VectorXd& y, const SlicingStrategy& strategy, int min_count) {
    const int n = static_cast<int>(y.size());
    if (n < 1) throw Error(errc::invalid_input, "empty response vector");
    if (!y.allFinite()) throw Error(errc::invalid_input, "non-finite response values");
    const int R = strategy.requested_R;
    if (R < 1) throw Error(errc::bad_config, "slice count must be resolved to >= 1");
    if (R > n)
        throw Error(errc::bad_slicing, "requested " + std::to_string(R) + " slices for " +
                                           std::to_string(n) + " samples");

    if (y.minCoeff() == y.maxCoeff()) {
        SlicePartition p = single_slice(y, true);
        if (n < std::max(1, min_count))
            throw Error(errc::slice_too_small, "not enough samples for the requested method");
        return p;
    }
    SlicePartition p = strategy.kind == SliceKind::EqualCount ? partition_equal_count(y, R)
                                                              : partition_equal_width(y, R);
    merge_small_slices(p, min_count);
    return p;
}

int assign(const SlicePartition& p, double y_value) {
    if (y_value <= p.edges.front()) return 0;
    if (y_value > p.edges.back()) return p.R - 1;
    const auto it = std::lower_bound(p.edges.begin() + 1, p.edges.end(), y_value);
    return static_cast<int>(it - (p.edges.begin() + 1));
}

}  // namespace ridgerec
