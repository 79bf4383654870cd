#include "ridgerec/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "ridgerec/rng.hpp"

namespace ridgerec {

namespace {

// Linearly interpolated percentile of a sorted sample, q in [0, 100].
double percentile_sorted(const std::vector<double>& sorted, double q) {
    const int n = static_cast<int>(sorted.size());
    if (n == 1) return sorted[0];
    const double pos = q / 100.0 * (n - 1);
    const int k = std::min(n - 2, static_cast<int>(std::floor(pos)));
    const double frac = pos - k;
    return sorted[k] * (1.0 - frac) + sorted[k + 1] * frac;
}

// Least-squares slope of log(y) vs log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(std::max(y[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

BootstrapRanges bootstrap_eigs(const Dataset& data, Method method,
                               const SlicingStrategy& strategy, int B,
                               double lo_percentile, double hi_percentile,
                               std::uint64_t seed) {
    if (B < 1) throw Error(errc::bad_config, "bootstrap needs at least one resample");
    if (!(0.0 <= lo_percentile && lo_percentile <= hi_percentile && hi_percentile <= 100.0))
        throw Error(errc::bad_config, "percentiles must satisfy 0 <= lo <= hi <= 100");
    data.validate();

    const int n = data.n_samples();
    const int m = data.dim();
    const FitResult full = fit_method(data, method, strategy);

    std::vector<std::vector<double>> per_index(m);
    for (auto& v : per_index) v.reserve(B);
    for (int b = 0; b < B; ++b) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(b)));
        Dataset resample;
        resample.X.resize(n, m);
        resample.y.resize(n);
        for (int i = 0; i < n; ++i) {
            const int src = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
            resample.X.row(i) = data.X.row(src);
            resample.y(i) = data.y(src);
        }
        const FitResult fit = fit_method(resample, method, strategy);
        for (int k = 0; k < m; ++k) per_index[k].push_back(fit.est.eig.values(k));
    }

    BootstrapRanges out;
    out.B = B;
    out.lo.resize(m);
    out.hi.resize(m);
    out.point = full.est.eig.values;
    for (int k = 0; k < m; ++k) {
        std::sort(per_index[k].begin(), per_index[k].end());
        out.lo(k) = percentile_sorted(per_index[k], lo_percentile);
        out.hi(k) = percentile_sorted(per_index[k], hi_percentile);
    }
    return out;
}

int suggest_dimension(const EigenDecomposition& eig) {
    const int m = static_cast<int>(eig.values.size());
    if (m < 2) throw Error(errc::invalid_input, "dimension suggestion needs m >= 2");
    int best = 1;
    double best_gap = eig.values(0) - eig.values(1);
    for (int k = 2; k < m; ++k) {
        const double gap = eig.values(k - 1) - eig.values(k);
        if (gap > best_gap) {
            best_gap = gap;
            best = k;
        }
    }
    return best;
}

MatrixXd summary_coordinates(const Dataset& data, const Standardizer& s,
                             const SubspaceEstimate& sub) {
    if (data.dim() != s.dim() || sub.basis.ambient_dim() != s.dim())
        throw Error(errc::dimension_mismatch, "summary coordinates need matching dimensions");
    const Dataset z = s.apply(data);
    const int n = data.n_samples();
    const int k = sub.n;
    MatrixXd out(n, k + 1);
    out.leftCols(k) = z.X * sub.basis.columns();
    out.col(k) = data.y;
    return out;
}

ConvergenceReport convergence_study(const TestFunction& fn, const std::vector<int>& grid,
                                    int trials, int n, Method method,
                                    const SlicingStrategy& strategy, int reference_N,
                                    std::uint64_t seed) {
    if (grid.empty()) throw Error(errc::bad_config, "empty sample-size grid");
    for (std::size_t g = 1; g < grid.size(); ++g)
        if (grid[g] <= grid[g - 1])
            throw Error(errc::bad_config, "sample-size grid must be strictly increasing");
    if (trials < 1) throw Error(errc::bad_config, "need at least one trial");
    if (reference_N < 10 * grid.back())
        throw Error(errc::bad_config, "reference run must be at least 10x the largest grid size");
    if (n < 1 || n > fn.m) throw Error(errc::bad_config, "subspace dimension out of range");

    const Dataset ref_data = sample_inputs(fn, reference_N, derive_seed(seed, 0xFEFEULL));
    const FitResult ref = fit_method(ref_data, method, strategy);
    const SubspaceEstimate ref_sub = estimate_subspace(ref.est, n);
    const double lambda1 = ref.est.eig.values(0);
    if (lambda1 <= 0.0)
        throw Error(errc::invalid_input, "reference leading eigenvalue is zero; cannot normalize");

    ConvergenceReport report;
    report.grid = grid;
    report.trials = trials;
    report.n = n;
    report.method = method;
    report.reference_N = reference_N;
    report.eig_err.assign(grid.size(), std::vector<double>(trials, 0.0));
    report.sub_err.assign(grid.size(), std::vector<double>(trials, 0.0));

    for (std::size_t g = 0; g < grid.size(); ++g) {
        for (int t = 0; t < trials; ++t) {
            const Dataset data = sample_inputs(
                fn, grid[g], derive_seed(seed, g + 1, static_cast<std::uint64_t>(t)));
            const FitResult fit = fit_method(data, method, strategy);
            double max_sq = 0.0;
            for (int k = 0; k < fn.m; ++k) {
                const double d = fit.est.eig.values(k) - ref.est.eig.values(k);
                max_sq = std::max(max_sq, d * d);
            }
            report.eig_err[g][t] = max_sq / (lambda1 * lambda1);
            report.sub_err[g][t] =
                subspace_distance(ref_sub.basis, estimate_subspace(fit.est, n).basis);
        }
    }

    if (grid.size() >= 2) {
        std::vector<double> xs(grid.begin(), grid.end());
        std::vector<double> eig_mean(grid.size()), sub_mean(grid.size());
        for (std::size_t g = 0; g < grid.size(); ++g) {
            double se = 0, ss = 0;
            for (int t = 0; t < trials; ++t) {
                se += report.eig_err[g][t];
                ss += report.sub_err[g][t];
            }
            eig_mean[g] = se / trials;
            sub_mean[g] = ss / trials;
        }
        report.eig_slope = loglog_slope(xs, eig_mean);
        report.sub_slope = loglog_slope(xs, sub_mean);
    }
    return report;
}

}  // namespace ridgerec
