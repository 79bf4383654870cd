#include <fstream>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ridgerec/analysis.hpp"
#include "ridgerec/report.hpp"
#include "ridgerec/testbed.hpp"

namespace {

using namespace ridgerec;

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, double> params;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw Error(errc::bad_config, "--param expects name=value, got '" + kv + "'");
        try {
            params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error(errc::bad_config, "--param value is not numeric: '" + kv + "'");
        }
    }
    return params;
}

SliceKind parse_slicing(const std::string& s) {
    if (s == "equal-count") return SliceKind::EqualCount;
    if (s == "equal-width") return SliceKind::EqualWidth;
    throw Error(errc::bad_config, "--slicing must be equal-count or equal-width");
}

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty())
        std::cout << doc.dump(2) << "\n";
    else
        write_json(doc, out_path);
}

void write_summary_csv(const std::string& path, const MatrixXd& coords) {
    std::ofstream out(path);
    if (!out) throw Error(errc::io_error, "cannot write file: " + path);
    const int n_dirs = static_cast<int>(coords.cols()) - 1;
    for (int j = 0; j < n_dirs; ++j) out << "w" << (j + 1) << ",";
    out << "y\n";
    char buf[64];
    for (int i = 0; i < coords.rows(); ++i) {
        for (int j = 0; j < coords.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", coords(i, j));
            out << buf << (j + 1 < coords.cols() ? "," : "\n");
        }
    }
}

struct AnalyzeOutput {
    json doc;
    FitResult fit;
    SubspaceEstimate sub;
};

AnalyzeOutput analyze_one(const Dataset& data, Method method, const SlicingStrategy& strategy,
                          std::optional<int> dim, int bootstrap_B, double lo_pct, double hi_pct,
                          std::uint64_t seed) {
    FitResult fit = fit_method(data, method, strategy);

    std::vector<std::string> warnings;
    if (fit.part.degenerate_range)
        warnings.push_back("degenerate response range: all responses equal, single slice");

    const int m = data.dim();
    const int suggested = m >= 2 ? suggest_dimension(fit.est.eig) : 1;
    const int n = dim.value_or(suggested);
    if (n < 1 || n > m) throw Error(errc::bad_config, "--dim out of range for this dataset");
    SubspaceEstimate sub = estimate_subspace(fit.est, n);
    if (n > 2) warnings.push_back("summary plots are recommended only for n <= 2");

    std::optional<BootstrapRanges> ranges;
    if (bootstrap_B > 0)
        ranges = bootstrap_eigs(data, method, strategy, bootstrap_B, lo_pct, hi_pct, seed);

    json doc = result_document(fit, suggested, sub, ranges, warnings);
    return AnalyzeOutput{std::move(doc), std::move(fit), std::move(sub)};
}

int run(int argc, char** argv) {
    CLI::App app{"Ridge subspace recovery via sliced inverse regression (SIR) and "
                 "sliced average variance estimation (SAVE)"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Estimate ridge subspace from a CSV dataset");
    std::string in_path, out_path, method_str = "sir", slicing_str = "equal-count";
    std::string summary_csv;
    int slices = 0, bootstrap_B = 0;
    std::optional<int> dim;
    std::vector<double> percentiles{2.5, 97.5};
    std::uint64_t seed = 0;
    analyze->add_option("--input", in_path, "input CSV (x1,...,xm,y)")->required();
    analyze->add_option("--output", out_path, "output JSON path (default: stdout)");
    analyze->add_option("--method", method_str, "sir | save | both");
    analyze->add_option("--slices", slices, "requested slice count (default: auto)");
    analyze->add_option("--slicing", slicing_str, "equal-count | equal-width");
    analyze->add_option("--dim", dim, "subspace dimension (default: largest eigenvalue gap)");
    analyze->add_option("--bootstrap", bootstrap_B, "bootstrap resample count (0 = off)");
    analyze->add_option("--percentiles", percentiles, "bootstrap percentile pair")
        ->expected(2)
        ->delimiter(',');
    analyze->add_option("--seed", seed, "RNG seed for randomized steps");
    analyze->add_option("--summary-csv", summary_csv, "write summary-plot coordinates CSV");

    // sample
    auto* sample = app.add_subcommand("sample", "Draw a dataset from a built-in test function");
    std::string fn_name, sample_out;
    std::vector<std::string> param_kvs;
    int n_samples = 0;
    std::uint64_t sample_seed = 0;
    sample->add_option("--function", fn_name,
                       "quad1d | quad3d | product | shifted_product | bullseye | linear | "
                       "hartmann_log")
        ->required();
    sample->add_option("--param", param_kvs, "function parameter name=value (repeatable)");
    sample->add_option("--n", n_samples, "sample count")->required();
    sample->add_option("--seed", sample_seed, "RNG seed");
    sample->add_option("--output", sample_out, "output CSV path")->required();

    // converge
    auto* converge = app.add_subcommand("converge", "Monte Carlo convergence study");
    std::string conv_fn, conv_out, conv_method = "sir", conv_slicing = "equal-count";
    std::vector<std::string> conv_param_kvs;
    std::vector<int> grid;
    int trials = 10, conv_dim = 1, reference_n = 0, conv_slices = 0;
    std::uint64_t conv_seed = 0;
    converge->add_option("--function", conv_fn, "test function name")->required();
    converge->add_option("--param", conv_param_kvs, "function parameter name=value");
    converge->add_option("--grid", grid, "increasing sample sizes")
        ->required()
        ->delimiter(',');
    converge->add_option("--trials", trials, "trials per grid size");
    converge->add_option("--dim", conv_dim, "subspace dimension for the error metric");
    converge->add_option("--method", conv_method, "sir | save");
    converge->add_option("--slices", conv_slices, "requested slice count (default: auto)");
    converge->add_option("--slicing", conv_slicing, "equal-count | equal-width");
    converge->add_option("--reference-n", reference_n, "reference run sample count")->required();
    converge->add_option("--seed", conv_seed, "RNG seed");
    converge->add_option("--output", conv_out, "output JSON path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        const Dataset data = read_dataset(in_path);
        SlicingStrategy strategy{parse_slicing(slicing_str), slices};
        std::vector<Method> methods;
        if (method_str == "sir")
            methods = {Method::SIR};
        else if (method_str == "save")
            methods = {Method::SAVE};
        else if (method_str == "both")
            methods = {Method::SIR, Method::SAVE};
        else
            throw Error(errc::bad_config, "--method must be sir, save or both");

        json out = json::array();
        for (Method method : methods) {
            AnalyzeOutput res = analyze_one(data, method, strategy, dim, bootstrap_B,
                                            percentiles[0], percentiles[1], seed);
            out.push_back(std::move(res.doc));
            if (!summary_csv.empty() && method == methods.back())
                write_summary_csv(summary_csv,
                                  summary_coordinates(data, res.fit.standardizer, res.sub));
        }
        emit(methods.size() == 1 ? out[0] : out, out_path);
        return 0;
    }

    if (sample->parsed()) {
        const TestFunction fn = make_test_function(fn_name, parse_params(param_kvs));
        write_dataset(sample_inputs(fn, n_samples, sample_seed), sample_out);
        return 0;
    }

    if (converge->parsed()) {
        const TestFunction fn = make_test_function(conv_fn, parse_params(conv_param_kvs));
        Method method;
        if (conv_method == "sir")
            method = Method::SIR;
        else if (conv_method == "save")
            method = Method::SAVE;
        else
            throw Error(errc::bad_config, "--method must be sir or save");
        SlicingStrategy strategy{parse_slicing(conv_slicing), conv_slices};
        const ConvergenceReport report = convergence_study(fn, grid, trials, conv_dim, method,
                                                           strategy, reference_n, conv_seed);
        emit(convergence_document(report), conv_out);
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ridgerec::Error& e) {
        std::cerr << "{\"error\": \"" << e.code() << "\", \"message\": " << nlohmann::json(e.what()).dump()
                  << "}\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\": \"internal\", \"message\": " << nlohmann::json(e.what()).dump()
                  << "}\n";
        return 1;
    }
}
