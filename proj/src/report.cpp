#include "ridgerec/report.hpp"

#include <fstream>

namespace ridgerec {

namespace {

json vector_to_json(const VectorXd& v) {
    json arr = json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

// Column-major nested array: one inner array per column.
json columns_to_json(const MatrixXd& m) {
    json arr = json::array();
    for (int j = 0; j < m.cols(); ++j) arr.push_back(vector_to_json(m.col(j)));
    return arr;
}

}  // namespace

json result_document(const FitResult& fit, int suggested_n, const SubspaceEstimate& sub,
                     const std::optional<BootstrapRanges>& ranges,
                     const std::vector<std::string>& warnings) {
    json doc;
    doc["method"] = method_name(fit.est.method);
    doc["m"] = fit.est.matrix.dim();
    doc["N"] = fit.est.N;
    doc["R"] = fit.est.R;
    doc["counts"] = fit.est.counts;
    doc["eigenvalues"] = vector_to_json(fit.est.eig.values);
    doc["eigenvectors_standardized"] = columns_to_json(fit.est.eig.vectors);
    doc["directions_original"] = columns_to_json(fit.standardizer.pullback(
        OrthonormalBasis(fit.est.eig.vectors)));
    doc["suggested_n"] = suggested_n;
    doc["subspace"] = {{"n", sub.n}, {"basis", columns_to_json(sub.basis.columns())}};
    if (ranges) {
        doc["bootstrap"] = {{"B", ranges->B},
                            {"lo", vector_to_json(ranges->lo)},
                            {"hi", vector_to_json(ranges->hi)},
                            {"point", vector_to_json(ranges->point)}};
    }
    doc["warnings"] = warnings;
    return doc;
}

json convergence_document(const ConvergenceReport& report) {
    json doc;
    doc["method"] = method_name(report.method);
    doc["grid"] = report.grid;
    doc["trials"] = report.trials;
    doc["n"] = report.n;
    doc["reference_N"] = report.reference_N;
    doc["eig_err"] = report.eig_err;
    doc["sub_err"] = report.sub_err;
    if (report.eig_slope) {
        doc["eig_slope"] = *report.eig_slope;
        doc["sub_slope"] = *report.sub_slope;
        doc["slopes_defined"] = true;
    } else {
        doc["slopes_defined"] = false;
    }
    return doc;
}

void write_json(const json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(errc::io_error, "cannot write file: " + path);
    out << doc.dump(2) << "\n";
    if (!out) throw Error(errc::io_error, "write failed: " + path);
}

}  // namespace ridgerec
