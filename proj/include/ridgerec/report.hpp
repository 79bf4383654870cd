#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ridgerec/diagnostics.hpp"

namespace ridgerec {

using json = nlohmann::ordered_json;

// Serialized analysis result; see schema/result.schema.json.
json result_document(const FitResult& fit, int suggested_n, const SubspaceEstimate& sub,
                     const std::optional<BootstrapRanges>& ranges,
                     const std::vector<std::string>& warnings);

// Serialized convergence report; see schema/convergence.schema.json.
json convergence_document(const ConvergenceReport& report);

void write_json(const json& doc, const std::string& path);

}  // namespace ridgerec
