#pragma once

#include <filesystem>

#include <json.hpp>

#include "qctx/hardy3.hpp"
#include "qctx/network.hpp"
#include "qctx/nonlocal4.hpp"
#include "qctx/oracle.hpp"
#include "qctx/report.hpp"

namespace qctx {

using Json = nlohmann::json;

// All readers throw Error(Errc::parse_error) on malformed documents and
// Errc::invalid_network / Errc::out_of_domain where the content itself is
// rejected.

/// {"nodes": [...], "edges": [[a, b], ...], "non_edges": [[a, b], ...]}
Json network_to_json(const ContextNetwork& net);
ContextNetwork network_from_json(const Json& doc);

/// {"alpha": r, "beta": r, "phase_d1": r, "phase_d2": r}; phases default to 0.
Json params_to_json(const ScenarioParams<double>& params);
ScenarioParams<double> scenario_params_from_json(const Json& doc);

/// {"a2": r, "phase_a": r}; phase defaults to 0.
Json params_to_json(const LocalParams<double>& params);
LocalParams<double> local_params_from_json(const Json& doc);

/// {"scenario": s, "params": {...}, "relations": [{"id", "formula", "direct",
/// "residual"}, ...], "phase_canon": s}. Scalar relations store plain
/// numbers; complex and vector relations store flattened (re, im) arrays.
Json report_to_json(const RelationReport<double>& report);
RelationReport<double> report_from_json(const Json& doc);

/// {"estimate": r, "stderr": r, "successes": n, "trials": n, "seed": n, "rng": s}
Json estimate_to_json(const SampleEstimate& estimate);

Json read_json_file(const std::filesystem::path& path);

}  // namespace qctx
