#include "qctx/json_io.hpp"

#include <fstream>
#include <optional>
#include <string>

namespace qctx {

namespace {

double number_field(const Json& doc, const char* key, std::optional<double> fallback = {}) {
  if (!doc.is_object()) throw Error(Errc::parse_error, "expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) {
    if (fallback) return *fallback;
    throw Error(Errc::parse_error, std::string("missing field '") + key + "'");
  }
  if (!it->is_number()) throw Error(Errc::parse_error, std::string("field '") + key + "' must be a number");
  return it->get<double>();
}

std::vector<LabelPair> pairs_from_json(const Json& doc, const char* key) {
  std::vector<LabelPair> out;
  const auto it = doc.find(key);
  if (it == doc.end()) return out;
  if (!it->is_array()) throw Error(Errc::parse_error, std::string("'") + key + "' must be an array");
  for (const auto& p : *it) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw Error(Errc::parse_error, std::string("'") + key + "' entries must be [label, label]");
    }
    out.push_back({p[0].get<std::string>(), p[1].get<std::string>()});
  }
  return out;
}

Json flat_value(const std::vector<double>& v) {
  if (v.size() == 1) return v.front();
  return Json(v);
}

std::vector<double> flat_from_json(const Json& v) {
  if (v.is_number()) return {v.get<double>()};
  if (v.is_array()) return v.get<std::vector<double>>();
  throw Error(Errc::parse_error, "relation value must be a number or an array of numbers");
}

}  // namespace

Json network_to_json(const ContextNetwork& net) {
  Json edges = Json::array();
  for (const auto& e : net.edges) edges.push_back({e.a, e.b});
  Json non_edges = Json::array();
  for (const auto& e : net.non_edges) non_edges.push_back({e.a, e.b});
  return {{"nodes", net.nodes}, {"edges", edges}, {"non_edges", non_edges}};
}

ContextNetwork network_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw Error(Errc::parse_error, "network needs a 'nodes' array");
  }
  ContextNetwork net;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_string()) throw Error(Errc::parse_error, "node labels must be strings");
    net.nodes.push_back(n.get<std::string>());
  }
  net.edges = pairs_from_json(doc, "edges");
  net.non_edges = pairs_from_json(doc, "non_edges");
  check_network(net);
  return net;
}

Json params_to_json(const ScenarioParams<double>& p) {
  return {{"alpha", p.alpha}, {"beta", p.beta}, {"phase_d1", p.phase_d1}, {"phase_d2", p.phase_d2}};
}

ScenarioParams<double> scenario_params_from_json(const Json& doc) {
  ScenarioParams<double> p;
  p.alpha = number_field(doc, "alpha");
  p.beta = number_field(doc, "beta");
  p.phase_d1 = number_field(doc, "phase_d1", 0.0);
  p.phase_d2 = number_field(doc, "phase_d2", 0.0);
  require_interior("alpha", p.alpha);
  require_interior("beta", p.beta);
  return p;
}

Json params_to_json(const LocalParams<double>& p) {
  return {{"a2", p.a2}, {"phase_a", p.phase_a}};
}

LocalParams<double> local_params_from_json(const Json& doc) {
  LocalParams<double> p;
  p.a2 = number_field(doc, "a2");
  p.phase_a = number_field(doc, "phase_a", 0.0);
  require_interior("a2", p.a2);
  return p;
}

Json report_to_json(const RelationReport<double>& report) {
  Json params = Json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  Json relations = Json::array();
  for (const auto& r : report.relations) {
    relations.push_back({{"id", r.id},
                         {"formula", flat_value(r.formula)},
                         {"direct", flat_value(r.direct)},
                         {"residual", r.residual}});
  }
  return {{"scenario", report.scenario},
          {"params", params},
          {"relations", relations},
          {"phase_canon", report.phase_canon}};
}

RelationReport<double> report_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::parse_error, "report must be an object");
  try {
    RelationReport<double> report;
    report.scenario = doc.at("scenario").get<std::string>();
    report.phase_canon = doc.at("phase_canon").get<std::string>();
    // nlohmann objects iterate in key order, so params come back sorted.
    for (const auto& [name, value] : doc.at("params").items()) {
      report.params.emplace_back(name, value.get<double>());
    }
    for (const auto& r : doc.at("relations")) {
      report.relations.push_back({r.at("id").get<std::string>(), flat_from_json(r.at("formula")),
                                  flat_from_json(r.at("direct")), r.at("residual").get<double>()});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

Json estimate_to_json(const SampleEstimate& e) {
  return {{"estimate", e.estimate}, {"stderr", e.standard_error}, {"successes", e.successes},
          {"trials", e.trials},     {"seed", e.seed},             {"rng", e.rng}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, path.string() + ": " + e.what());
  }
}

}  // namespace qctx
