#include "qctx/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qctx/hardy3.hpp"
#include "qctx/json_io.hpp"
#include "qctx/nonlocal4.hpp"
#include "qctx/oracle.hpp"

#ifndef QCTX_VERSION
#define QCTX_VERSION "0.0.0"
#endif

namespace qctx::cli {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(Errc::parse_error, "range '" + text + "' must be a,b");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo_text = text.substr(0, comma);
    const std::string hi_text = text.substr(comma + 1);
    const double lo = std::stod(lo_text, &used_lo);
    const double hi = std::stod(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(Errc::parse_error, "range '" + text + "' must be two numbers a,b");
  }
}

// Runs `body`, mapping library errors to exit code 2 with a diagnostic.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitBadInput;
}

}  // namespace

ScenarioKind scenario_kind_from_string(const std::string& name) {
  if (name == "hardy3") return ScenarioKind::hardy3;
  if (name == "nonlocal4") return ScenarioKind::nonlocal4;
  throw Error(Errc::parse_error, "unknown scenario '" + name + "' (hardy3 or nonlocal4)");
}

void check_sweep_spec(const SweepSpec& spec) {
  if (spec.grid_points_per_axis < 3) {
    throw Error(Errc::out_of_domain, "grid needs at least 3 points per axis");
  }
  for (const auto& [name, range] : {std::pair{"alpha", spec.alpha_range},
                                    std::pair{"beta", spec.beta_range}}) {
    if (!(range.first > 0.0 && range.second < 1.0 && range.first <= range.second)) {
      throw Error(Errc::out_of_domain,
                  std::string(name) + " range must be a closed interval inside (0, 1)");
    }
  }
}

SweepResult run_sweep(const SweepSpec& spec) {
  check_sweep_spec(spec);
  const int n = spec.grid_points_per_axis;
  auto axis = [n](std::pair<double, double> r) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = r.first + (r.second - r.first) * i / (n - 1);
    return v;
  };
  const auto alphas = axis(spec.alpha_range);
  const auto betas = axis(spec.beta_range);

  SweepResult result;
  result.rows.reserve(alphas.size() * betas.size());
  bool first = true;
  for (const double a : alphas) {
    for (const double b : betas) {
      const SweepRow row{a, b, predicted_paradox(a, b)};
      result.rows.push_back(row);
      if (first || row.p_paradox > result.best.p_paradox) result.best = row;
      first = false;
    }
  }
  return result;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "alpha,beta,p_paradox\r\n";
  for (const auto& r : result.rows) {
    out << format_g17(r.alpha) << ',' << format_g17(r.beta) << ',' << format_g17(r.p_paradox)
        << "\r\n";
  }
}

int cmd_verify(ScenarioKind kind, const std::filesystem::path& params_file, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const Json doc = read_json_file(params_file);
    RelationReport<double> report;
    if (kind == ScenarioKind::hardy3) {
      report = verify_all(build_scenario(scenario_params_from_json(doc)));
    } else {
      report = verify_all(build_nonlocal(local_params_from_json(doc)));
    }
    Json j = report_to_json(report);
    j["metadata"] = {{"phase_canon", report.phase_canon},
                     {"tool_version", QCTX_VERSION},
                     {"timestamp", utc_timestamp()}};
    out << j.dump(2) << '\n';
    if (const auto failed = report.first_failure(kVerifyTolerance)) {
      err << "relation " << *failed << " exceeds residual tolerance " << kVerifyTolerance << '\n';
      return kExitRelationFailed;
    }
    return kExitOk;
  });
}

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_sweep_spec(spec);
    if (spec.output_path.empty()) throw Error(Errc::parse_error, "sweep needs --out");
    const SweepResult result = run_sweep(spec);
    std::ofstream file(spec.output_path, std::ios::binary);
    if (!file) throw Error(Errc::parse_error, "cannot write '" + spec.output_path.string() + "'");
    write_sweep_csv(result, file);
    file.close();
    if (!file) throw Error(Errc::parse_error, "failed writing '" + spec.output_path.string() + "'");
    out << "argmax alpha=" << format_g17(result.best.alpha)
        << " beta=" << format_g17(result.best.beta)
        << " p_paradox=" << format_g17(result.best.p_paradox) << " rows=" << result.rows.size()
        << '\n';
    return kExitOk;
  });
}

int cmd_sample(ScenarioKind kind, const std::filesystem::path& params_file, std::uint64_t seed,
               std::uint64_t trials, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Json doc = read_json_file(params_file);
    Json j;
    if (kind == ScenarioKind::hardy3) {
      const auto params = scenario_params_from_json(doc);
      j = estimate_to_json(estimate_paradox(params, seed, trials));
      j["scenario"] = "hardy3";
      j["outcome"] = "f";
      j["predicted"] = predicted_paradox(params.alpha, params.beta);
    } else {
      const auto params = local_params_from_json(doc);
      j = estimate_to_json(estimate_nonlocal(params, seed, trials));
      j["scenario"] = "nonlocal4";
      j["outcome"] = "a,a";
      j["predicted"] = predicted_aa_nf(params.a2);
    }
    j["prepared"] = "N_f";
    out << j.dump(2) << '\n';
    return kExitOk;
  });
}

int cmd_graph(Figure figure, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << network_to_json(builtin_network(figure)).dump(2) << '\n';
    return kExitOk;
  });
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form inner-product relations between measurement contexts", "qctx"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QCTX_VERSION);

  std::string scenario = "hardy3";
  std::string params_path;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000000;
  int grid = 99;
  std::string alpha_range = "0.01,0.99";
  std::string beta_range = "0.01,0.99";
  std::string out_path;
  int figure = 2;

  auto* verify = app.add_subcommand("verify", "Check every relation of a scenario");
  verify->add_option("--scenario", scenario, "hardy3 or nonlocal4")->capture_default_str();
  verify->add_option("--params", params_path, "Scenario parameter JSON")->required();

  auto* sweep = app.add_subcommand("sweep", "Grid sweep of the paradox probability");
  sweep->add_option("--grid", grid, "Points per axis")->capture_default_str();
  sweep->add_option("--alpha-range", alpha_range, "a,b")->capture_default_str();
  sweep->add_option("--beta-range", beta_range, "a,b")->capture_default_str();
  sweep->add_option("--out", out_path, "CSV output path")->required();

  auto* sample = app.add_subcommand("sample", "Monte-Carlo Born-rule estimate");
  sample->add_option("--scenario", scenario, "hardy3 or nonlocal4")->capture_default_str();
  sample->add_option("--params", params_path, "Scenario parameter JSON")->required();
  sample->add_option("--seed", seed, "Generator seed")->required();
  sample->add_option("--trials", trials, "Number of trials")->capture_default_str();

  auto* graph = app.add_subcommand("graph", "Print a built-in orthogonality diagram");
  graph->add_option("--figure", figure, "1, 2, 3 or 4")->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitBadInput;
  }

  return guarded(err, [&] {
    if (verify->parsed()) {
      return cmd_verify(scenario_kind_from_string(scenario), params_path, out, err);
    }
    if (sweep->parsed()) {
      return cmd_sweep({grid, parse_range(alpha_range), parse_range(beta_range), out_path}, out,
                       err);
    }
    if (sample->parsed()) {
      return cmd_sample(scenario_kind_from_string(scenario), params_path, seed, trials, out, err);
    }
    return cmd_graph(figure_from_int(figure), out, err);
  });
}

}  // namespace qctx::cli
