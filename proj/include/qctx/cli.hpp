#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qctx/network.hpp"

namespace qctx::cli {

enum class ScenarioKind { hardy3, nonlocal4 };

ScenarioKind scenario_kind_from_string(const std::string& name);

/// Relations must stay strictly below this residual for `verify` to pass.
inline constexpr double kVerifyTolerance = 1e-10;

inline constexpr int kExitOk = 0;
inline constexpr int kExitRelationFailed = 1;
inline constexpr int kExitBadInput = 2;

struct SweepSpec {
  int grid_points_per_axis = 99;
  std::pair<double, double> alpha_range{0.01, 0.99};
  std::pair<double, double> beta_range{0.01, 0.99};
  std::filesystem::path output_path;
};

struct SweepRow {
  double alpha = 0;
  double beta = 0;
  double p_paradox = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // alpha-major
  SweepRow best;               // first maximum in alpha-major order
};

/// Throws Errc::out_of_domain on fewer than 3 points per axis or a range not
/// strictly inside (0, 1).
void check_sweep_spec(const SweepSpec& spec);

/// Evaluates the paradox probability on the closed grid lo + i (hi - lo) / (n - 1).
SweepResult run_sweep(const SweepSpec& spec);

/// Header "alpha,beta,p_paradox", CRLF line ends, 17 significant digits.
void write_sweep_csv(const SweepResult& result, std::ostream& out);

// Subcommands. Each returns the process exit code and never throws.
int cmd_verify(ScenarioKind kind, const std::filesystem::path& params_file, std::ostream& out,
               std::ostream& err);
int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err);
int cmd_sample(ScenarioKind kind, const std::filesystem::path& params_file, std::uint64_t seed,
               std::uint64_t trials, std::ostream& out, std::ostream& err);
int cmd_graph(Figure figure, std::ostream& out, std::ostream& err);

/// Full command line (without the program name).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qctx::cli
