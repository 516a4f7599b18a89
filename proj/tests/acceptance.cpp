// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qctx/cli.hpp"
#include "qctx/hardy3.hpp"
#include "qctx/network.hpp"
#include "qctx/nonlocal4.hpp"
#include "qctx/oracle.hpp"

using namespace qctx;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double phase(std::mt19937_64& rng) { return uniform(rng, 0.0, 2 * std::numbers::pi); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Random ensembles shared by criteria 3 and 4.
struct Ensembles {
  std::vector<ScenarioParams<double>> hardy;
  std::vector<LocalParams<double>> local;
};

Ensembles make_ensembles() {
  std::mt19937_64 rng(20240601);
  Ensembles e;
  for (int i = 0; i < 1000; ++i) {
    e.hardy.push_back({uniform(rng, 0.01, 0.99), uniform(rng, 0.01, 0.99), phase(rng), phase(rng)});
  }
  for (int i = 0; i < 1000; ++i) e.local.push_back({uniform(rng, 0.01, 0.99), phase(rng)});
  return e;
}

Outcome check_relations(const Ensembles& e, const std::vector<std::string>& hardy_ids,
                        const std::vector<std::string>& local_ids) {
  Outcome out;
  double worst = 0;
  for (const auto& p : e.hardy) {
    const auto report = verify_all(build_scenario(p));
    for (const auto& id : hardy_ids) {
      const auto* rel = report.find(id);
      out.require(rel != nullptr, "missing relation " + id);
      if (!rel) return out;
      worst = std::max(worst, rel->residual);
      out.require(rel->residual < 1e-10, id + " residual " + fmt(rel->residual));
    }
  }
  for (const auto& p : e.local) {
    const auto report = verify_all(build_nonlocal(p));
    for (const auto& id : local_ids) {
      const auto* rel = report.find(id);
      out.require(rel != nullptr, "missing relation " + id);
      if (!rel) return out;
      worst = std::max(worst, rel->residual);
      out.require(rel->residual < 1e-10, id + " residual " + fmt(rel->residual));
    }
  }
  if (out.ok) out.detail = "max residual " + fmt(worst);
  return out;
}

int failures = 0;

void report(int n, const char* title, const Outcome& o, double seconds, double limit) {
  const bool timely = limit <= 0 || seconds < limit;
  const bool pass = o.ok && timely;
  if (!pass) ++failures;
  std::string detail = o.detail;
  if (!timely) detail += (detail.empty() ? "" : "; ") + std::string("too slow");
  std::printf("[%s] AC%d %s (%.3f s%s%s)%s%s\n", pass ? "PASS" : "FAIL", n, title, seconds,
              limit > 0 ? ", limit " : "", limit > 0 ? fmt(limit).c_str() : "",
              detail.empty() ? "" : ": ", detail.c_str());
}

template <typename F>
void run(int n, const char* title, double limit, F&& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& ex) {
    o.ok = false;
    o.detail = std::string("exception: ") + ex.what();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  report(n, title, o, seconds, limit);
}

}  // namespace

int main() {
  run(1, "Hardy maximum 1/9 and sweep argmax", 1.0, [] {
    Outcome o;
    const double p = predicted_paradox(0.5, 0.5);
    o.require(std::abs(p - 1.0 / 9) < 1e-12, "predicted_paradox(1/2,1/2) = " + fmt(p));
    const auto sweep = cli::run_sweep({99, {0.01, 0.99}, {0.01, 0.99}, {}});
    const double step = 0.98 / 98;
    o.require(sweep.rows.size() == 99 * 99, "row count");
    o.require(std::abs(sweep.best.alpha - 0.5) <= step + 1e-15 &&
                  std::abs(sweep.best.beta - 0.5) <= step + 1e-15,
              "argmax at (" + fmt(sweep.best.alpha) + ", " + fmt(sweep.best.beta) + ")");
    o.require(std::abs(sweep.best.p_paradox - 1.0 / 9) < 1e-4, "max " + fmt(sweep.best.p_paradox));
    for (const auto& row : sweep.rows) {
      o.require(row.p_paradox <= p + 1e-15, "grid value above 1/9");
    }
    if (o.ok) {
      o.detail = "argmax (" + fmt(sweep.best.alpha) + ", " + fmt(sweep.best.beta) + ")";
    }
    return o;
  });

  run(2, "two-qubit |a,a> probability 1/12", 1e-3, [] {
    Outcome o;
    const double p = predicted_aa_nf(0.5);
    o.require(std::abs(p - 1.0 / 12) < 1e-12, "predicted_aa_nf(1/2) = " + fmt(p));
    return o;
  });

  const auto ensembles = make_ensembles();

  // Criterion 4 shares its runtime budget with criterion 3.
  const auto t34 = Clock::now();
  run(3, "formula-oracle equivalence on 1000+1000 random points", 5.0, [&] {
    return check_relations(ensembles, {"eq12", "eq15", "eq16"}, {"eq17", "eq19", "eq21"});
  });
  run(4, "complex-identity residuals on the same ensembles", 0, [&] {
    auto o = check_relations(ensembles,
                             {"eq3", "eq6", "eq9", "eq10a", "eq10b", "eq13a", "eq13b", "eq14"},
                             {"eq18", "eq20"});
    const double total = std::chrono::duration<double>(Clock::now() - t34).count();
    o.require(total < 5.0, "criteria 3 and 4 together took " + fmt(total) + " s");
    return o;
  });

  run(5, "reduction of the two-qubit formula to the Hardy formula", 0, [] {
    Outcome o;
    std::mt19937_64 rng(5);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      const double a2 = uniform(rng, 0.01, 0.99);
      const double d = std::abs(predicted_fnl_nf(a2) - predicted_paradox(a2, a2));
      worst = std::max(worst, d);
      o.require(d < 1e-13, "a2 = " + fmt(a2) + " differs by " + fmt(d));
    }
    if (o.ok) o.detail = "max difference " + fmt(worst);
    return o;
  });

  run(6, "graph faithfulness and entanglement structure", 0, [] {
    Outcome o;
    const auto fig2 = builtin_network(Figure::fig2);
    const auto fig3 = builtin_network(Figure::fig3);
    const auto fig4 = builtin_network(Figure::fig4);
    for (int i = 1; i <= 19; ++i) {
      const double x = i / 20.0;
      for (int j = 1; j <= 19; ++j) {
        const double y = j / 20.0;
        const auto s = build_scenario(ScenarioParams<double>{x, y, 0.3 * i, -0.7 * j});
        o.require(validate_realization(fig2, realization(s), 1e-10).empty(),
                  "figure 2 violated at (" + fmt(x) + ", " + fmt(y) + ")");
      }
      const auto n = build_nonlocal(LocalParams<double>{x, 0.4 * i});
      const auto real = realization(n);
      o.require(validate_realization(fig3, real, 1e-10).empty(), "figure 3 violated at " + fmt(x));
      o.require(validate_realization(fig4, real, 1e-10).empty(), "figure 4 violated at " + fmt(x));
      o.require(is_entangled(n.f_nl), "f_NL not entangled at " + fmt(x));
      for (const auto* v :
           {&n.k00, &n.k01, &n.k10, &n.k11, &n.ka0, &n.k0a, &n.kb0, &n.k0b, &n.kaa}) {
        o.require(!is_entangled(*v), "product ket entangled at " + fmt(x));
      }
    }
    return o;
  });

  run(7, "sampled frequencies match 1/9 and 1/12", 10.0, [] {
    Outcome o;
    const auto hardy = estimate_paradox(ScenarioParams<double>{0.5, 0.5, 0, 0}, 42, 1000000);
    const double zh = std::abs(hardy.estimate - 1.0 / 9) / hardy.standard_error;
    o.require(zh <= 4, "f frequency " + fmt(hardy.estimate) + " is " + fmt(zh) + " SE off");
    const auto local = estimate_nonlocal(LocalParams<double>{0.5, 0}, 42, 1000000);
    const double zl = std::abs(local.estimate - 1.0 / 12) / local.standard_error;
    o.require(zl <= 4, "|a,a> frequency " + fmt(local.estimate) + " is " + fmt(zl) + " SE off");
    if (o.ok) o.detail = "z = " + fmt(zh) + ", " + fmt(zl) + " (" + hardy.rng + ", seed 42)";
    return o;
  });

  run(8, "N_f is an equal superposition at (1/2, 1/2)", 0, [] {
    Outcome o;
    const auto s = build_scenario(ScenarioParams<double>{0.5, 0.5, 0, 0});
    for (Eigen::Index k = 0; k < 3; ++k) {
      const double c = std::norm(s.nf(k));
      o.require(std::abs(c - 1.0 / 3) < 1e-12, "coefficient " + std::to_string(k) + " = " + fmt(c));
    }
    return o;
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
