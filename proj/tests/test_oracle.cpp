#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "qctx/oracle.hpp"
#include "reference_oracle.hpp"

using namespace qctx;
using qctx::testing::Vec;

namespace {

Vec e(Eigen::Index dim, Eigen::Index i) { return basis_vector<double>(dim, i); }

MeasurementContext<double> standard_context(Eigen::Index dim) {
  std::vector<Vec> outcomes;
  for (Eigen::Index i = 0; i < dim; ++i) outcomes.push_back(e(dim, i));
  return MeasurementContext<double>(outcomes);
}

}  // namespace

TEST_CASE("splitmix64 reference outputs") {
  // Published SplitMix64 sequence for seed 0.
  SplitMix64 gen(0);
  CHECK(gen() == 0xe220a8397b1dcdafULL);
  CHECK(gen() == 0x6e789e6aa1b965f4ULL);
  CHECK(SplitMix64::at(42, 0) == 0xbdd732262feb6e95ULL);
  CHECK(SplitMix64::at(0, 1) == 0x6e789e6aa1b965f4ULL);

  SplitMix64 resumed(0, 1);
  CHECK(resumed() == 0x6e789e6aa1b965f4ULL);
  for (int i = 0; i < 1000; ++i) {
    const double u = gen.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("sequential probability examples") {
  const auto s = build_scenario(ScenarioParams<double>{0.5, 0.5, 0, 0});
  CHECK(sequential_probability(s.d1, {s.three, s.d2}) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(sequential_probability(e(3, 0), {e(3, 0)}) == 1.0);
  CHECK(sequential_probability(e(3, 0), {e(3, 1)}) == 0.0);

  try {
    (void)sequential_probability<double>(e(3, 0), std::span<const Vec>{});
    FAIL("expected EmptyChain");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::empty_chain);
  }
  CHECK_THROWS_AS(sequential_probability(e(3, 0), {e(4, 0)}), Error);
}

TEST_CASE("property: sequential chain through |3> equals |<D1|D2>|^2") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const auto s = build_scenario(
        ScenarioParams<double>{testing::uniform(rng, 0.01, 0.99), testing::uniform(rng, 0.01, 0.99),
                               testing::random_phase(rng), testing::random_phase(rng)});
    CHECK(std::abs(sequential_probability(s.d1, {s.three, s.d2}) - std::norm(inner(s.d1, s.d2))) <
          1e-12);
  }
}

TEST_CASE("measurement context validation") {
  CHECK_NOTHROW(standard_context(3));
  auto expect_incomplete = [](std::vector<Vec> outcomes) {
    try {
      MeasurementContext<double> ctx(std::move(outcomes));
      FAIL("expected IncompleteContext");
    } catch (const Error& err) {
      CHECK(err.code() == Errc::incomplete_context);
    }
  };
  expect_incomplete({e(3, 0), e(3, 1)});
  expect_incomplete({e(3, 0), e(3, 1), e(3, 1)});
  expect_incomplete({e(3, 0), e(3, 1), Vec(0.5 * e(3, 2))});
  expect_incomplete({});
}

TEST_CASE("sampling a certain outcome") {
  const auto estimates = sample_context(e(3, 2), standard_context(3), 1, 1000000);
  REQUIRE(estimates.size() == 3);
  CHECK(estimates[2].estimate == 1.0);
  CHECK(estimates[2].standard_error == 0.0);
  CHECK(std::abs(estimates[2].estimate - 1.0) <= 4 * estimates[2].standard_error);
  CHECK(estimates[0].successes == 0);
}

TEST_CASE("sampling is deterministic, partitions trials and merges by counts") {
  std::mt19937_64 rng(3);
  const Vec prep = testing::random_unit(rng, 4);
  const auto ctx = standard_context(4);
  const auto first = sample_context(prep, ctx, 77, 50000);
  CHECK(first == sample_context(prep, ctx, 77, 50000));
  CHECK(first != sample_context(prep, ctx, 78, 50000));

  std::uint64_t total = 0;
  double sum = 0;
  for (const auto& est : first) {
    total += est.successes;
    sum += est.estimate;
    CHECK(est.rng == "splitmix64");
    CHECK(est.seed == 77);
    CHECK(est.standard_error ==
          doctest::Approx(std::sqrt(est.estimate * (1 - est.estimate) / 50000)));
  }
  CHECK(total == 50000);
  CHECK(std::abs(sum - 1.0) < 1e-15);

  const auto head = sample_counts(prep, ctx, 77, 0, 20000);
  const auto tail = sample_counts(prep, ctx, 77, 20000, 30000);
  for (std::size_t k = 0; k < 4; ++k) CHECK(head[k] + tail[k] == first[k].successes);
}

TEST_CASE("property: sampled frequencies track Born probabilities") {
  std::mt19937_64 rng(12);
  const auto s = build_scenario(ScenarioParams<double>{0.4, 0.7, 0.3, 1.9});
  const std::vector<Vec> seed_outcomes{s.f};
  const MeasurementContext<double> ctx(complete_basis<double>(std::span<const Vec>(seed_outcomes), 3));
  const Vec prep = testing::random_unit(rng, 3);

  int within = 0;
  int total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto estimates = sample_context(prep, ctx, seed, 20000);
    for (std::size_t k = 0; k < estimates.size(); ++k) {
      const double p = born_probability(prep, ctx.outcomes()[k]);
      const double se = std::sqrt(p * (1 - p) / 20000);
      within += std::abs(estimates[k].estimate - p) <= 5 * se;
      ++total;
    }
  }
  CHECK(within >= 0.99 * total);
}

TEST_CASE("paradox frequency from N_f") {
  const auto half = estimate_paradox(ScenarioParams<double>{0.5, 0.5, 0, 0}, 42, 1000000);
  CHECK(std::abs(half.estimate - 1.0 / 9) <= 4 * half.standard_error);
  CHECK(half.trials == 1000000);

  const auto quarter = estimate_paradox(ScenarioParams<double>{0.25, 0.25, 0, 0}, 42, 1000000);
  CHECK(std::abs(quarter.estimate - 3.0 / 35) <= 4 * quarter.standard_error);

  try {
    (void)estimate_paradox(ScenarioParams<double>{0.5, 0.5, 0, 0}, 42, 0);
    FAIL("expected EmptyTrials");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::empty_trials);
  }
  CHECK_THROWS_AS(estimate_paradox(ScenarioParams<double>{1.0, 0.5, 0, 0}, 1, 10), Error);
}

TEST_CASE("|a,a> frequency from the two-qubit N_f") {
  const auto est = estimate_nonlocal(LocalParams<double>{0.5, 0}, 7, 1000000);
  CHECK(std::abs(est.estimate - 1.0 / 12) <= 4 * est.standard_error);
  CHECK(est == estimate_nonlocal(LocalParams<double>{0.5, 0}, 7, 1000000));
}
