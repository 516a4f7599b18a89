#pragma once

// Statistical cross-checks: sequential projective measurement probabilities
// and seeded Born-rule sampling over complete measurement contexts.

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qctx/errors.hpp"
#include "qctx/hardy3.hpp"
#include "qctx/hilbert.hpp"
#include "qctx/nonlocal4.hpp"

namespace qctx {

/// SplitMix64 (Steele, Lea, Flood 2014). Output i of seed s is a pure
/// function of (s, i), so any trial range can be regenerated independently.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::string_view name = "splitmix64";

  explicit SplitMix64(std::uint64_t seed, std::uint64_t counter = 0) noexcept
      : seed_(seed), counter_(counter) {}

  static constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t counter) noexcept {
    std::uint64_t z = seed + (counter + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  static constexpr double to_unit(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
  }

  result_type operator()() noexcept { return at(seed_, counter_++); }
  double uniform() noexcept { return to_unit((*this)()); }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~std::uint64_t{0}; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

/// An orthonormal basis; each vector is one outcome of a single measurement.
template <typename Scalar>
class MeasurementContext {
 public:
  /// Throws Errc::incomplete_context unless the outcomes are pairwise
  /// orthogonal unit vectors whose projectors sum to the identity.
  explicit MeasurementContext(std::vector<StateVector<Scalar>> outcomes)
      : outcomes_(std::move(outcomes)) {
    const Scalar tol = Tolerance<Scalar>::orthogonality;
    if (outcomes_.empty()) throw Error(Errc::incomplete_context, "no outcomes");
    const Eigen::Index dim = outcomes_.front().size();
    if (static_cast<Eigen::Index>(outcomes_.size()) != dim) {
      throw Error(Errc::incomplete_context, std::to_string(outcomes_.size()) +
                                                " outcomes in dimension " + std::to_string(dim));
    }
    using Mat = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
    Mat sum = Mat::Zero(dim, dim);
    for (std::size_t i = 0; i < outcomes_.size(); ++i) {
      if (outcomes_[i].size() != dim) throw Error(Errc::dimension_mismatch, "context outcome");
      for (std::size_t j = 0; j < i; ++j) {
        if (std::abs(inner(outcomes_[j], outcomes_[i])) >= tol) {
          throw Error(Errc::incomplete_context, "outcomes " + std::to_string(j) + " and " +
                                                    std::to_string(i) + " are not orthogonal");
        }
      }
      sum += outcomes_[i] * outcomes_[i].adjoint();
    }
    if ((sum - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff() >= tol) {
      throw Error(Errc::incomplete_context, "projectors do not sum to the identity");
    }
  }

  const std::vector<StateVector<Scalar>>& outcomes() const noexcept { return outcomes_; }
  Eigen::Index dim() const noexcept { return outcomes_.front().size(); }
  std::size_t size() const noexcept { return outcomes_.size(); }

 private:
  std::vector<StateVector<Scalar>> outcomes_;
};

/// |<c1|prep>|^2 |<c2|c1>|^2 ... : the probability that a chain of rank-one
/// projective measurements yields every listed outcome in order.
template <typename Scalar>
Scalar sequential_probability(const StateVector<Scalar>& prep,
                              std::span<const StateVector<Scalar>> chain) {
  if (chain.empty()) throw Error(Errc::empty_chain, "sequential_probability");
  Scalar p = Scalar(1);
  const StateVector<Scalar>* previous = &prep;
  for (const auto& next : chain) {
    p *= born_probability(*previous, next);
    previous = &next;
  }
  return p;
}

template <typename Scalar>
Scalar sequential_probability(const StateVector<Scalar>& prep,
                              std::initializer_list<StateVector<Scalar>> chain) {
  const std::vector<StateVector<Scalar>> copy(chain);
  return sequential_probability<Scalar>(prep, std::span<const StateVector<Scalar>>(copy));
}

struct SampleEstimate {
  double estimate = 0;
  double standard_error = 0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string rng{SplitMix64::name};

  bool operator==(const SampleEstimate&) const = default;
};

inline SampleEstimate make_estimate(std::uint64_t successes, std::uint64_t trials,
                                    std::uint64_t seed) {
  if (trials == 0) throw Error(Errc::empty_trials, "trials must be positive");
  SampleEstimate e;
  e.successes = successes;
  e.trials = trials;
  e.seed = seed;
  e.estimate = static_cast<double>(successes) / static_cast<double>(trials);
  e.standard_error = std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(trials));
  return e;
}

/// Outcome counts for trials [first, first + count) of the stream `seed`.
/// Disjoint ranges can be sampled separately and their counts summed.
template <typename Scalar>
std::vector<std::uint64_t> sample_counts(const StateVector<Scalar>& prep,
                                         const MeasurementContext<Scalar>& ctx,
                                         std::uint64_t seed, std::uint64_t first,
                                         std::uint64_t count) {
  const auto& outcomes = ctx.outcomes();
  std::vector<double> cumulative;
  cumulative.reserve(outcomes.size());
  double total = 0;
  for (const auto& o : outcomes) {
    total += static_cast<double>(born_probability(prep, o));
    cumulative.push_back(total);
  }
  for (auto& c : cumulative) c /= total;

  std::vector<std::uint64_t> counts(outcomes.size(), 0);
  for (std::uint64_t t = first; t < first + count; ++t) {
    const double u = SplitMix64::to_unit(SplitMix64::at(seed, t));
    std::size_t k = 0;
    while (k + 1 < cumulative.size() && u >= cumulative[k]) ++k;
    ++counts[k];
  }
  return counts;
}

/// One estimate per context outcome; the counts partition the trials.
template <typename Scalar>
std::vector<SampleEstimate> sample_context(const StateVector<Scalar>& prep,
                                           const MeasurementContext<Scalar>& ctx,
                                           std::uint64_t seed, std::uint64_t trials) {
  if (trials == 0) throw Error(Errc::empty_trials, "trials must be positive");
  if (prep.size() != ctx.dim()) throw Error(Errc::dimension_mismatch, "sample_context");
  const auto counts = sample_counts(prep, ctx, seed, 0, trials);
  std::vector<SampleEstimate> out;
  out.reserve(counts.size());
  for (const auto c : counts) out.push_back(make_estimate(c, trials, seed));
  return out;
}

/// Frequency of f when N_f is measured in a context containing f.
template <typename Scalar>
SampleEstimate estimate_paradox(const ScenarioParams<Scalar>& params, std::uint64_t seed,
                                std::uint64_t trials) {
  if (trials == 0) throw Error(Errc::empty_trials, "trials must be positive");
  const auto s = build_scenario(params);
  const std::vector<StateVector<Scalar>> seed_outcomes{s.f};
  MeasurementContext<Scalar> ctx(
      complete_basis<Scalar>(std::span<const StateVector<Scalar>>(seed_outcomes), 3));
  return sample_context(s.nf, ctx, seed, trials).front();
}

/// Frequency of |a,a> when N_f is measured locally in the {a, b} basis on
/// both qubits.
template <typename Scalar>
SampleEstimate estimate_nonlocal(const LocalParams<Scalar>& params, std::uint64_t seed,
                                 std::uint64_t trials) {
  if (trials == 0) throw Error(Errc::empty_trials, "trials must be positive");
  const auto s = build_nonlocal(params);
  MeasurementContext<Scalar> ctx({s.kaa, tensor(s.a, s.b), tensor(s.b, s.a), tensor(s.b, s.b)});
  return sample_context(s.nf, ctx, seed, trials).front();
}

}  // namespace qctx
