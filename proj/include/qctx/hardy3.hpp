#pragma once

// Three-dimensional Hardy-like scenario: the central context {1, 2, 3}, the
// outcomes D1 (orthogonal to 1) and D2 (orthogonal to 2), their contexts
// {1, D1, S1} and {2, D2, S2}, the outcome f sharing a context with S1 and
// S2, and the state N_f sharing a context with D1 and D2.
//
// The scenario is fixed by alpha = |<D1|3>|^2, beta = |<D2|3>|^2 and the
// phases of <3|D1> and <3|D2>. Only D1 and D2 are written down explicitly;
// S1, S2, f and N_f come from orthogonal completion so that the closed-form
// predictions below are checked against vectors that never used them.
//
// Working inside the three-dimensional span realizes the modeling postulate
// that any outcome added to the central context also shares a context with
// N_f; there is nothing separate to check for it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qctx/errors.hpp"
#include "qctx/hilbert.hpp"
#include "qctx/network.hpp"
#include "qctx/report.hpp"

namespace qctx {

/// Distance from 0 and 1 below which a probability parameter is rejected.
template <typename Scalar>
inline constexpr Scalar kBoundaryMargin = Scalar(1e-9);

template <typename Scalar>
Scalar require_interior(const char* name, Scalar value) {
  if (!(value > kBoundaryMargin<Scalar> && value < Scalar(1) - kBoundaryMargin<Scalar>)) {
    throw Error(Errc::out_of_domain, std::string(name) + " = " + std::to_string(double(value)) +
                                         " must lie strictly inside (0, 1)");
  }
  return value;
}

template <typename Scalar>
struct ScenarioParams {
  Scalar alpha{};     // |<D1|3>|^2
  Scalar beta{};      // |<D2|3>|^2
  Scalar phase_d1{};  // arg <3|D1>
  Scalar phase_d2{};  // arg <3|D2>

  bool operator==(const ScenarioParams&) const = default;
};

template <typename Scalar>
struct HardyScenario {
  ScenarioParams<Scalar> params;
  StateVector<Scalar> one, two, three;
  StateVector<Scalar> d1, d2;
  StateVector<Scalar> s1, s2;
  StateVector<Scalar> f;
  StateVector<Scalar> nf;
};

// Closed-form magnitudes. Each takes the two central-context probabilities.

/// |<3|N_f>|^2 = (1 - alpha)(1 - beta) / (1 - alpha beta)
template <typename Scalar>
Scalar predicted_nf3(Scalar alpha, Scalar beta) {
  require_interior("alpha", alpha);
  require_interior("beta", beta);
  return (Scalar(1) - alpha) * (Scalar(1) - beta) / (Scalar(1) - alpha * beta);
}

/// |<f|3>|^2 = alpha beta / (1 - (1 - alpha)(1 - beta))
template <typename Scalar>
Scalar predicted_f3(Scalar alpha, Scalar beta) {
  require_interior("alpha", alpha);
  require_interior("beta", beta);
  return alpha * beta / (Scalar(1) - (Scalar(1) - alpha) * (Scalar(1) - beta));
}

/// |<f|N_f>|^2, the probability of the paradoxical outcome f for the state
/// N_f. Maximal (1/9) at alpha = beta = 1/2.
template <typename Scalar>
Scalar predicted_paradox(Scalar alpha, Scalar beta) {
  require_interior("alpha", alpha);
  require_interior("beta", beta);
  const Scalar ab = alpha * beta;
  const Scalar cd = (Scalar(1) - alpha) * (Scalar(1) - beta);
  return ab / (Scalar(1) - ab) * (cd / (Scalar(1) - cd));
}

template <typename Scalar>
HardyScenario<Scalar> build_scenario(const ScenarioParams<Scalar>& params) {
  require_interior("alpha", params.alpha);
  require_interior("beta", params.beta);

  HardyScenario<Scalar> s;
  s.params = params;
  s.one = basis_vector<Scalar>(3, 0);
  s.two = basis_vector<Scalar>(3, 1);
  s.three = basis_vector<Scalar>(3, 2);

  const auto phase = [](Scalar angle) { return std::polar(Scalar(1), angle); };
  s.d1 = std::sqrt(Scalar(1) - params.alpha) * s.two +
         phase(params.phase_d1) * std::sqrt(params.alpha) * s.three;
  s.d2 = std::sqrt(Scalar(1) - params.beta) * s.one +
         phase(params.phase_d2) * std::sqrt(params.beta) * s.three;

  s.s1 = orthogonal_complement<Scalar>({s.one, s.d1}, 3);
  s.s2 = orthogonal_complement<Scalar>({s.two, s.d2}, 3);
  s.f = orthogonal_complement<Scalar>({s.s1, s.s2}, 3);
  s.nf = orthogonal_complement<Scalar>({s.d1, s.d2}, 3);
  return s;
}

/// Labels match builtin_network(Figure::fig2), plus "N_f".
template <typename Scalar>
Realization<Scalar> realization(const HardyScenario<Scalar>& s) {
  return {{"1", s.one}, {"2", s.two}, {"3", s.three}, {"D1", s.d1}, {"D2", s.d2},
          {"S1", s.s1}, {"S2", s.s2}, {"f", s.f},     {"N_f", s.nf}};
}

/// |<D1|D2> - <D1|3><3|D2>|
template <typename Scalar>
Scalar chain_rule_residual(const HardyScenario<Scalar>& s) {
  return std::abs(inner(s.d1, s.d2) - inner(s.d1, s.three) * inner(s.three, s.d2));
}

/// || f - (D1 <D1|f> + D2 <D2|f> - 3 <3|f>) ||
template <typename Scalar>
Scalar f_expansion_residual(const HardyScenario<Scalar>& s) {
  const StateVector<Scalar> expansion =
      s.d1 * inner(s.d1, s.f) + s.d2 * inner(s.d2, s.f) - s.three * inner(s.three, s.f);
  return (s.f - expansion).norm();
}

/// Largest residual among <f|N_f> = -<f|3><3|N_f> and the two orthogonality
/// expansions <D2|1><1|N_f> = -<D2|3><3|N_f>, <D1|2><2|N_f> = -<D1|3><3|N_f>.
template <typename Scalar>
Scalar nf_relation_residual(const HardyScenario<Scalar>& s) {
  const auto n3 = inner(s.three, s.nf);
  const Scalar r9 = std::abs(inner(s.f, s.nf) + inner(s.f, s.three) * n3);
  const Scalar r10a = std::abs(inner(s.d2, s.one) * inner(s.one, s.nf) + inner(s.d2, s.three) * n3);
  const Scalar r10b = std::abs(inner(s.d1, s.two) * inner(s.two, s.nf) + inner(s.d1, s.three) * n3);
  return std::max({r9, r10a, r10b});
}

/// Every relation of the scenario, formula against directly computed inner
/// products. Identity ids follow the equation they check:
///   eq3    <D1|D2> = <D1|3><3|D2>
///   eq6    f = D1<D1|f> + D2<D2|f> - 3<3|f>
///   eq9    <f|N_f> = -<f|3><3|N_f>
///   eq10a  <D2|1><1|N_f> = -<D2|3><3|N_f>
///   eq10b  <D1|2><2|N_f> = -<D1|3><3|N_f>
///   eq11a  |<1|N_f>|^2 = beta / (1 - beta) |<3|N_f>|^2
///   eq11b  |<2|N_f>|^2 = alpha / (1 - alpha) |<3|N_f>|^2
///   eq12   |<3|N_f>|^2
///   eq13a  <f|3> = <f|D1><D1|3>
///   eq13b  <f|3> = <f|D2><D2|3>
///   eq14   |<f|D1>|^2 + |<f|D2>|^2 - |<f|3>|^2 = 1
///   eq15   |<f|3>|^2
///   eq16   |<f|N_f>|^2
/// Closed-form sides of eq11, eq12, eq15 and eq16 use only alpha and beta.
template <typename Scalar>
RelationReport<Scalar> verify_all(const HardyScenario<Scalar>& s) {
  const auto& p = s.params;
  RelationReport<Scalar> report;
  report.scenario = "hardy3";
  report.params = {{"alpha", p.alpha},
                   {"beta", p.beta},
                   {"phase_d1", p.phase_d1},
                   {"phase_d2", p.phase_d2}};

  const auto n3 = inner(s.three, s.nf);
  const Scalar nf3 = predicted_nf3(p.alpha, p.beta);
  const Scalar f3 = predicted_f3(p.alpha, p.beta);
  const Scalar paradox = predicted_paradox(p.alpha, p.beta);
  const Scalar one = Scalar(1);

  auto& rel = report.relations;
  rel.push_back(complex_relation("eq3", inner(s.d1, s.three) * inner(s.three, s.d2),
                                 inner(s.d1, s.d2)));
  const StateVector<Scalar> expansion =
      s.d1 * inner(s.d1, s.f) + s.d2 * inner(s.d2, s.f) - s.three * inner(s.three, s.f);
  rel.push_back(vector_relation<Scalar>("eq6", expansion, s.f));
  rel.push_back(complex_relation("eq9", -inner(s.f, s.three) * n3, inner(s.f, s.nf)));
  rel.push_back(complex_relation("eq10a", -inner(s.d2, s.three) * n3,
                                 inner(s.d2, s.one) * inner(s.one, s.nf)));
  rel.push_back(complex_relation("eq10b", -inner(s.d1, s.three) * n3,
                                 inner(s.d1, s.two) * inner(s.two, s.nf)));
  rel.push_back(real_relation("eq11a", p.beta / (one - p.beta) * nf3, std::norm(inner(s.one, s.nf))));
  rel.push_back(real_relation("eq11b", p.alpha / (one - p.alpha) * nf3, std::norm(inner(s.two, s.nf))));
  rel.push_back(real_relation("eq12", nf3, std::norm(n3)));
  rel.push_back(complex_relation("eq13a", inner(s.f, s.d1) * inner(s.d1, s.three), inner(s.f, s.three)));
  rel.push_back(complex_relation("eq13b", inner(s.f, s.d2) * inner(s.d2, s.three), inner(s.f, s.three)));
  rel.push_back(real_relation("eq14", one,
                              std::norm(inner(s.f, s.d1)) + std::norm(inner(s.f, s.d2)) -
                                  std::norm(inner(s.f, s.three))));
  rel.push_back(real_relation("eq15", f3, std::norm(inner(s.f, s.three))));
  rel.push_back(real_relation("eq16", paradox, std::norm(inner(s.f, s.nf))));
  return report;
}

}  // namespace qctx
