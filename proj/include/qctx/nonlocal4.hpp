#pragma once

// The Hardy scenario mapped onto two identical qubits. The central context
// becomes {|0,0>, |0,1>, |1,0>} (3 -> 00, 1 -> 01, 2 -> 10), D1 and D2 become
// the product outcomes |a,0> and |0,a>, S1 and S2 become |b,0> and |0,b>,
// and f is replaced by f_NL, the outcome orthogonal to |b,0>, |0,b> and
// |1,1>. All inner products then follow from the single local overlap
// a2 = |<a|0>|^2.
//
// N_f is orthogonal to |a,0>, |0,a> and |1,1>. The product outcome |a,a>
// decomposes over f_NL and |1,1>, which ties its probability in N_f to the
// entangled outcome f_NL.

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/SVD>

#include "qctx/hardy3.hpp"
#include "qctx/hilbert.hpp"
#include "qctx/network.hpp"
#include "qctx/report.hpp"

namespace qctx {

template <typename Scalar>
struct LocalParams {
  Scalar a2{};       // |<a|0>|^2
  Scalar phase_a{};  // relative phase on the |0> component of |a>

  bool operator==(const LocalParams&) const = default;
};

template <typename Scalar>
struct NonlocalScenario {
  LocalParams<Scalar> params;
  // single qubit
  StateVector<Scalar> zero, one, a, b;
  // product outcomes, Kronecker order (00, 01, 10, 11)
  StateVector<Scalar> k00, k01, k10, k11;
  StateVector<Scalar> ka0, k0a, kb0, k0b, kaa;
  // entangled outcome and the prepared state
  StateVector<Scalar> f_nl;
  StateVector<Scalar> nf;
};

/// |<f_NL|N_f>|^2 = a2^2 / (1 + a2) * (1 - a2) / (1 - (1 - a2)^2)
template <typename Scalar>
Scalar predicted_fnl_nf(Scalar a2) {
  require_interior("a2", a2);
  const Scalar c = Scalar(1) - a2;
  return a2 * a2 / (Scalar(1) + a2) * (c / (Scalar(1) - c * c));
}

/// |<f_NL|a,a>|^2 = 1 - (1 - a2)^2
template <typename Scalar>
Scalar predicted_faa(Scalar a2) {
  require_interior("a2", a2);
  const Scalar c = Scalar(1) - a2;
  return Scalar(1) - c * c;
}

/// |<a,a|N_f>|^2 = a2^2 (1 - a2) / (1 + a2); 1/12 at a2 = 1/2.
template <typename Scalar>
Scalar predicted_aa_nf(Scalar a2) {
  require_interior("a2", a2);
  return a2 * a2 * (Scalar(1) - a2) / (Scalar(1) + a2);
}

template <typename Scalar>
NonlocalScenario<Scalar> build_nonlocal(const LocalParams<Scalar>& params) {
  require_interior("a2", params.a2);

  NonlocalScenario<Scalar> s;
  s.params = params;
  s.zero = basis_vector<Scalar>(2, 0);
  s.one = basis_vector<Scalar>(2, 1);
  s.a = std::sqrt(Scalar(1) - params.a2) * s.one +
        std::polar(Scalar(1), params.phase_a) * std::sqrt(params.a2) * s.zero;
  s.b = orthogonal_complement<Scalar>({s.a}, 2);

  s.k00 = tensor(s.zero, s.zero);
  s.k01 = tensor(s.zero, s.one);
  s.k10 = tensor(s.one, s.zero);
  s.k11 = tensor(s.one, s.one);
  s.ka0 = tensor(s.a, s.zero);
  s.k0a = tensor(s.zero, s.a);
  s.kb0 = tensor(s.b, s.zero);
  s.k0b = tensor(s.zero, s.b);
  s.kaa = tensor(s.a, s.a);

  s.f_nl = orthogonal_complement<Scalar>({s.kb0, s.k0b, s.k11}, 4);
  s.nf = orthogonal_complement<Scalar>({s.ka0, s.k0a, s.k11}, 4);
  return s;
}

/// Labels match builtin_network(Figure::fig4) (a superset of fig3), plus "N_f".
template <typename Scalar>
Realization<Scalar> realization(const NonlocalScenario<Scalar>& s) {
  return {{"0,0", s.k00}, {"0,1", s.k01}, {"1,0", s.k10}, {"1,1", s.k11},
          {"a,0", s.ka0}, {"0,a", s.k0a}, {"b,0", s.kb0}, {"0,b", s.k0b},
          {"a,a", s.kaa}, {"f_NL", s.f_nl}, {"N_f", s.nf}};
}

/// Singular values (descending) of the 2x2 coefficient array c(i, j) = v(2i + j).
/// The state is entangled iff the second value exceeds 1e-10.
template <typename Scalar>
std::array<Scalar, 2> schmidt_coefficients(const StateVector<Scalar>& v) {
  if (v.size() != 4) {
    throw Error(Errc::dimension_mismatch, "schmidt_coefficients needs a two-qubit vector");
  }
  Eigen::Matrix<std::complex<Scalar>, 2, 2> c;
  c << v(0), v(1), v(2), v(3);
  Eigen::JacobiSVD<Eigen::Matrix<std::complex<Scalar>, 2, 2>> svd(c);
  const auto& sv = svd.singularValues();
  return {sv(0), sv(1)};
}

template <typename Scalar>
inline constexpr Scalar kEntanglementThreshold = Scalar(1e-10);

template <typename Scalar>
bool is_entangled(const StateVector<Scalar>& v) {
  return schmidt_coefficients(v)[1] > kEntanglementThreshold<Scalar>;
}

/// Max of || |a,a> - (f_NL <f_NL|a,a> + |1,1> <1,1|a,a>) || and
/// |<a,a|N_f> - <a,a|f_NL><f_NL|N_f>|.
template <typename Scalar>
Scalar aa_decomposition_residual(const NonlocalScenario<Scalar>& s) {
  const StateVector<Scalar> expansion =
      s.f_nl * inner(s.f_nl, s.kaa) + s.k11 * inner(s.k11, s.kaa);
  const Scalar r18 = (s.kaa - expansion).norm();
  const Scalar r20 =
      std::abs(inner(s.kaa, s.nf) - inner(s.kaa, s.f_nl) * inner(s.f_nl, s.nf));
  return std::max(r18, r20);
}

/// Relations of the two-qubit scenario:
///   eq17  |<f_NL|N_f>|^2
///   eq18  |a,a> = f_NL<f_NL|a,a> + |1,1><1,1|a,a>
///   eq19  |<f_NL|a,a>|^2
///   eq20  <a,a|N_f> = <a,a|f_NL><f_NL|N_f>
///   eq21  |<a,a|N_f>|^2
/// plus "eq16_reduced", the three-dimensional paradox formula at
/// alpha = beta = a2 against the same direct value as eq17.
template <typename Scalar>
RelationReport<Scalar> verify_all(const NonlocalScenario<Scalar>& s) {
  const Scalar a2 = s.params.a2;
  RelationReport<Scalar> report;
  report.scenario = "nonlocal4";
  report.params = {{"a2", a2}, {"phase_a", s.params.phase_a}};

  const Scalar fnl_nf = std::norm(inner(s.f_nl, s.nf));
  auto& rel = report.relations;
  rel.push_back(real_relation("eq17", predicted_fnl_nf(a2), fnl_nf));
  const StateVector<Scalar> expansion =
      s.f_nl * inner(s.f_nl, s.kaa) + s.k11 * inner(s.k11, s.kaa);
  rel.push_back(vector_relation<Scalar>("eq18", expansion, s.kaa));
  rel.push_back(real_relation("eq19", predicted_faa(a2), std::norm(inner(s.f_nl, s.kaa))));
  rel.push_back(complex_relation("eq20", inner(s.kaa, s.f_nl) * inner(s.f_nl, s.nf),
                                 inner(s.kaa, s.nf)));
  rel.push_back(real_relation("eq21", predicted_aa_nf(a2), std::norm(inner(s.kaa, s.nf))));
  rel.push_back(real_relation("eq16_reduced", predicted_paradox(a2, a2), fnl_nf));
  return report;
}

}  // namespace qctx
