#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qctx/hilbert.hpp"

namespace qctx {

/// One checked relation. `formula` and `direct` are flattened real
/// components: a single number for a probability, (re, im) for a complex
/// inner-product identity, and (re0, im0, re1, ...) for a vector identity.
/// The residual is the Euclidean distance between the two.
template <typename Scalar>
struct Relation {
  std::string id;
  std::vector<Scalar> formula;
  std::vector<Scalar> direct;
  Scalar residual{};

  bool operator==(const Relation&) const = default;
};

template <typename Scalar>
Scalar flat_distance(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  Scalar sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += (x[i] - y[i]) * (x[i] - y[i]);
  return std::sqrt(sum);
}

template <typename Scalar>
Relation<Scalar> real_relation(std::string id, Scalar formula, Scalar direct) {
  return {std::move(id), {formula}, {direct}, std::abs(formula - direct)};
}

template <typename Scalar>
Relation<Scalar> complex_relation(std::string id, std::complex<Scalar> formula,
                                  std::complex<Scalar> direct) {
  return {std::move(id),
          {formula.real(), formula.imag()},
          {direct.real(), direct.imag()},
          std::abs(formula - direct)};
}

template <typename Scalar>
Relation<Scalar> vector_relation(std::string id, const StateVector<Scalar>& formula,
                                 const StateVector<Scalar>& direct) {
  Relation<Scalar> r{std::move(id), {}, {}, (formula - direct).norm()};
  for (Eigen::Index i = 0; i < formula.size(); ++i) {
    r.formula.push_back(formula(i).real());
    r.formula.push_back(formula(i).imag());
    r.direct.push_back(direct(i).real());
    r.direct.push_back(direct(i).imag());
  }
  return r;
}

template <typename Scalar>
struct RelationReport {
  std::string scenario;
  std::vector<std::pair<std::string, Scalar>> params;
  std::vector<Relation<Scalar>> relations;
  std::string phase_canon = kPhaseCanon;

  const Relation<Scalar>* find(std::string_view id) const {
    for (const auto& r : relations)
      if (r.id == id) return &r;
    return nullptr;
  }

  Scalar max_residual() const {
    Scalar m = 0;
    for (const auto& r : relations) m = std::max(m, r.residual);
    return m;
  }

  /// First relation whose residual is not below `tol` (NaN counts as failing).
  std::optional<std::string> first_failure(Scalar tol) const {
    for (const auto& r : relations)
      if (!(r.residual < tol)) return r.id;
    return std::nullopt;
  }

  bool operator==(const RelationReport&) const = default;
};

}  // namespace qctx
