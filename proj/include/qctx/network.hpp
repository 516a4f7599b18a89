#pragma once

// Orthogonality graphs of measurement outcomes. Nodes are outcome labels,
// edges assert vanishing inner products, and "non-edges" are pairs that are
// required to overlap. A context is a clique of mutually orthogonal outcomes.

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qctx/errors.hpp"
#include "qctx/hilbert.hpp"

namespace qctx {

struct LabelPair {
  std::string a;
  std::string b;

  bool same_pair(const LabelPair& other) const {
    return (a == other.a && b == other.b) || (a == other.b && b == other.a);
  }
  bool operator==(const LabelPair&) const = default;
};

struct ContextNetwork {
  std::vector<std::string> nodes;
  std::vector<LabelPair> edges;
  std::vector<LabelPair> non_edges;

  bool has_node(std::string_view label) const;
  bool has_edge(std::string_view a, std::string_view b) const;
  bool has_non_edge(std::string_view a, std::string_view b) const;
  std::size_t degree(std::string_view label) const;
  /// True when every pair in `labels` is joined by an edge.
  bool is_clique(const std::vector<std::string>& labels) const;

  bool operator==(const ContextNetwork&) const = default;
};

/// Throws Errc::invalid_network on duplicate labels, self-loops, unknown
/// endpoints, repeated pairs, or a pair listed both as edge and non-edge.
void check_network(const ContextNetwork& net);

enum class Figure { fig1 = 1, fig2 = 2, fig3 = 3, fig4 = 4 };

Figure figure_from_int(int number);

/// Hard-coded diagrams.
///
/// Fig1: central context {1,2,3} with D1 orthogonal to 1 and D2 orthogonal to 2.
/// Fig2: adds the contexts {1,D1,S1}, {2,D2,S2} and the outcome f orthogonal to
///       S1 and S2.
/// Fig3: Fig2 relabeled in the two-qubit product space
///       (1->"0,1", 2->"1,0", 3->"0,0", D->a, S->b, f->"f_NL").
/// Fig4: Fig3 plus "1,1" and "a,a". Every edge added here is forced by a
///       product-state identity:
///         <1,1|x,0> = <1|x><1|0> = 0 and <1,1|0,x> = <1|0><1|x> = 0 for x in {0,1,a,b},
///         <1,1|f_NL> = 0 because f_NL is confined to span{00,01,10},
///         <a,a|b,0> = <a|b><a|0> = 0 and <a,a|0,b> = 0 since <a|b> = 0.
///       "1,1" and "a,a" are required to overlap.
ContextNetwork builtin_network(Figure figure);

template <typename Scalar>
using Realization = std::map<std::string, StateVector<Scalar>, std::less<>>;

template <typename Scalar>
struct Violation {
  enum class Kind { edge_not_orthogonal, non_edge_orthogonal };
  Kind kind;
  LabelPair pair;
  Scalar magnitude;  // measured |<a|b>|
};

/// One violation per edge with |<a|b>| >= tol and per required non-edge with
/// |<a|b>| < tol. Extra labels in the realization are ignored.
template <typename Scalar>
std::vector<Violation<Scalar>> validate_realization(const ContextNetwork& net,
                                                    const Realization<Scalar>& real,
                                                    Scalar tol) {
  Eigen::Index dim = -1;
  for (const auto& label : net.nodes) {
    const auto it = real.find(label);
    if (it == real.end()) {
      throw Error(Errc::missing_assignment, "no vector for outcome '" + label + "'");
    }
    if (dim < 0) dim = it->second.size();
    if (it->second.size() != dim) {
      throw Error(Errc::dimension_mismatch, "outcome '" + label + "' has a different dimension");
    }
  }

  std::vector<Violation<Scalar>> out;
  auto overlap = [&](const LabelPair& p) {
    return std::abs(inner(real.find(p.a)->second, real.find(p.b)->second));
  };
  for (const auto& e : net.edges) {
    const Scalar m = overlap(e);
    if (m >= tol) out.push_back({Violation<Scalar>::Kind::edge_not_orthogonal, e, m});
  }
  for (const auto& e : net.non_edges) {
    const Scalar m = overlap(e);
    if (m < tol) out.push_back({Violation<Scalar>::Kind::non_edge_orthogonal, e, m});
  }
  return out;
}

}  // namespace qctx
