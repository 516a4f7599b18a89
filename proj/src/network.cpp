#include "qctx/network.hpp"

#include <algorithm>
#include <set>

namespace qctx {

namespace {

bool contains_pair(const std::vector<LabelPair>& pairs, std::string_view a, std::string_view b) {
  return std::any_of(pairs.begin(), pairs.end(), [&](const LabelPair& p) {
    return (p.a == a && p.b == b) || (p.a == b && p.b == a);
  });
}

ContextNetwork relabel(const ContextNetwork& net, const std::map<std::string, std::string>& names) {
  auto rename = [&](const std::string& s) { return names.at(s); };
  ContextNetwork out;
  for (const auto& n : net.nodes) out.nodes.push_back(rename(n));
  for (const auto& e : net.edges) out.edges.push_back({rename(e.a), rename(e.b)});
  for (const auto& e : net.non_edges) out.non_edges.push_back({rename(e.a), rename(e.b)});
  return out;
}

ContextNetwork figure1() {
  ContextNetwork net;
  net.nodes = {"1", "2", "3", "D1", "D2"};
  net.edges = {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"1", "D1"}, {"2", "D2"}};
  // D1 is orthogonal to 1 but not to 2 or 3; likewise for D2. D1 and D2 overlap.
  net.non_edges = {{"D1", "D2"}, {"D1", "3"}, {"D2", "3"}, {"D1", "2"}, {"D2", "1"}};
  return net;
}

ContextNetwork figure2() {
  ContextNetwork net = figure1();
  net.nodes.insert(net.nodes.end(), {"S1", "S2", "f"});
  net.edges.insert(net.edges.end(), {{"1", "S1"},
                                     {"D1", "S1"},
                                     {"2", "S2"},
                                     {"D2", "S2"},
                                     {"f", "S1"},
                                     {"f", "S2"}});
  net.non_edges.insert(net.non_edges.end(), {{"f", "3"}, {"f", "D1"}, {"f", "D2"}});
  return net;
}

ContextNetwork figure3() {
  return relabel(figure2(), {{"1", "0,1"},
                             {"2", "1,0"},
                             {"3", "0,0"},
                             {"D1", "a,0"},
                             {"D2", "0,a"},
                             {"S1", "b,0"},
                             {"S2", "0,b"},
                             {"f", "f_NL"}});
}

ContextNetwork figure4() {
  ContextNetwork net = figure3();
  net.nodes.insert(net.nodes.end(), {"1,1", "a,a"});
  for (const char* other : {"0,0", "0,1", "1,0", "a,0", "0,a", "b,0", "0,b", "f_NL"}) {
    net.edges.push_back({"1,1", other});
  }
  net.edges.push_back({"a,a", "b,0"});
  net.edges.push_back({"a,a", "0,b"});
  net.non_edges.push_back({"1,1", "a,a"});
  return net;
}

}  // namespace

bool ContextNetwork::has_node(std::string_view label) const {
  return std::find(nodes.begin(), nodes.end(), label) != nodes.end();
}

bool ContextNetwork::has_edge(std::string_view a, std::string_view b) const {
  return contains_pair(edges, a, b);
}

bool ContextNetwork::has_non_edge(std::string_view a, std::string_view b) const {
  return contains_pair(non_edges, a, b);
}

std::size_t ContextNetwork::degree(std::string_view label) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [&](const LabelPair& e) { return e.a == label || e.b == label; }));
}

bool ContextNetwork::is_clique(const std::vector<std::string>& labels) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (!has_edge(labels[i], labels[j])) return false;
    }
  }
  return true;
}

void check_network(const ContextNetwork& net) {
  std::set<std::string, std::less<>> seen;
  for (const auto& n : net.nodes) {
    if (n.empty()) throw Error(Errc::invalid_network, "empty outcome label");
    if (!seen.insert(n).second) throw Error(Errc::invalid_network, "duplicate label '" + n + "'");
  }
  auto check_pairs = [&](const std::vector<LabelPair>& pairs, const char* what) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& p = pairs[i];
      if (p.a == p.b) throw Error(Errc::invalid_network, std::string("self-loop in ") + what);
      if (!seen.contains(p.a) || !seen.contains(p.b)) {
        throw Error(Errc::invalid_network,
                    std::string(what) + " (" + p.a + ", " + p.b + ") names an unknown outcome");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (pairs[j].same_pair(p)) {
          throw Error(Errc::invalid_network,
                      std::string("repeated ") + what + " (" + p.a + ", " + p.b + ")");
        }
      }
    }
  };
  check_pairs(net.edges, "edge");
  check_pairs(net.non_edges, "non-edge");
  for (const auto& p : net.non_edges) {
    if (net.has_edge(p.a, p.b)) {
      throw Error(Errc::invalid_network,
                  "(" + p.a + ", " + p.b + ") is both an edge and a non-edge");
    }
  }
}

Figure figure_from_int(int number) {
  if (number < 1 || number > 4) {
    throw Error(Errc::parse_error, "figure must be 1, 2, 3 or 4");
  }
  return static_cast<Figure>(number);
}

ContextNetwork builtin_network(Figure figure) {
  switch (figure) {
    case Figure::fig1: return figure1();
    case Figure::fig2: return figure2();
    case Figure::fig3: return figure3();
    case Figure::fig4: return figure4();
  }
  throw Error(Errc::parse_error, "unknown figure");
}

}  // namespace qctx
