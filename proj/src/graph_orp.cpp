#include "orp/graph_orp.hpp"

#include <string>

#include "orp/flows.hpp"

namespace orp::graph {

WeightedGraph WeightedGraph::create(std::vector<Rational> weights,
                                    std::vector<std::pair<int, int>> edges) {
  WeightedGraph g;
  g.n = static_cast<int>(weights.size());
  g.weight = std::move(weights);
  for (const Rational& w : g.weight) {
    if (w.sign() < 0) throw InvalidInstanceError("negative vertex weight");
  }
  g.adj.assign(static_cast<std::size_t>(g.n) * g.n, false);
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) {
      throw InvalidInstanceError("edge endpoint out of range");
    }
    if (u == v) throw InvalidInstanceError("loop edge at vertex " + std::to_string(u + 1));
    if (g.adjacent(u, v)) continue;  // drop multi-edges
    g.adj[static_cast<std::size_t>(u) * g.n + v] = true;
    g.adj[static_cast<std::size_t>(v) * g.n + u] = true;
    g.edges.emplace_back(u, v);
  }
  return g;
}

WeightedGraph complement(const WeightedGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return WeightedGraph::create(g.weight, std::move(edges));
}

namespace {

void check_length(const WeightedGraph& g, const BinaryVector& x) {
  if (static_cast<int>(x.size()) != g.n) throw DimensionError("vector length != vertex count");
}

std::vector<int> selected(const BinaryVector& x) {
  std::vector<int> s;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j]) s.push_back(static_cast<int>(j));
  }
  return s;
}

}  // namespace

bool is_clique(const WeightedGraph& g, const BinaryVector& x) {
  check_length(g, x);
  std::vector<int> s = selected(x);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_independent_set(const WeightedGraph& g, const BinaryVector& x) {
  check_length(g, x);
  std::vector<int> s = selected(x);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_vertex_cover(const WeightedGraph& g, const BinaryVector& x) {
  check_length(g, x);
  for (const auto& [u, v] : g.edges) {
    if (!x[u] && !x[v]) return false;
  }
  return true;
}

Rational selected_weight(const WeightedGraph& g, const BinaryVector& x) {
  check_length(g, x);
  Rational w;
  for (int j = 0; j < g.n; ++j) {
    if (x[j]) w += g.weight[j];
  }
  return w;
}

BinaryVector clique_orp(const WeightedGraph& g, const BinaryVector& p1, const BinaryVector& p2) {
  check_length(g, p1);
  check_length(g, p2);
  if (!is_clique(g, p1)) throw InfeasibleParentError("parent 1 is not a clique");
  if (!is_clique(g, p2)) throw InfeasibleParentError("parent 2 is not a clique");

  std::vector<int> diff = difference_set(p1, p2);
  if (diff.empty()) return p1;

  // Free vertices split by owning parent; both sides are cliques, so the
  // complement of the induced subgraph is bipartite across them.
  std::vector<int> side1, side2;
  for (int j : diff) {
    if (p1[j]) {
      side1.push_back(j);
    } else {
      side2.push_back(j);
    }
  }

  BipartiteGraph h;
  h.left_weight.reserve(side1.size());
  for (int j : side1) h.left_weight.push_back(g.weight[j]);
  h.right_weight.reserve(side2.size());
  for (int j : side2) h.right_weight.push_back(g.weight[j]);
  for (std::size_t a = 0; a < side1.size(); ++a) {
    for (std::size_t b = 0; b < side2.size(); ++b) {
      if (!g.adjacent(side1[a], side2[b])) {
        h.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }

  VertexSelection keep = bipartite_max_weight_independent_set(h);

  BinaryVector x(g.n, 0);
  for (int j = 0; j < g.n; ++j) {
    if (p1[j] && p2[j]) x[j] = 1;  // Q1 cap Q2 is always kept
  }
  for (std::size_t a = 0; a < side1.size(); ++a) {
    if (keep.left[a]) x[side1[a]] = 1;
  }
  for (std::size_t b = 0; b < side2.size(); ++b) {
    if (keep.right[b]) x[side2[b]] = 1;
  }
  if (!is_clique(g, x)) throw Error("internal: clique ORP produced a non-clique");
  return x;
}

BinaryVector independent_set_orp(const WeightedGraph& g, const BinaryVector& p1,
                                 const BinaryVector& p2) {
  check_length(g, p1);
  check_length(g, p2);
  if (!is_independent_set(g, p1)) throw InfeasibleParentError("parent 1 is not an independent set");
  if (!is_independent_set(g, p2)) throw InfeasibleParentError("parent 2 is not an independent set");
  return clique_orp(complement(g), p1, p2);
}

BinaryVector vertex_cover_orp(const WeightedGraph& g, const BinaryVector& p1,
                              const BinaryVector& p2) {
  check_length(g, p1);
  check_length(g, p2);
  if (!is_vertex_cover(g, p1)) throw InfeasibleParentError("parent 1 is not a vertex cover");
  if (!is_vertex_cover(g, p2)) throw InfeasibleParentError("parent 2 is not a vertex cover");
  auto flip = [](const BinaryVector& v) {
    BinaryVector r(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) r[j] = v[j] ? 0 : 1;
    return r;
  };
  BinaryVector r = independent_set_orp(g, flip(p1), flip(p2));
  return flip(r);
}

}  // namespace orp::graph
