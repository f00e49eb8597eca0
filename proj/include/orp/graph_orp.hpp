#pragma once

#include <utility>
#include <vector>

#include "orp/core.hpp"
#include "orp/rational.hpp"

namespace orp::graph {

// Simple vertex-weighted graph, no loops or multi-edges. Adjacency is kept
// as a packed n*n bit matrix so membership tests are O(1).
struct WeightedGraph {
  int n = 0;
  std::vector<Rational> weight;
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> adj;  // flat n*n

  static WeightedGraph create(std::vector<Rational> weights,
                              std::vector<std::pair<int, int>> edges);
  bool adjacent(int u, int v) const { return adj[static_cast<std::size_t>(u) * n + v]; }
};

WeightedGraph complement(const WeightedGraph& g);

bool is_clique(const WeightedGraph& g, const BinaryVector& x);
bool is_independent_set(const WeightedGraph& g, const BinaryVector& x);
bool is_vertex_cover(const WeightedGraph& g, const BinaryVector& x);

Rational selected_weight(const WeightedGraph& g, const BinaryVector& x);

// Maximum-weight clique ORP. The offspring keeps every vertex both parents
// share, never uses a vertex outside either parent, and chooses the free
// vertices through a min-weight vertex cover on the bipartite complement of
// the subgraph induced by the free positions.
BinaryVector clique_orp(const WeightedGraph& g, const BinaryVector& p1, const BinaryVector& p2);

// Maximum-weight independent set ORP: clique ORP on the complement graph,
// identity bit mapping.
BinaryVector independent_set_orp(const WeightedGraph& g, const BinaryVector& p1,
                                 const BinaryVector& p2);

// Minimum-weight vertex cover ORP: flip all bits, solve the independent set
// ORP, flip back.
BinaryVector vertex_cover_orp(const WeightedGraph& g, const BinaryVector& p1,
                              const BinaryVector& p2);

}  // namespace orp::graph
