#pragma once

#include <utility>
#include <vector>

#include "orp/rational.hpp"

namespace orp {

struct FlowArc {
  int tail = 0;
  int head = 0;
  Rational capacity;
};

struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<FlowArc> arcs;
};

struct MaxFlowResult {
  Rational value;
  std::vector<int> cut_arcs;          // indices into FlowNetwork::arcs, crossing S -> T
  std::vector<char> source_side;      // per node, residual-reachable from source
};

// Blocking-flow (Dinic) max flow with exact capacities. The cut is the
// canonical one induced by residual reachability from the source; its
// capacity always equals the flow value.
MaxFlowResult max_flow_min_cut(const FlowNetwork& net);

struct BipartiteGraph {
  std::vector<Rational> left_weight;
  std::vector<Rational> right_weight;
  std::vector<std::pair<int, int>> edges;  // (left index, right index)

  int left_count() const { return static_cast<int>(left_weight.size()); }
  int right_count() const { return static_cast<int>(right_weight.size()); }
};

struct VertexSelection {
  std::vector<char> left;
  std::vector<char> right;
  Rational weight;
};

// Minimum-weight vertex cover of a vertex-weighted bipartite graph via an
// s-t cut on the supplementary network: source->left arcs carry the left
// weights, right->sink arcs the right weights, crossing arcs max{w(u),w(v)}.
// Crossing arcs that end up in the canonical cut are substituted by a
// source- or sink-adjacent arc, so the cover reads off the cut directly.
VertexSelection bipartite_min_weight_vertex_cover(const BipartiteGraph& g);

// Complement of the minimum cover; weight is the selected vertices' total.
VertexSelection bipartite_max_weight_independent_set(const BipartiteGraph& g);

}  // namespace orp
