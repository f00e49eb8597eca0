#pragma once

#include <vector>

#include "orp/rational.hpp"

namespace orp::tsp {

struct TspInstance {
  int n = 0;
  bool symmetric = false;
  std::vector<std::vector<Rational>> dist;  // diagonal ignored

  static TspInstance create(bool symmetric, std::vector<std::vector<Rational>> dist);
};

// Hamiltonian circuit as a successor array, equivalent to the permutation-
// matrix encoding: next[v] is the vertex visited immediately after v.
struct Tour {
  std::vector<int> next;

  int n() const { return static_cast<int>(next.size()); }
  friend bool operator==(const Tour& a, const Tour& b) { return a.next == b.next; }
};

// Builds a tour from a cyclic vertex sequence; rejects non-permutations.
Tour tour_from_sequence(const std::vector<int>& seq);

// Vertex sequence starting at `start`.
std::vector<int> tour_sequence(const Tour& t, int start = 0);

bool is_hamiltonian_tour(const Tour& t);

Rational tour_length(const TspInstance& inst, const Tour& t);

// A maximal path common to both parent tours, contracted away. `inner` holds
// the interior vertices in travel order (endpoints excluded).
struct PseudoArc {
  int from = 0;
  int to = 0;
  Rational length;
  std::vector<int> inner;
};

// Output of the common-path contraction. General case: the contracted
// digraph is expanded into a cubic digraph by splitting every remaining
// vertex into an in-copy (2r) and out-copy (2r+1) joined by a zero-length
// artificial arc, plus the undirected shadow whose forced edges are exactly
// the pseudo and artificial arcs. Symmetric case: the reduced graph keeps
// original vertices, forced edges have zero length and the skipped length is
// accumulated in contracted_offset.
struct ContractedTspGraph {
  bool symmetric = false;
  bool fully_common = false;          // parents identical (as arc or edge sets)
  std::vector<int> reduced_vertices;  // original ids, ascending
  std::vector<PseudoArc> pseudo;

  enum class ArcKind { Regular, Pseudo, Artificial };
  struct Arc {
    int tail = 0;  // split-node id (general case)
    int head = 0;
    Rational length;
    ArcKind kind = ArcKind::Regular;
    int pseudo_index = -1;
  };
  int split_node_count = 0;
  std::vector<Arc> arcs;

  struct UEdge {
    int a = 0;  // split-node ids (general) or reduced-vertex ids (symmetric)
    int b = 0;
    Rational length;
    bool forced = false;
    int pseudo_index = -1;
  };
  int shadow_node_count = 0;
  std::vector<UEdge> edges;
  Rational contracted_offset;  // symmetric case only
};

ContractedTspGraph contract_common_general(const TspInstance& inst, const Tour& t1,
                                           const Tour& t2);
ContractedTspGraph contract_common_symmetric(const TspInstance& inst, const Tour& t1,
                                             const Tour& t2);

struct TspOrpResult {
  Tour tour;
  Rational length;
};

// Shortest circuit that uses only arcs present in a parent and all arcs
// common to both. Enumerates the Hamiltonian cycles of the contracted
// shadow graph, checks both traversal directions against the cubic digraph,
// and expands pseudo-arcs back.
TspOrpResult tsp_orp_general(const TspInstance& inst, const Tour& t1, const Tour& t2,
                             int workers = 1);

// Undirected counterpart on the degree-at-most-4 reduced graph with forced
// zero-length edges.
TspOrpResult tsp_orp_symmetric(const TspInstance& inst, const Tour& t1, const Tour& t2,
                               int workers = 1);

}  // namespace orp::tsp
