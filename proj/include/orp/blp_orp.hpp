#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "orp/core.hpp"

namespace orp::blp {

// Hypergraph with rational vertex weights. An edge is "violated" by a vertex
// set that contains it entirely; independent sets contain no edge.
struct WeightedHypergraph {
  int n = 0;
  std::vector<Rational> weight;
  std::vector<std::vector<int>> edges;  // sorted vertex lists
  // two disjoint independent classes covering all vertices, when known
  std::optional<std::pair<std::vector<int>, std::vector<int>>> coloring;
};

bool hypergraph_set_independent(const WeightedHypergraph& h, const std::vector<char>& selected);

// ORP-of-a-BLP as a hypergraph: each free variable j (index t in dvars) owns
// the pair one_vertex(t) = 2t (x_j = 1, weight adj_c_t + lambda) and
// zero_vertex(t) = 2t+1 (x_j = 0, weight lambda). Constraint edges mark the
// variable combinations that violate a row; the d pairing edges {2t, 2t+1}
// forbid picking both sides. Vertices appearing in singleton edges can never
// be selected; they are excluded and every edge containing them dropped,
// giving the active (pruned) hypergraph. The 2-coloring is the pair of
// parent images, independent precisely because the parents are feasible.
struct OrpHypergraph {
  std::vector<int> dvars;  // free variable indices, ascending
  Rational lambda;
  WeightedHypergraph base;                      // pairing edges first
  std::vector<char> excluded;                   // per vertex
  std::vector<std::vector<int>> active_edges;   // no excluded vertices, size >= 2
  BinaryVector p1;                              // fixed genes come from here
  Sense sense = Sense::Max;

  int d() const { return static_cast<int>(dvars.size()); }
  static int one_vertex(int t) { return 2 * t; }
  static int zero_vertex(int t) { return 2 * t + 1; }
};

struct OrpHypergraphOptions {
  bool validate_parents = true;
  std::uint64_t max_row_combinations = std::uint64_t{1} << 20;
};

OrpHypergraph build_orp_hypergraph(const BlpInstance& blp, const BinaryVector& p1,
                                   const BinaryVector& p2,
                                   const OrpHypergraphOptions& opts = {});

// Rebuilds the solution vector from a per-pair choice (1 = x_j set to one).
BinaryVector hypergraph_selection_to_vector(const OrpHypergraph& h,
                                            const std::vector<std::uint8_t>& take_one);

// Polynomial case: with at most two variables per inequality the pruned
// hypergraph is an ordinary bipartite graph, solved through the max-weight
// independent set on it.
BinaryVector solve_two_var_orp(const BlpInstance& blp, const BinaryVector& p1,
                               const BinaryVector& p2);

struct ExactOptions {
  int max_free = 30;
  std::uint64_t max_row_combinations = std::uint64_t{1} << 20;
};

// Exact fallback for the NP-hard general case: branch and bound over the
// pair choices on the pruned hypergraph. Bound: current weight plus the sum
// of per-pair maxima; branching order: fewest incident constraint edges
// first.
BinaryVector solve_blp_orp_exact(const BlpInstance& blp, const BinaryVector& p1,
                                 const BinaryVector& p2, const ExactOptions& opts = {});

enum class SetKind { Packing, Partition, Covering };

// Set system over a Boolean matrix: packing max{cx : Ax <= e},
// partition min{cx : Ax = e}, covering min{cx : Ax >= e}.
struct SetSystemInstance {
  SetKind kind = SetKind::Packing;
  int m = 0;
  int n = 0;
  std::vector<Rational> cost;
  std::vector<std::vector<std::uint8_t>> a;  // m x n, 0/1

  static SetSystemInstance create(SetKind kind, std::vector<Rational> cost,
                                  std::vector<std::vector<std::uint8_t>> a);
};

bool set_system_feasible(const SetSystemInstance& inst, const BinaryVector& x);
Rational set_system_value(const SetSystemInstance& inst, const BinaryVector& x);
Sense set_system_sense(SetKind kind);
BlpInstance set_system_to_blp(const SetSystemInstance& inst);

// Packing ORP: conflict graph (columns sharing a row are adjacent), then the
// independent set ORP with identity mapping.
BinaryVector set_packing_orp(const SetSystemInstance& inst, const BinaryVector& p1,
                             const BinaryVector& p2);

// Partition ORP via the penalty transform to a packing instance with weights
// lambda*sum_i a_ij - c_j, lambda = 2*sum|c_j| + 1.
BinaryVector set_partition_orp(const SetSystemInstance& inst, const BinaryVector& p1,
                               const BinaryVector& p2);

// Simple plant location in the (Y, u) Boolean formulation.
struct SplpInstance {
  int facilities = 0;  // K
  int clients = 0;     // L
  std::vector<Rational> open_cost;
  std::vector<std::vector<Rational>> serve_cost;  // K x L

  static SplpInstance create(std::vector<Rational> open_cost,
                             std::vector<std::vector<Rational>> serve_cost);
};

struct SplpSolution {
  std::vector<std::vector<std::uint8_t>> y;  // K x L
  std::vector<std::uint8_t> u;               // K
};

bool splp_feasible(const SplpInstance& inst, const SplpSolution& s);
Rational splp_value(const SplpInstance& inst, const SplpSolution& s);

// Flat encoding: Y row-major, then u.
BinaryVector splp_encode(const SplpInstance& inst, const SplpSolution& s);
SplpSolution splp_decode(const SplpInstance& inst, const BinaryVector& x);

// SPLP ORP: flip u into ubar, solve the induced set-packing ORP with weights
// (lambda - c_kl) on y and C_k on ubar, flip back.
SplpSolution splp_orp(const SplpInstance& inst, const SplpSolution& p1, const SplpSolution& p2);

// Doubled-column hard instance: A' = (A A), costs repeated, parents the two
// complementary halves. Its ORP optimum equals the covering optimum.
OrpInstance<SetSystemInstance> gen_hard_setcover_orp(const SetSystemInstance& cover);

}  // namespace orp::blp
