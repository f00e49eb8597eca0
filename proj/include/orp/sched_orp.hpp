#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "orp/rational.hpp"

namespace orp::sched {

// Jobs 0..k-1 with sequence-dependent setup times. The solver optimizes the
// total setup time s(pi); the processing-time sum is a schedule-independent
// constant added on top for the makespan.
struct SetupInstance {
  int k = 0;
  std::vector<Rational> proc_time;
  std::vector<std::vector<Rational>> setup;  // k x k, diagonal unused

  static SetupInstance create(std::vector<Rational> proc_time,
                              std::vector<std::vector<Rational>> setup);
  Rational total_processing() const;
};

using JobPermutation = std::vector<int>;  // position -> job, 0-based

bool is_permutation(const JobPermutation& p, int k);

Rational setup_cost(const SetupInstance& inst, const JobPermutation& p);

// Bipartite positions-vs-jobs graph induced by the per-position requisitions
// X^i = {p1_i, p2_i}. Positions where the parents agree contribute special
// edges; the rest split into blocks (cycles), each carrying exactly two
// maximal matchings. candidate[i] holds the two admissible jobs of position
// i (equal when special); selecting matching a in the block of position i
// assigns candidate[i][a].
struct RequisitionGraph {
  int k = 0;
  std::vector<std::array<int, 2>> candidate;
  std::vector<char> special;       // per position
  std::vector<int> block_of;       // per position, -1 when special
  std::vector<std::vector<int>> blocks;  // positions per block, ascending

  int q() const { return static_cast<int>(blocks.size()); }
  int job_at(int position, int matching) const { return candidate[position][matching]; }
};

RequisitionGraph build_requisition_graph(const JobPermutation& p1, const JobPermutation& p2);

// General entry point: a requisition family (1- or 2-element sets per
// position) that must satisfy the degree-coherence conditions; families that
// violate them are rejected with an error.
RequisitionGraph build_requisition_from_sets(const std::vector<std::vector<int>>& requisitions);

// |F| = 2^q. Guarded against overflow of the count itself.
std::uint64_t count_feasible(const RequisitionGraph& g);

// Per-block and block-pair setup-cost aggregates over the contacts (adjacent
// position pairs spanning two structures), plus the constant part from
// special-special contacts. With these, switching one block's matching
// updates the objective in O(|A(j)|).
struct ContactTables {
  Rational base;
  std::vector<std::array<Rational, 2>> single;            // P^a_j
  std::vector<std::vector<int>> adjacent;                 // A(j), ascending
  // pair_cost[j] maps a neighbour j' (same index as adjacent[j]) to the four
  // values P^{(a,b)}_{j j'} with a the matching of j and b of j'.
  std::vector<std::vector<std::array<Rational, 4>>> pair_cost;
};

ContactTables precompute_contacts(const RequisitionGraph& g, const SetupInstance& inst);

struct MakespanResult {
  JobPermutation perm;
  Rational cost;                       // s(pi)
  std::vector<std::uint8_t> delta;     // chosen matching per block
};

struct MakespanOptions {
  int max_q = 25;  // the sweep is Theta(q 2^q)
  // test hook: called after every Gray-code step with the current selector
  // and incrementally updated cost
  std::function<void(const std::vector<std::uint8_t>&, const Rational&)> on_step;
};

// Optimal gene-transmitting permutation via Gray-code enumeration of the
// 2^q matching selections with incremental objective updates. Ties go to the
// lexicographically smallest selector.
MakespanResult solve_makespan_orp(const SetupInstance& inst, const JobPermutation& p1,
                                  const JobPermutation& p2, const MakespanOptions& opts = {});

// Fraction of `samples` independent uniform random permutation pairs whose
// requisition graph has at most 1.1*ln(k) blocks.
Rational good_pair_fraction(int k, int samples, std::uint64_t seed);

}  // namespace orp::sched
