#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "orp/rational.hpp"

namespace orp::hamilton {

struct Graph {
  struct Edge {
    int a = 0;
    int b = 0;
    bool forced = false;
  };
  int n = 0;
  std::vector<Edge> edges;
};

// Visits every Hamiltonian cycle of the graph that uses all forced edges,
// exactly once, as a vertex sequence of length n (the closing edge back to
// the first vertex is implicit). Backtracking over edge in/out decisions
// with propagation: saturated vertices exclude their remaining edges,
// vertices down to two usable edges force them in, and a cycle may only
// close when it covers every vertex.
void enumerate_forced_hamiltonian_cycles(const Graph& g,
                                         const std::function<void(const std::vector<int>&)>& fn);

// Minimizes an evaluation over all forced-edge Hamiltonian cycles. The
// evaluator returns the cycle cost plus an arbitrary payload, or nullopt if
// the cycle is unusable. With workers > 1 the search frontier is split
// across threads; the reduction is by (cost, discovery order) so the chosen
// optimum value never depends on thread scheduling.
template <class T>
using CycleEval = std::function<std::optional<std::pair<Rational, T>>(const std::vector<int>&)>;

std::optional<std::pair<Rational, std::vector<int>>> minimize_over_cycles(
    const Graph& g, int workers, const CycleEval<std::vector<int>>& eval);

}  // namespace orp::hamilton
