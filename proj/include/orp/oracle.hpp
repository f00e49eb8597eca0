#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "orp/core.hpp"
#include "orp/sched_orp.hpp"
#include "orp/tsp_orp.hpp"

namespace orp::oracle {

// Reference result from exhaustive enumeration. `examined` counts the
// feasible gene-transmitting candidates that were compared.
template <class Witness>
struct OracleReport {
  Rational value;
  Witness witness;
  std::uint64_t examined = 0;
};

using BinaryEvaluator = std::function<std::pair<bool, Rational>(const BinaryVector&)>;

// Enumerates all 2^|D| completions of the parents, keeps the feasible ones,
// returns the best under `sense`. The parents themselves bypass the
// feasibility filter: they are required to be feasible by contract. The
// guard is a hard error, not a truncation.
OracleReport<BinaryVector> brute_force_binary_orp(const BinaryEvaluator& evaluate, Sense sense,
                                                  const BinaryVector& p1, const BinaryVector& p2,
                                                  int max_free = 25);

// Enumerates all circular permutations, filters by the parent arc/edge
// inclusion-exclusion rule, returns the shortest.
OracleReport<tsp::Tour> brute_force_tour_orp(const tsp::TspInstance& inst, const tsp::Tour& t1,
                                             const tsp::Tour& t2, int max_n = 10);

// Enumerates all position-wise parent choices, filters bijectivity, returns
// the minimum setup cost.
OracleReport<sched::JobPermutation> brute_force_requisition_orp(const sched::SetupInstance& inst,
                                                                const sched::JobPermutation& p1,
                                                                const sched::JobPermutation& p2,
                                                                int max_k = 12);

}  // namespace orp::oracle
