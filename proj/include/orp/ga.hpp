#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orp/blp_orp.hpp"
#include "orp/core.hpp"
#include "orp/graph_orp.hpp"
#include "orp/rng.hpp"
#include "orp/sched_orp.hpp"
#include "orp/tsp_orp.hpp"

namespace orp::ga {

struct GaConfig {
  int population = 10;       // even
  double pc = 1.0;           // crossover probability
  double pm = 0.05;          // mutation probability
  int generations = 50;
  std::uint64_t seed = 1;
};

struct HistoryRow {
  int generation = 0;
  Rational best;
  Rational mean;
};

template <class Genotype>
struct GaResult {
  Genotype best;
  Rational best_value;
  std::vector<HistoryRow> history;
};

// Fitness-proportional draw. Minimization problems are rescaled to
// (worst-in-pop - value) + 1 so every member keeps positive mass.
int select_index(const std::vector<Rational>& values, Sense sense, Rng& rng);

// With probability pc the first child is the exact optimal offspring and the
// second the better parent; otherwise the parents pass through unchanged.
template <class Problem>
std::pair<typename Problem::Genotype, typename Problem::Genotype> orp_crossover(
    const Problem& problem, const typename Problem::Genotype& p1,
    const typename Problem::Genotype& p2, double pc, Rng& rng) {
  if (!rng.chance(pc)) return {p1, p2};
  auto child1 = problem.orp_best(p1, p2);
  bool first_better = problem.sense() == Sense::Max
                          ? problem.evaluate(p2) < problem.evaluate(p1)
                          : problem.evaluate(p1) < problem.evaluate(p2);
  return {std::move(child1), first_better ? p1 : p2};
}

// Generational engine. A Problem supplies:
//   using Genotype = ...;
//   Sense sense() const;
//   Genotype random_feasible(Rng&) const;
//   bool feasible(const Genotype&) const;
//   Rational evaluate(const Genotype&) const;
//   Genotype orp_best(const Genotype&, const Genotype&) const;  // exact ORP
//   Genotype mutate(const Genotype&, double pm, Rng&) const;    // keeps feasibility
// Crossover applies the ORP with probability pc: the first child is the
// optimal offspring, the second the better parent. One pair per generation
// always includes the current population best so the population optimum
// cannot degrade when pc = 1 and pm = 0. Per-pair RNG streams are derived
// from the master seed, so results do not depend on evaluation order.
// `seeds` (for example a parent pair from a file) replace the first random
// members of the initial population.
template <class Problem>
GaResult<typename Problem::Genotype> run_ga(
    const Problem& problem, const GaConfig& cfg,
    const std::vector<typename Problem::Genotype>& seeds = {}) {
  using Genotype = typename Problem::Genotype;
  if (cfg.population < 2 || cfg.population % 2 != 0) {
    throw InvalidInstanceError("population size must be even and at least 2");
  }
  if (cfg.pc < 0 || cfg.pc > 1 || cfg.pm < 0 || cfg.pm > 1) {
    throw InvalidInstanceError("probabilities must lie in [0,1]");
  }
  if (cfg.generations < 0) throw InvalidInstanceError("negative generation budget");

  const Sense sense = problem.sense();
  auto better = [&](const Rational& a, const Rational& b) {
    return sense == Sense::Max ? b < a : a < b;
  };

  Rng setup = Rng::derive(cfg.seed, 0);
  std::vector<Genotype> pop;
  std::vector<Rational> values;
  pop.reserve(cfg.population);
  for (int i = 0; i < cfg.population; ++i) {
    Genotype g;
    if (i < static_cast<int>(seeds.size())) {
      g = seeds[i];
      if (!problem.feasible(g)) throw InfeasibleParentError("seed genotype is infeasible");
    } else {
      g = problem.random_feasible(setup);
      if (!problem.feasible(g)) throw Error("internal: infeasible initial genotype");
    }
    values.push_back(problem.evaluate(g));
    pop.push_back(std::move(g));
  }

  int best_index = 0;
  for (int i = 1; i < cfg.population; ++i) {
    if (better(values[i], values[best_index])) best_index = i;
  }
  Genotype best_ever = pop[best_index];
  Rational best_value = values[best_index];

  std::vector<HistoryRow> history;
  auto record = [&](int gen) {
    Rational sum;
    int bi = 0;
    for (int i = 0; i < cfg.population; ++i) {
      sum += values[i];
      if (better(values[i], values[bi])) bi = i;
    }
    history.push_back({gen, values[bi], sum / Rational(cfg.population)});
  };
  record(0);

  for (int gen = 1; gen <= cfg.generations; ++gen) {
    std::vector<Genotype> next_pop;
    std::vector<Rational> next_values;
    next_pop.reserve(cfg.population);
    int pop_best = 0;
    for (int i = 1; i < cfg.population; ++i) {
      if (better(values[i], values[pop_best])) pop_best = i;
    }
    for (int pair = 0; pair < cfg.population / 2; ++pair) {
      Rng rng = Rng::derive(cfg.seed, static_cast<std::uint64_t>(gen),
                            static_cast<std::uint64_t>(pair) + 1);
      int ia = pair == 0 ? pop_best : select_index(values, sense, rng);
      int ib = select_index(values, sense, rng);
      auto [child1, child2] = orp_crossover(problem, pop[ia], pop[ib], cfg.pc, rng);
      child1 = problem.mutate(child1, cfg.pm, rng);
      child2 = problem.mutate(child2, cfg.pm, rng);
      for (Genotype* child : {&child1, &child2}) {
        if (!problem.feasible(*child)) throw Error("internal: infeasible offspring");
        Rational v = problem.evaluate(*child);
        if (better(v, best_value)) {
          best_value = v;
          best_ever = *child;
        }
        next_values.push_back(std::move(v));
        next_pop.push_back(std::move(*child));
      }
    }
    pop = std::move(next_pop);
    values = std::move(next_values);
    record(gen);
  }

  return {std::move(best_ever), std::move(best_value), std::move(history)};
}

// ---- problem adapters -----------------------------------------------------

struct CliqueProblem {
  using Genotype = BinaryVector;
  const graph::WeightedGraph& g;

  Sense sense() const { return Sense::Max; }
  Genotype random_feasible(Rng& rng) const;
  bool feasible(const Genotype& x) const { return graph::is_clique(g, x); }
  Rational evaluate(const Genotype& x) const { return graph::selected_weight(g, x); }
  Genotype orp_best(const Genotype& a, const Genotype& b) const {
    return graph::clique_orp(g, a, b);
  }
  Genotype mutate(const Genotype& x, double pm, Rng& rng) const;
};

struct IndependentSetProblem {
  using Genotype = BinaryVector;
  const graph::WeightedGraph& g;

  Sense sense() const { return Sense::Max; }
  Genotype random_feasible(Rng& rng) const;
  bool feasible(const Genotype& x) const { return graph::is_independent_set(g, x); }
  Rational evaluate(const Genotype& x) const { return graph::selected_weight(g, x); }
  Genotype orp_best(const Genotype& a, const Genotype& b) const {
    return graph::independent_set_orp(g, a, b);
  }
  Genotype mutate(const Genotype& x, double pm, Rng& rng) const;
};

struct VertexCoverProblem {
  using Genotype = BinaryVector;
  const graph::WeightedGraph& g;

  Sense sense() const { return Sense::Min; }
  Genotype random_feasible(Rng& rng) const;
  bool feasible(const Genotype& x) const { return graph::is_vertex_cover(g, x); }
  Rational evaluate(const Genotype& x) const { return graph::selected_weight(g, x); }
  Genotype orp_best(const Genotype& a, const Genotype& b) const {
    return graph::vertex_cover_orp(g, a, b);
  }
  Genotype mutate(const Genotype& x, double pm, Rng& rng) const;
};

struct PackingProblem {
  using Genotype = BinaryVector;
  const blp::SetSystemInstance& inst;

  Sense sense() const { return Sense::Max; }
  Genotype random_feasible(Rng& rng) const;
  bool feasible(const Genotype& x) const { return blp::set_system_feasible(inst, x); }
  Rational evaluate(const Genotype& x) const { return blp::set_system_value(inst, x); }
  Genotype orp_best(const Genotype& a, const Genotype& b) const {
    return blp::set_packing_orp(inst, a, b);
  }
  Genotype mutate(const Genotype& x, double pm, Rng& rng) const;
};

struct PartitionProblem {
  using Genotype = BinaryVector;
  const blp::SetSystemInstance& inst;
  int init_attempts = 200;

  Sense sense() const { return Sense::Min; }
  Genotype random_feasible(Rng& rng) const;
  bool feasible(const Genotype& x) const { return blp::set_system_feasible(inst, x); }
  Rational evaluate(const Genotype& x) const { return blp::set_system_value(inst, x); }
  Genotype orp_best(const Genotype& a, const Genotype& b) const {
    return blp::set_partition_orp(inst, a, b);
  }
  Genotype mutate(const Genotype& x, double pm, Rng& rng) const;
};

struct SplpProblem {
  using Genotype = BinaryVector;  // flat (Y, u) encoding
  const blp::SplpInstance& inst;

  Sense sense() const { return Sense::Min; }
  Genotype random_feasible(Rng& rng) const;
  bool feasible(const Genotype& x) const {
    return blp::splp_feasible(inst, blp::splp_decode(inst, x));
  }
  Rational evaluate(const Genotype& x) const {
    return blp::splp_value(inst, blp::splp_decode(inst, x));
  }
  Genotype orp_best(const Genotype& a, const Genotype& b) const {
    return blp::splp_encode(
        inst, blp::splp_orp(inst, blp::splp_decode(inst, a), blp::splp_decode(inst, b)));
  }
  Genotype mutate(const Genotype& x, double pm, Rng& rng) const;
};

struct TspProblem {
  using Genotype = tsp::Tour;
  const tsp::TspInstance& inst;
  int workers = 1;

  Sense sense() const { return Sense::Min; }
  Genotype random_feasible(Rng& rng) const;
  bool feasible(const Genotype& x) const { return tsp::is_hamiltonian_tour(x); }
  Rational evaluate(const Genotype& x) const { return tsp::tour_length(inst, x); }
  Genotype orp_best(const Genotype& a, const Genotype& b) const {
    return inst.symmetric ? tsp::tsp_orp_symmetric(inst, a, b, workers).tour
                          : tsp::tsp_orp_general(inst, a, b, workers).tour;
  }
  Genotype mutate(const Genotype& x, double pm, Rng& rng) const;
};

struct SchedProblem {
  using Genotype = sched::JobPermutation;
  const sched::SetupInstance& inst;
  int max_q = 25;

  Sense sense() const { return Sense::Min; }
  Genotype random_feasible(Rng& rng) const { return rng.permutation(inst.k); }
  bool feasible(const Genotype& x) const { return sched::is_permutation(x, inst.k); }
  Rational evaluate(const Genotype& x) const { return sched::setup_cost(inst, x); }
  Genotype orp_best(const Genotype& a, const Genotype& b) const {
    sched::MakespanOptions opts;
    opts.max_q = max_q;
    return sched::solve_makespan_orp(inst, a, b, opts).perm;
  }
  Genotype mutate(const Genotype& x, double pm, Rng& rng) const;
};

}  // namespace orp::ga
