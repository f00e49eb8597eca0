#include "orp/ga.hpp"

#include <algorithm>

namespace orp::ga {

int select_index(const std::vector<Rational>& values, Sense sense, Rng& rng) {
  if (values.empty()) throw InvalidInstanceError("empty population");
  std::vector<double> fitness(values.size());
  if (sense == Sense::Max) {
    for (std::size_t i = 0; i < values.size(); ++i) fitness[i] = values[i].to_double();
    double lowest = *std::min_element(fitness.begin(), fitness.end());
    if (lowest < 0) {
      for (double& f : fitness) f -= lowest;  // keep mass nonnegative
    }
  } else {
    Rational worst = values[0];
    for (const Rational& v : values) worst = max(worst, v);
    for (std::size_t i = 0; i < values.size(); ++i) {
      fitness[i] = (worst - values[i] + Rational(1)).to_double();
    }
  }
  double total = 0;
  for (double f : fitness) total += f;
  if (total <= 0) return static_cast<int>(rng.below(values.size()));
  double r = rng.unit() * total;
  double acc = 0;
  for (std::size_t i = 0; i < fitness.size(); ++i) {
    acc += fitness[i];
    if (r < acc) return static_cast<int>(i);
  }
  return static_cast<int>(fitness.size()) - 1;
}

namespace {

// greedy maximal completion in a random vertex order
BinaryVector greedy_clique(const graph::WeightedGraph& g, Rng& rng) {
  BinaryVector x(g.n, 0);
  std::vector<int> chosen;
  for (int v : rng.permutation(g.n)) {
    bool ok = true;
    for (int u : chosen) {
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      chosen.push_back(v);
      x[v] = 1;
    }
  }
  return x;
}

BinaryVector greedy_independent_set(const graph::WeightedGraph& g, Rng& rng) {
  BinaryVector x(g.n, 0);
  std::vector<int> chosen;
  for (int v : rng.permutation(g.n)) {
    bool ok = true;
    for (int u : chosen) {
      if (g.adjacent(u, v)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      chosen.push_back(v);
      x[v] = 1;
    }
  }
  return x;
}

}  // namespace

BinaryVector CliqueProblem::random_feasible(Rng& rng) const { return greedy_clique(g, rng); }

BinaryVector CliqueProblem::mutate(const BinaryVector& x, double pm, Rng& rng) const {
  BinaryVector r = x;
  for (int v = 0; v < g.n; ++v) {
    if (!rng.chance(pm)) continue;
    if (r[v]) {
      r[v] = 0;
    } else {
      // drop members not adjacent to the newcomer
      for (int u = 0; u < g.n; ++u) {
        if (r[u] && !g.adjacent(u, v)) r[u] = 0;
      }
      r[v] = 1;
    }
  }
  return r;
}

BinaryVector IndependentSetProblem::random_feasible(Rng& rng) const {
  return greedy_independent_set(g, rng);
}

BinaryVector IndependentSetProblem::mutate(const BinaryVector& x, double pm, Rng& rng) const {
  BinaryVector r = x;
  for (int v = 0; v < g.n; ++v) {
    if (!rng.chance(pm)) continue;
    if (r[v]) {
      r[v] = 0;
    } else {
      for (int u = 0; u < g.n; ++u) {
        if (r[u] && g.adjacent(u, v)) r[u] = 0;
      }
      r[v] = 1;
    }
  }
  return r;
}

BinaryVector VertexCoverProblem::random_feasible(Rng& rng) const {
  BinaryVector is = greedy_independent_set(g, rng);
  for (std::size_t i = 0; i < is.size(); ++i) is[i] = is[i] ? 0 : 1;
  return is;
}

BinaryVector VertexCoverProblem::mutate(const BinaryVector& x, double pm, Rng& rng) const {
  BinaryVector r = x;
  for (int v = 0; v < g.n; ++v) {
    if (!rng.chance(pm)) continue;
    if (!r[v]) {
      r[v] = 1;
    } else {
      r[v] = 0;
      // removing v lets its uncovered edges be repaired by the other endpoint
      for (const auto& [a, b] : g.edges) {
        if (a == v && !r[b]) r[b] = 1;
        if (b == v && !r[a]) r[a] = 1;
      }
    }
  }
  return r;
}

BinaryVector PackingProblem::random_feasible(Rng& rng) const {
  BinaryVector x(inst.n, 0);
  std::vector<int> row_load(inst.m, 0);
  for (int j : rng.permutation(inst.n)) {
    bool ok = true;
    for (int i = 0; i < inst.m; ++i) {
      if (inst.a[i][j] && row_load[i] > 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      x[j] = 1;
      for (int i = 0; i < inst.m; ++i) row_load[i] += inst.a[i][j];
    }
  }
  return x;
}

BinaryVector PackingProblem::mutate(const BinaryVector& x, double pm, Rng& rng) const {
  BinaryVector r = x;
  for (int j = 0; j < inst.n; ++j) {
    if (!rng.chance(pm)) continue;
    if (r[j]) {
      r[j] = 0;
    } else {
      // evict conflicting columns first
      for (int i = 0; i < inst.m; ++i) {
        if (!inst.a[i][j]) continue;
        for (int k = 0; k < inst.n; ++k) {
          if (k != j && r[k] && inst.a[i][k]) r[k] = 0;
        }
      }
      r[j] = 1;
    }
  }
  return r;
}

BinaryVector PartitionProblem::random_feasible(Rng& rng) const {
  for (int attempt = 0; attempt < init_attempts; ++attempt) {
    BinaryVector x(inst.n, 0);
    std::vector<int> covered(inst.m, 0);
    int covered_count = 0;
    for (int j : rng.permutation(inst.n)) {
      bool disjoint = true;
      int adds = 0;
      for (int i = 0; i < inst.m; ++i) {
        if (inst.a[i][j]) {
          if (covered[i]) {
            disjoint = false;
            break;
          }
          adds += 1;
        }
      }
      if (!disjoint || adds == 0) continue;
      x[j] = 1;
      for (int i = 0; i < inst.m; ++i) {
        if (inst.a[i][j]) covered[i] = 1;
      }
      covered_count += adds;
    }
    if (covered_count == inst.m) return x;
  }
  throw InvalidInstanceError("could not sample a feasible partition");
}

BinaryVector PartitionProblem::mutate(const BinaryVector& x, double pm, Rng& rng) const {
  if (!rng.chance(pm)) return x;
  // remove one chosen column and greedily re-cover its rows; keep the input
  // when no exact completion shows up
  std::vector<int> chosen;
  for (int j = 0; j < inst.n; ++j) {
    if (x[j]) chosen.push_back(j);
  }
  if (chosen.empty()) return x;
  int out = chosen[rng.below(chosen.size())];
  BinaryVector r = x;
  r[out] = 0;
  std::vector<int> covered(inst.m, 0);
  for (int i = 0; i < inst.m; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      if (r[j] && inst.a[i][j]) covered[i] = 1;
    }
  }
  for (int j : rng.permutation(inst.n)) {
    if (r[j]) continue;
    bool disjoint = true;
    bool useful = false;
    for (int i = 0; i < inst.m; ++i) {
      if (inst.a[i][j]) {
        if (covered[i]) {
          disjoint = false;
          break;
        }
        useful = true;
      }
    }
    if (!disjoint || !useful) continue;
    r[j] = 1;
    for (int i = 0; i < inst.m; ++i) {
      if (inst.a[i][j]) covered[i] = 1;
    }
  }
  if (blp::set_system_feasible(inst, r)) return r;
  return x;
}

BinaryVector SplpProblem::random_feasible(Rng& rng) const {
  const int K = inst.facilities;
  const int L = inst.clients;
  blp::SplpSolution s;
  s.u.assign(K, 0);
  s.y.assign(K, std::vector<std::uint8_t>(L, 0));
  for (int k = 0; k < K; ++k) s.u[k] = rng.chance(0.5) ? 1 : 0;
  if (std::count(s.u.begin(), s.u.end(), 1) == 0) s.u[rng.below(K)] = 1;
  for (int l = 0; l < L; ++l) {
    int best = -1;
    for (int k = 0; k < K; ++k) {
      if (s.u[k] && (best < 0 || inst.serve_cost[k][l] < inst.serve_cost[best][l])) best = k;
    }
    s.y[best][l] = 1;
  }
  return blp::splp_encode(inst, s);
}

BinaryVector SplpProblem::mutate(const BinaryVector& x, double pm, Rng& rng) const {
  if (!rng.chance(pm)) return x;
  blp::SplpSolution s = blp::splp_decode(inst, x);
  const int K = inst.facilities;
  int k = static_cast<int>(rng.below(K));
  if (s.u[k] && std::count(s.u.begin(), s.u.end(), 1) > 1) {
    s.u[k] = 0;
  } else {
    s.u[k] = 1;
  }
  for (int l = 0; l < inst.clients; ++l) {
    int best = -1;
    for (int f = 0; f < K; ++f) {
      s.y[f][l] = 0;
      if (s.u[f] && (best < 0 || inst.serve_cost[f][l] < inst.serve_cost[best][l])) best = f;
    }
    s.y[best][l] = 1;
  }
  return blp::splp_encode(inst, s);
}

tsp::Tour TspProblem::random_feasible(Rng& rng) const {
  return tsp::tour_from_sequence(rng.permutation(inst.n));
}

tsp::Tour TspProblem::mutate(const tsp::Tour& x, double pm, Rng& rng) const {
  if (!rng.chance(pm) || inst.n < 4) return x;
  // reverse a random segment (2-exchange); every permutation is a valid tour
  // on the complete (di)graph
  std::vector<int> seq = tsp::tour_sequence(x, 0);
  std::size_t i = 1 + rng.below(seq.size() - 2);
  std::size_t j = 1 + rng.below(seq.size() - 2);
  if (i > j) std::swap(i, j);
  std::reverse(seq.begin() + i, seq.begin() + j + 1);
  return tsp::tour_from_sequence(seq);
}

sched::JobPermutation SchedProblem::mutate(const sched::JobPermutation& x, double pm,
                                           Rng& rng) const {
  if (!rng.chance(pm) || inst.k < 2) return x;
  sched::JobPermutation r = x;
  std::size_t i = rng.below(r.size());
  std::size_t j = rng.below(r.size());
  std::swap(r[i], r[j]);
  return r;
}

}  // namespace orp::ga
