#include "orp/oracle.hpp"

#include <algorithm>
#include <set>

#include "orp/errors.hpp"

namespace orp::oracle {

OracleReport<BinaryVector> brute_force_binary_orp(const BinaryEvaluator& evaluate, Sense sense,
                                                  const BinaryVector& p1, const BinaryVector& p2,
                                                  int max_free) {
  std::vector<int> diff = difference_set(p1, p2);
  const int d = static_cast<int>(diff.size());
  if (d > max_free) {
    throw ResourceError("free set of size " + std::to_string(d) + " exceeds oracle guard " +
                        std::to_string(max_free));
  }

  OracleReport<BinaryVector> report;
  bool have = false;
  BinaryVector x = p1;
  const std::uint64_t total = std::uint64_t{1} << d;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int t = 0; t < d; ++t) {
      x[diff[t]] = (mask >> t) & 1 ? p2[diff[t]] : p1[diff[t]];
    }
    auto [feasible, value] = evaluate(x);
    // parents are feasible by contract even if the evaluator disagrees
    bool is_parent = mask == 0 || mask + 1 == total;
    if (!feasible && !is_parent) continue;
    report.examined += 1;
    bool better = !have || (sense == Sense::Max ? report.value < value : value < report.value);
    if (better) {
      report.value = value;
      report.witness = x;
      have = true;
    }
  }
  return report;
}

OracleReport<tsp::Tour> brute_force_tour_orp(const tsp::TspInstance& inst, const tsp::Tour& t1,
                                             const tsp::Tour& t2, int max_n) {
  const int n = inst.n;
  if (t1.n() != n || t2.n() != n) throw DimensionError("tour size != instance size");
  if (!tsp::is_hamiltonian_tour(t1) || !tsp::is_hamiltonian_tour(t2)) {
    throw InvalidInstanceError("parent is not a hamiltonian circuit");
  }
  if (n > max_n) {
    throw ResourceError("instance size " + std::to_string(n) + " exceeds oracle guard " +
                        std::to_string(max_n));
  }

  OracleReport<tsp::Tour> report;
  bool have = false;

  auto edge_collect = [](const tsp::Tour& t) {
    std::set<std::pair<int, int>> e;
    for (int v = 0; v < t.n(); ++v) {
      e.emplace(std::min(v, t.next[v]), std::max(v, t.next[v]));
    }
    return e;
  };
  const std::set<std::pair<int, int>> e1 = edge_collect(t1);
  const std::set<std::pair<int, int>> e2 = edge_collect(t2);

  auto consider = [&](const tsp::Tour& cand) {
    if (inst.symmetric) {
      auto ec = edge_collect(cand);
      for (const auto& e : ec) {
        if (!e1.count(e) && !e2.count(e)) return;
      }
      for (const auto& e : e1) {
        if (e2.count(e) && !ec.count(e)) return;
      }
    } else {
      for (int v = 0; v < n; ++v) {
        if (cand.next[v] != t1.next[v] && cand.next[v] != t2.next[v]) return;
        if (t1.next[v] == t2.next[v] && cand.next[v] != t1.next[v]) return;
      }
    }
    Rational len = tsp::tour_length(inst, cand);
    report.examined += 1;
    if (!have || len < report.value) {
      report.value = len;
      report.witness = cand;
      have = true;
    }
  };

  std::vector<int> rest(n - 1);
  for (int i = 1; i < n; ++i) rest[i - 1] = i;
  std::vector<int> seq(n);
  seq[0] = 0;
  do {
    std::copy(rest.begin(), rest.end(), seq.begin() + 1);
    consider(tsp::tour_from_sequence(seq));
  } while (std::next_permutation(rest.begin(), rest.end()));

  if (!have) throw Error("internal: tour oracle found no feasible circuit");
  return report;
}

OracleReport<sched::JobPermutation> brute_force_requisition_orp(const sched::SetupInstance& inst,
                                                                const sched::JobPermutation& p1,
                                                                const sched::JobPermutation& p2,
                                                                int max_k) {
  const int k = inst.k;
  if (static_cast<int>(p1.size()) != k || static_cast<int>(p2.size()) != k) {
    throw DimensionError("parent permutation size != job count");
  }
  if (!sched::is_permutation(p1, k) || !sched::is_permutation(p2, k)) {
    throw InvalidInstanceError("parent is not a permutation");
  }
  if (k > max_k) {
    throw ResourceError("job count " + std::to_string(k) + " exceeds oracle guard " +
                        std::to_string(max_k));
  }

  std::vector<int> free_pos;
  for (int i = 0; i < k; ++i) {
    if (p1[i] != p2[i]) free_pos.push_back(i);
  }
  const int d = static_cast<int>(free_pos.size());

  OracleReport<sched::JobPermutation> report;
  bool have = false;
  sched::JobPermutation perm = p1;
  std::vector<int> used(k, 0);
  const std::uint64_t total = std::uint64_t{1} << d;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int t = 0; t < d; ++t) {
      perm[free_pos[t]] = (mask >> t) & 1 ? p2[free_pos[t]] : p1[free_pos[t]];
    }
    std::fill(used.begin(), used.end(), 0);
    bool bijective = true;
    for (int v : perm) {
      if (used[v]) {
        bijective = false;
        break;
      }
      used[v] = 1;
    }
    if (!bijective) continue;
    report.examined += 1;
    Rational cost = sched::setup_cost(inst, perm);
    if (!have || cost < report.value) {
      report.value = cost;
      report.witness = perm;
      have = true;
    }
  }
  return report;
}

}  // namespace orp::oracle
