#include "orp/sched_orp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "orp/errors.hpp"
#include "orp/rng.hpp"

namespace orp::sched {

SetupInstance SetupInstance::create(std::vector<Rational> proc_time,
                                    std::vector<std::vector<Rational>> setup) {
  SetupInstance inst;
  inst.k = static_cast<int>(proc_time.size());
  if (inst.k < 1) throw InvalidInstanceError("scheduling instance needs at least one job");
  if (setup.size() != proc_time.size()) throw DimensionError("setup matrix size != job count");
  for (int v = 0; v < inst.k; ++v) {
    if (proc_time[v].sign() <= 0) {
      throw InvalidInstanceError("job " + std::to_string(v + 1) + " has non-positive processing time");
    }
    if (static_cast<int>(setup[v].size()) != inst.k) {
      throw DimensionError("setup row " + std::to_string(v + 1) + " has wrong length");
    }
    for (int u = 0; u < inst.k; ++u) {
      if (u != v && setup[v][u].sign() < 0) {
        throw InvalidInstanceError("negative setup time");
      }
    }
  }
  inst.proc_time = std::move(proc_time);
  inst.setup = std::move(setup);
  return inst;
}

Rational SetupInstance::total_processing() const {
  Rational t;
  for (const Rational& p : proc_time) t += p;
  return t;
}

bool is_permutation(const JobPermutation& p, int k) {
  if (static_cast<int>(p.size()) != k) return false;
  std::vector<char> seen(k, 0);
  for (int v : p) {
    if (v < 0 || v >= k || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Rational setup_cost(const SetupInstance& inst, const JobPermutation& p) {
  if (!is_permutation(p, inst.k)) throw InvalidInstanceError("not a permutation of the job set");
  Rational s;
  for (int i = 0; i + 1 < inst.k; ++i) s += inst.setup[p[i]][p[i + 1]];
  return s;
}

namespace {

// Blocks are the cycles of the non-special subgraph: walk position -> job
// (via matching 0) -> the other position requiring that job -> ...
RequisitionGraph assemble(int k, std::vector<std::array<int, 2>> candidate) {
  RequisitionGraph g;
  g.k = k;
  g.candidate = std::move(candidate);
  g.special.assign(k, 0);
  g.block_of.assign(k, -1);

  // job -> positions whose requisition contains it, with the slot it fills
  std::vector<std::vector<std::pair<int, int>>> job_positions(k);
  for (int i = 0; i < k; ++i) {
    if (g.candidate[i][0] == g.candidate[i][1]) {
      g.special[i] = 1;
      job_positions[g.candidate[i][0]].emplace_back(i, -1);
    } else {
      job_positions[g.candidate[i][0]].emplace_back(i, 0);
      job_positions[g.candidate[i][1]].emplace_back(i, 1);
    }
  }
  for (int x = 0; x < k; ++x) {
    const auto& ps = job_positions[x];
    if (ps.empty() || ps.size() > 2) {
      throw InvalidInstanceError("job " + std::to_string(x + 1) + " appears in " +
                                 std::to_string(ps.size()) + " requisitions");
    }
    bool has_special = std::any_of(ps.begin(), ps.end(),
                                   [](const auto& p) { return p.second == -1; });
    if (has_special && ps.size() != 1) {
      throw InvalidInstanceError("job " + std::to_string(x + 1) +
                                 " mixes singleton and two-element requisitions");
    }
    if (!has_special && ps.size() != 2) {
      throw InvalidInstanceError("job " + std::to_string(x + 1) +
                                 " must appear in exactly two two-element requisitions");
    }
  }

  std::vector<char> visited(k, 0);
  for (int start = 0; start < k; ++start) {
    if (g.special[start] || visited[start]) continue;
    int block_id = static_cast<int>(g.blocks.size());
    g.blocks.emplace_back();
    int pos = start;
    int slot = 0;  // the matching-0 job of `pos` continues the walk
    while (!visited[pos]) {
      visited[pos] = 1;
      g.block_of[pos] = block_id;
      g.blocks[block_id].push_back(pos);
      int job = g.candidate[pos][slot];
      const auto& ps = job_positions[job];
      auto other = ps[0].first == pos ? ps[1] : ps[0];
      // the next position must pick this job under the opposite matching,
      // so its matching-0 job is its other candidate
      int next_pos = other.first;
      int used_slot = other.second;
      if (used_slot == 0) {
        // swap the candidates of next_pos so that matching 0 stays the
        // alternating one along the cycle
        std::swap(g.candidate[next_pos][0], g.candidate[next_pos][1]);
        for (auto& entry : job_positions[g.candidate[next_pos][0]]) {
          if (entry.first == next_pos) entry.second = 0;
        }
        for (auto& entry : job_positions[g.candidate[next_pos][1]]) {
          if (entry.first == next_pos) entry.second = 1;
        }
      }
      pos = next_pos;
      slot = 0;
    }
    std::sort(g.blocks[block_id].begin(), g.blocks[block_id].end());
  }
  return g;
}

}  // namespace

RequisitionGraph build_requisition_graph(const JobPermutation& p1, const JobPermutation& p2) {
  const int k = static_cast<int>(p1.size());
  if (p2.size() != p1.size()) throw DimensionError("parent permutations differ in length");
  if (!is_permutation(p1, k)) throw InvalidInstanceError("parent 1 is not a permutation");
  if (!is_permutation(p2, k)) throw InvalidInstanceError("parent 2 is not a permutation");
  std::vector<std::array<int, 2>> candidate(k);
  for (int i = 0; i < k; ++i) candidate[i] = {p1[i], p2[i]};
  return assemble(k, std::move(candidate));
}

RequisitionGraph build_requisition_from_sets(const std::vector<std::vector<int>>& requisitions) {
  const int k = static_cast<int>(requisitions.size());
  if (k < 1) throw InvalidInstanceError("empty requisition family");
  std::vector<std::array<int, 2>> candidate(k);
  for (int i = 0; i < k; ++i) {
    const auto& r = requisitions[i];
    if (r.empty() || r.size() > 2) {
      throw InvalidInstanceError("requisition " + std::to_string(i + 1) +
                                 " must contain one or two jobs");
    }
    for (int x : r) {
      if (x < 0 || x >= k) throw InvalidInstanceError("job id out of range");
    }
    if (r.size() == 1) {
      candidate[i] = {r[0], r[0]};
    } else {
      if (r[0] == r[1]) throw InvalidInstanceError("duplicate job in requisition");
      candidate[i] = {r[0], r[1]};
    }
  }
  return assemble(k, std::move(candidate));
}

std::uint64_t count_feasible(const RequisitionGraph& g) {
  if (g.q() >= 64) throw ResourceError("feasible-set size exceeds 2^63");
  return std::uint64_t{1} << g.q();
}

ContactTables precompute_contacts(const RequisitionGraph& g, const SetupInstance& inst) {
  if (g.k != inst.k) throw DimensionError("requisition graph and instance job counts differ");
  ContactTables t;
  const int q = g.q();
  t.single.assign(q, {Rational(0), Rational(0)});
  std::vector<std::vector<std::array<Rational, 4>>> pair_acc(
      q, std::vector<std::array<Rational, 4>>());
  std::vector<std::vector<int>> pair_index(q);

  auto pair_slot = [&](int j, int jp) -> std::array<Rational, 4>& {
    auto& idx = pair_index[j];
    for (std::size_t s = 0; s < idx.size(); ++s) {
      if (idx[s] == jp) return pair_acc[j][s];
    }
    idx.push_back(jp);
    pair_acc[j].push_back({Rational(0), Rational(0), Rational(0), Rational(0)});
    return pair_acc[j].back();
  };

  for (int i = 0; i + 1 < g.k; ++i) {
    const bool s1 = g.special[i];
    const bool s2 = g.special[i + 1];
    if (s1 && s2) {
      t.base += inst.setup[g.job_at(i, 0)][g.job_at(i + 1, 0)];
    } else if (!s1 && s2) {
      int j = g.block_of[i];
      for (int a = 0; a < 2; ++a) {
        t.single[j][a] += inst.setup[g.job_at(i, a)][g.job_at(i + 1, 0)];
      }
    } else if (s1 && !s2) {
      int j = g.block_of[i + 1];
      for (int a = 0; a < 2; ++a) {
        t.single[j][a] += inst.setup[g.job_at(i, 0)][g.job_at(i + 1, a)];
      }
    } else {
      int j = g.block_of[i];
      int jp = g.block_of[i + 1];
      if (j == jp) {
        for (int a = 0; a < 2; ++a) {
          t.single[j][a] += inst.setup[g.job_at(i, a)][g.job_at(i + 1, a)];
        }
      } else {
        auto& acc = pair_slot(j, jp);
        auto& rev = pair_slot(jp, j);
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            Rational w = inst.setup[g.job_at(i, a)][g.job_at(i + 1, b)];
            acc[a * 2 + b] += w;
            rev[b * 2 + a] += w;
          }
        }
      }
    }
  }

  t.adjacent.assign(q, {});
  t.pair_cost.assign(q, {});
  for (int j = 0; j < q; ++j) {
    std::vector<int> order(pair_index[j].size());
    for (std::size_t s = 0; s < order.size(); ++s) order[s] = static_cast<int>(s);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pair_index[j][a] < pair_index[j][b]; });
    for (int s : order) {
      t.adjacent[j].push_back(pair_index[j][s]);
      t.pair_cost[j].push_back(pair_acc[j][s]);
    }
  }
  return t;
}

MakespanResult solve_makespan_orp(const SetupInstance& inst, const JobPermutation& p1,
                                  const JobPermutation& p2, const MakespanOptions& opts) {
  RequisitionGraph g = build_requisition_graph(p1, p2);
  const int q = g.q();
  if (q > opts.max_q) {
    throw ResourceError("block count " + std::to_string(q) + " exceeds the sweep guard " +
                        std::to_string(opts.max_q));
  }
  ContactTables t = precompute_contacts(g, inst);

  std::vector<std::uint8_t> delta(q, 0);
  Rational rho = t.base;
  for (int j = 0; j < q; ++j) {
    rho += t.single[j][0];
    for (std::size_t s = 0; s < t.adjacent[j].size(); ++s) {
      if (t.adjacent[j][s] > j) rho += t.pair_cost[j][s][0];
    }
  }

  std::vector<std::uint8_t> best_delta = delta;
  Rational best = rho;

  const std::uint64_t total = count_feasible(g);
  for (std::uint64_t step = 1; step < total; ++step) {
    int j = std::countr_zero(step);  // reflected Gray code flips bit ctz(step)
    int old_a = delta[j];
    int new_a = 1 - old_a;
    rho -= t.single[j][old_a];
    rho += t.single[j][new_a];
    for (std::size_t s = 0; s < t.adjacent[j].size(); ++s) {
      int jp = t.adjacent[j][s];
      rho -= t.pair_cost[j][s][old_a * 2 + delta[jp]];
      rho += t.pair_cost[j][s][new_a * 2 + delta[jp]];
    }
    delta[j] = static_cast<std::uint8_t>(new_a);
    if (opts.on_step) opts.on_step(delta, rho);
    if (rho < best || (rho == best && delta < best_delta)) {
      best = rho;
      best_delta = delta;
    }
  }

  MakespanResult result;
  result.delta = best_delta;
  result.cost = best;
  result.perm.resize(g.k);
  for (int i = 0; i < g.k; ++i) {
    int a = g.special[i] ? 0 : best_delta[g.block_of[i]];
    result.perm[i] = g.job_at(i, a);
  }
  if (setup_cost(inst, result.perm) != best) {
    throw Error("internal: incremental cost does not match the selected permutation");
  }
  return result;
}

Rational good_pair_fraction(int k, int samples, std::uint64_t seed) {
  if (k < 2) throw InvalidInstanceError("need at least two jobs");
  if (samples < 1) throw InvalidInstanceError("need at least one sample");
  const double threshold = 1.1 * std::log(static_cast<double>(k));
  Rng rng(seed);
  int good = 0;
  for (int s = 0; s < samples; ++s) {
    JobPermutation p1 = rng.permutation(k);
    JobPermutation p2 = rng.permutation(k);
    RequisitionGraph g = build_requisition_graph(p1, p2);
    if (static_cast<double>(g.q()) <= threshold) good += 1;
  }
  return Rational(good, samples);
}

}  // namespace orp::sched
