#include "orp/blp_orp.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "orp/flows.hpp"
#include "orp/graph_orp.hpp"

namespace orp::blp {

bool hypergraph_set_independent(const WeightedHypergraph& h, const std::vector<char>& selected) {
  for (const auto& e : h.edges) {
    bool inside = true;
    for (int v : e) {
      if (!selected[v]) {
        inside = false;
        break;
      }
    }
    if (inside && !e.empty()) return false;
  }
  return true;
}

OrpHypergraph build_orp_hypergraph(const BlpInstance& blp, const BinaryVector& p1,
                                   const BinaryVector& p2, const OrpHypergraphOptions& opts) {
  if (static_cast<int>(p1.size()) != blp.n || static_cast<int>(p2.size()) != blp.n) {
    throw DimensionError("parent length != variable count");
  }
  if (opts.validate_parents) {
    if (!evaluate_blp(blp, p1).first) throw InfeasibleParentError("parent 1 is infeasible");
    if (!evaluate_blp(blp, p2).first) throw InfeasibleParentError("parent 2 is infeasible");
  }

  OrpHypergraph h;
  h.p1 = p1;
  h.sense = blp.sense;
  h.dvars = difference_set(p1, p2);
  const int d = h.d();

  std::vector<int> pair_of(blp.n, -1);
  for (int t = 0; t < d; ++t) pair_of[h.dvars[t]] = t;

  // objective seen as maximization
  std::vector<Rational> adj_c(d);
  Rational abs_sum;
  for (int t = 0; t < d; ++t) {
    adj_c[t] = blp.sense == Sense::Max ? blp.c[h.dvars[t]] : -blp.c[h.dvars[t]];
    abs_sum += abs(adj_c[t]);
  }
  h.lambda = abs_sum * Rational(2) + Rational(1);

  h.base.n = 2 * d;
  h.base.weight.resize(2 * d);
  for (int t = 0; t < d; ++t) {
    h.base.weight[OrpHypergraph::one_vertex(t)] = adj_c[t] + h.lambda;
    h.base.weight[OrpHypergraph::zero_vertex(t)] = h.lambda;
  }

  for (int t = 0; t < d; ++t) {
    h.base.edges.push_back({OrpHypergraph::one_vertex(t), OrpHypergraph::zero_vertex(t)});
  }

  BlpInstance norm = normalize_to_le(blp);
  std::set<std::vector<int>> dedup;
  for (int i = 0; i < norm.m(); ++i) {
    const BlpRow& row = norm.rows[i];
    std::vector<int> free_pairs;
    Rational fixed;
    for (int j : norm.support[i]) {
      if (pair_of[j] >= 0) {
        free_pairs.push_back(pair_of[j]);
      } else if (p1[j]) {
        fixed += row.coeffs[j];
      }
    }
    if (free_pairs.empty()) {
      if (fixed > row.rhs) {
        throw InfeasibleParentError("row " + std::to_string(i + 1) +
                                    " is violated by the shared fixed genes");
      }
      continue;
    }
    if (free_pairs.size() >= 63 ||
        (std::uint64_t{1} << free_pairs.size()) > opts.max_row_combinations) {
      throw ResourceError("row " + std::to_string(i + 1) + " needs 2^" +
                          std::to_string(free_pairs.size()) + " combinations");
    }
    const std::uint64_t combos = std::uint64_t{1} << free_pairs.size();
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
      Rational lhs = fixed;
      for (std::size_t s = 0; s < free_pairs.size(); ++s) {
        if ((mask >> s) & 1) lhs += row.coeffs[h.dvars[free_pairs[s]]];
      }
      if (lhs > row.rhs) {
        std::vector<int> edge;
        edge.reserve(free_pairs.size());
        for (std::size_t s = 0; s < free_pairs.size(); ++s) {
          int t = free_pairs[s];
          edge.push_back((mask >> s) & 1 ? OrpHypergraph::one_vertex(t)
                                         : OrpHypergraph::zero_vertex(t));
        }
        std::sort(edge.begin(), edge.end());
        dedup.insert(std::move(edge));
      }
    }
  }
  for (const auto& e : dedup) h.base.edges.push_back(e);

  // a singleton edge bans its vertex outright
  h.excluded.assign(2 * d, 0);
  for (const auto& e : h.base.edges) {
    if (e.size() == 1) h.excluded[e[0]] = 1;
  }
  for (const auto& e : h.base.edges) {
    if (e.size() < 2) continue;
    bool dropped = false;
    for (int v : e) {
      if (h.excluded[v]) {
        dropped = true;
        break;
      }
    }
    if (!dropped) h.active_edges.push_back(e);
  }

  std::vector<int> c1, c2;  // parent images: S(p1), S(p2)
  for (int t = 0; t < d; ++t) {
    int j = h.dvars[t];
    c1.push_back(p1[j] ? OrpHypergraph::one_vertex(t) : OrpHypergraph::zero_vertex(t));
    c2.push_back(p2[j] ? OrpHypergraph::one_vertex(t) : OrpHypergraph::zero_vertex(t));
  }
  h.base.coloring = std::make_pair(std::move(c1), std::move(c2));
  return h;
}

BinaryVector hypergraph_selection_to_vector(const OrpHypergraph& h,
                                            const std::vector<std::uint8_t>& take_one) {
  if (static_cast<int>(take_one.size()) != h.d()) throw DimensionError("selection length != d");
  BinaryVector x = h.p1;
  for (int t = 0; t < h.d(); ++t) x[h.dvars[t]] = take_one[t];
  return x;
}

namespace {

// Branch and bound maximizing the selected weight over one-vertex-per-pair
// independent sets of the active hypergraph.
struct PairSearch {
  const OrpHypergraph& h;
  int d;
  // per pair: -1 undecided, 0 zero-side, 1 one-side
  std::vector<int> choice;
  std::vector<char> forced;  // pair has only one admissible side

  struct Literal {
    int pair;
    std::uint8_t side;
  };
  std::vector<std::vector<Literal>> edge_lits;
  std::vector<std::vector<int>> touching;  // pair -> edge ids
  std::vector<int> remaining;              // per edge, unassigned literals
  std::vector<char> dead;                  // per edge, already unsatisfiable

  std::vector<int> order;  // branching order over free pairs
  std::vector<Rational> suffix_max;

  Rational best;
  std::vector<std::uint8_t> best_choice;
  bool have_best = false;

  explicit PairSearch(const OrpHypergraph& hg) : h(hg), d(hg.d()) {
    choice.assign(d, -1);
    forced.assign(d, 0);
    touching.assign(d, {});
    for (const auto& e : h.active_edges) {
      std::vector<Literal> lits;
      bool both_sides = false;
      for (int v : e) {
        int pair = v / 2;
        for (const auto& l : lits) {
          if (l.pair == pair) both_sides = true;
        }
        lits.push_back({pair, static_cast<std::uint8_t>(v % 2 == 0 ? 1 : 0)});
      }
      // an edge holding both sides of a pair (the pairing edges) can never be
      // fully selected when exactly one side per pair is chosen
      if (both_sides) continue;
      int id = static_cast<int>(edge_lits.size());
      for (const auto& l : lits) touching[l.pair].push_back(id);
      edge_lits.push_back(std::move(lits));
      remaining.push_back(static_cast<int>(edge_lits.back().size()));
      dead.push_back(0);
    }
  }

  Rational side_weight(int t, int side) const {
    return h.base.weight[side ? OrpHypergraph::one_vertex(t) : OrpHypergraph::zero_vertex(t)];
  }

  // true if the assignment stays consistent
  bool assign(int t, int side, std::vector<std::pair<int, bool>>& log) {
    choice[t] = side;
    for (int e : touching[t]) {
      if (dead[e]) continue;
      bool matches = false;
      for (const auto& l : edge_lits[e]) {
        if (l.pair == t) {
          matches = l.side == static_cast<std::uint8_t>(side);
          break;
        }
      }
      if (matches) {
        remaining[e] -= 1;
        log.emplace_back(e, false);
        if (remaining[e] == 0) return false;  // edge fully selected
      } else {
        dead[e] = 1;
        log.emplace_back(e, true);
      }
    }
    return true;
  }

  void undo(int t, const std::vector<std::pair<int, bool>>& log) {
    choice[t] = -1;
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
      if (it->second) {
        dead[it->first] = 0;
      } else {
        remaining[it->first] += 1;
      }
    }
  }

  void consider_current() {
    Rational w;
    std::vector<std::uint8_t> sel(d);
    for (int t = 0; t < d; ++t) {
      sel[t] = static_cast<std::uint8_t>(choice[t]);
      w += side_weight(t, choice[t]);
    }
    if (!have_best || best < w) {
      best = w;
      best_choice = std::move(sel);
      have_best = true;
    }
  }

  void dfs(std::size_t depth, const Rational& current) {
    if (depth == order.size()) {
      consider_current();
      return;
    }
    if (have_best && !(best < current + suffix_max[depth])) return;
    int t = order[depth];
    int first = side_weight(t, 1) >= side_weight(t, 0) ? 1 : 0;
    for (int side : {first, 1 - first}) {
      std::vector<std::pair<int, bool>> log;
      if (assign(t, side, log)) {
        dfs(depth + 1, current + side_weight(t, side));
      }
      undo(t, log);
    }
  }

  std::vector<std::uint8_t> run() {
    // pairs with an excluded side are fixed up front
    std::vector<std::pair<int, bool>> base_log;
    Rational fixed_weight;
    for (int t = 0; t < d; ++t) {
      bool one_out = h.excluded[OrpHypergraph::one_vertex(t)];
      bool zero_out = h.excluded[OrpHypergraph::zero_vertex(t)];
      if (one_out && zero_out) {
        throw InfeasibleParentError("variable " + std::to_string(h.dvars[t] + 1) +
                                    " admits neither value");
      }
      if (one_out || zero_out) {
        forced[t] = 1;
        int side = one_out ? 0 : 1;
        if (!assign(t, side, base_log)) {
          throw Error("internal: forced assignment violates an edge");
        }
        fixed_weight += side_weight(t, side);
      }
    }

    for (int t = 0; t < d; ++t) {
      if (!forced[t]) order.push_back(t);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (touching[a].size() != touching[b].size()) {
        return touching[a].size() < touching[b].size();
      }
      return a < b;
    });
    suffix_max.assign(order.size() + 1, Rational(0));
    for (std::size_t i = order.size(); i > 0; --i) {
      int t = order[i - 1];
      suffix_max[i - 1] = suffix_max[i] + max(side_weight(t, 0), side_weight(t, 1));
    }

    dfs(0, fixed_weight);
    if (!have_best) throw Error("internal: exact search found no assignment");
    return best_choice;
  }
};

void validate_blp_parents(const BlpInstance& blp, const BinaryVector& p1,
                          const BinaryVector& p2) {
  if (static_cast<int>(p1.size()) != blp.n || static_cast<int>(p2.size()) != blp.n) {
    throw DimensionError("parent length != variable count");
  }
  if (!evaluate_blp(blp, p1).first) throw InfeasibleParentError("parent 1 is infeasible");
  if (!evaluate_blp(blp, p2).first) throw InfeasibleParentError("parent 2 is infeasible");
}

}  // namespace

BinaryVector solve_two_var_orp(const BlpInstance& blp, const BinaryVector& p1,
                               const BinaryVector& p2) {
  if (blp.n_max > 2) {
    throw SolverMismatchError("instance has a row with more than two variables; use the exact solver");
  }
  validate_blp_parents(blp, p1, p2);
  if (p1 == p2) return p1;

  OrpHypergraphOptions opts;
  opts.validate_parents = false;
  OrpHypergraph h = build_orp_hypergraph(blp, p1, p2, opts);
  const int d = h.d();

  // the pruned hypergraph is an ordinary graph, bipartite across the parent
  // images
  std::vector<int> side(2 * d, -1);  // 0 = left (parent 1 image), 1 = right
  const auto& [c1, c2] = *h.base.coloring;
  for (int v : c1) side[v] = 0;
  for (int v : c2) side[v] = 1;

  std::vector<int> slot(2 * d, -1);
  BipartiteGraph bg;
  std::vector<int> left_vertex, right_vertex;
  for (int v = 0; v < 2 * d; ++v) {
    if (h.excluded[v]) continue;
    if (side[v] == 0) {
      slot[v] = static_cast<int>(bg.left_weight.size());
      bg.left_weight.push_back(h.base.weight[v]);
      left_vertex.push_back(v);
    } else {
      slot[v] = static_cast<int>(bg.right_weight.size());
      bg.right_weight.push_back(h.base.weight[v]);
      right_vertex.push_back(v);
    }
  }
  for (const auto& e : h.active_edges) {
    if (e.size() != 2) throw Error("internal: non-binary edge with n_max <= 2");
    int a = e[0];
    int b = e[1];
    if (side[a] == side[b]) throw Error("internal: edge inside one color class");
    if (side[a] != 0) std::swap(a, b);
    bg.edges.emplace_back(slot[a], slot[b]);
  }

  VertexSelection sel = bipartite_max_weight_independent_set(bg);

  std::vector<std::uint8_t> take_one(d, 0);
  for (int t = 0; t < d; ++t) {
    int one = OrpHypergraph::one_vertex(t);
    int zero = OrpHypergraph::zero_vertex(t);
    bool one_sel = !h.excluded[one] &&
                   (side[one] == 0 ? sel.left[slot[one]] : sel.right[slot[one]]);
    bool zero_sel = !h.excluded[zero] &&
                    (side[zero] == 0 ? sel.left[slot[zero]] : sel.right[slot[zero]]);
    if (one_sel == zero_sel) {
      throw Error("internal: independent set did not pick exactly one side of a pair");
    }
    take_one[t] = one_sel ? 1 : 0;
  }
  BinaryVector x = hypergraph_selection_to_vector(h, take_one);
  if (!evaluate_blp(blp, x).first) throw Error("internal: two-var ORP result infeasible");
  return x;
}

BinaryVector solve_blp_orp_exact(const BlpInstance& blp, const BinaryVector& p1,
                                 const BinaryVector& p2, const ExactOptions& opts) {
  validate_blp_parents(blp, p1, p2);
  if (p1 == p2) return p1;
  std::vector<int> diff = difference_set(p1, p2);
  if (static_cast<int>(diff.size()) > opts.max_free) {
    throw ResourceError("free set of size " + std::to_string(diff.size()) +
                        " exceeds the exact-solver guard " + std::to_string(opts.max_free));
  }
  OrpHypergraphOptions hopts;
  hopts.validate_parents = false;
  hopts.max_row_combinations = opts.max_row_combinations;
  OrpHypergraph h = build_orp_hypergraph(blp, p1, p2, hopts);

  PairSearch search(h);
  std::vector<std::uint8_t> take_one = search.run();
  BinaryVector x = hypergraph_selection_to_vector(h, take_one);
  if (!evaluate_blp(blp, x).first) throw Error("internal: exact ORP result infeasible");
  return x;
}

SetSystemInstance SetSystemInstance::create(SetKind kind, std::vector<Rational> cost,
                                            std::vector<std::vector<std::uint8_t>> a) {
  SetSystemInstance inst;
  inst.kind = kind;
  inst.n = static_cast<int>(cost.size());
  inst.m = static_cast<int>(a.size());
  if (inst.n < 1) throw InvalidInstanceError("set system needs at least one column");
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != inst.n) throw DimensionError("set-system row length != n");
    for (auto v : row) {
      if (v > 1) throw InvalidInstanceError("set-system entries must be 0/1");
    }
  }
  inst.cost = std::move(cost);
  inst.a = std::move(a);
  return inst;
}

Sense set_system_sense(SetKind kind) {
  return kind == SetKind::Packing ? Sense::Max : Sense::Min;
}

bool set_system_feasible(const SetSystemInstance& inst, const BinaryVector& x) {
  if (static_cast<int>(x.size()) != inst.n) throw DimensionError("vector length != column count");
  for (int i = 0; i < inst.m; ++i) {
    int sum = 0;
    for (int j = 0; j < inst.n; ++j) sum += inst.a[i][j] && x[j] ? 1 : 0;
    switch (inst.kind) {
      case SetKind::Packing:
        if (sum > 1) return false;
        break;
      case SetKind::Partition:
        if (sum != 1) return false;
        break;
      case SetKind::Covering:
        if (sum < 1) return false;
        break;
    }
  }
  return true;
}

Rational set_system_value(const SetSystemInstance& inst, const BinaryVector& x) {
  Rational v;
  for (int j = 0; j < inst.n; ++j) {
    if (x[j]) v += inst.cost[j];
  }
  return v;
}

BlpInstance set_system_to_blp(const SetSystemInstance& inst) {
  std::vector<BlpRow> rows;
  rows.reserve(inst.m);
  Relation rel = inst.kind == SetKind::Packing
                     ? Relation::Le
                     : (inst.kind == SetKind::Partition ? Relation::Eq : Relation::Ge);
  for (int i = 0; i < inst.m; ++i) {
    BlpRow row;
    row.rel = rel;
    row.rhs = Rational(1);
    row.coeffs.reserve(inst.n);
    for (int j = 0; j < inst.n; ++j) row.coeffs.emplace_back(inst.a[i][j] ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return BlpInstance::create(set_system_sense(inst.kind), inst.cost, std::move(rows));
}

BinaryVector set_packing_orp(const SetSystemInstance& inst, const BinaryVector& p1,
                             const BinaryVector& p2) {
  if (inst.kind != SetKind::Packing) throw SolverMismatchError("instance is not a packing");
  for (const Rational& c : inst.cost) {
    if (c.sign() < 0) throw InvalidInstanceError("packing costs must be nonnegative");
  }
  if (static_cast<int>(p1.size()) != inst.n || static_cast<int>(p2.size()) != inst.n) {
    throw DimensionError("parent length != column count");
  }
  if (!set_system_feasible(inst, p1)) throw InfeasibleParentError("parent 1 is not a packing");
  if (!set_system_feasible(inst, p2)) throw InfeasibleParentError("parent 2 is not a packing");

  // conflict graph: columns adjacent iff they meet in some row
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < inst.m; ++i) {
    std::vector<int> members;
    for (int j = 0; j < inst.n; ++j) {
      if (inst.a[i][j]) members.push_back(j);
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (seen.emplace(members[a], members[b]).second) {
          edges.emplace_back(members[a], members[b]);
        }
      }
    }
  }
  graph::WeightedGraph conflict = graph::WeightedGraph::create(inst.cost, std::move(edges));
  return graph::independent_set_orp(conflict, p1, p2);
}

BinaryVector set_partition_orp(const SetSystemInstance& inst, const BinaryVector& p1,
                               const BinaryVector& p2) {
  if (inst.kind != SetKind::Partition) throw SolverMismatchError("instance is not a partition");
  if (static_cast<int>(p1.size()) != inst.n || static_cast<int>(p2.size()) != inst.n) {
    throw DimensionError("parent length != column count");
  }
  if (!set_system_feasible(inst, p1)) throw InfeasibleParentError("parent 1 is not a partition");
  if (!set_system_feasible(inst, p2)) throw InfeasibleParentError("parent 2 is not a partition");

  // columns outside every row do not interact with the constraints: pick
  // their cheapest admissible value directly and run the transform on the
  // rest
  std::vector<int> col_degree(inst.n, 0);
  for (int i = 0; i < inst.m; ++i) {
    for (int j = 0; j < inst.n; ++j) col_degree[j] += inst.a[i][j];
  }
  std::vector<int> kept;
  for (int j = 0; j < inst.n; ++j) {
    if (col_degree[j] > 0) kept.push_back(j);
  }

  Rational lambda;
  {
    Rational abs_sum;
    for (const Rational& c : inst.cost) abs_sum += abs(c);
    lambda = abs_sum * Rational(2) + Rational(1);
  }

  std::vector<Rational> packing_cost;
  std::vector<std::vector<std::uint8_t>> packing_rows(inst.m,
                                                      std::vector<std::uint8_t>(kept.size(), 0));
  BinaryVector q1(kept.size()), q2(kept.size());
  for (std::size_t s = 0; s < kept.size(); ++s) {
    int j = kept[s];
    packing_cost.push_back(lambda * Rational(col_degree[j]) - inst.cost[j]);
    for (int i = 0; i < inst.m; ++i) packing_rows[i][s] = inst.a[i][j];
    q1[s] = p1[j];
    q2[s] = p2[j];
  }
  SetSystemInstance packing =
      SetSystemInstance::create(SetKind::Packing, std::move(packing_cost),
                                std::move(packing_rows));
  BinaryVector r = set_packing_orp(packing, q1, q2);

  BinaryVector x(inst.n, 0);
  for (std::size_t s = 0; s < kept.size(); ++s) x[kept[s]] = r[s];
  for (int j = 0; j < inst.n; ++j) {
    if (col_degree[j] == 0) {
      if (p1[j] == p2[j]) {
        x[j] = p1[j];
      } else {
        x[j] = inst.cost[j].sign() < 0 ? 1 : 0;
      }
    }
  }
  if (!set_system_feasible(inst, x)) {
    throw Error("internal: partition ORP produced a non-partition");
  }
  return x;
}

SplpInstance SplpInstance::create(std::vector<Rational> open_cost,
                                  std::vector<std::vector<Rational>> serve_cost) {
  SplpInstance inst;
  inst.facilities = static_cast<int>(open_cost.size());
  if (inst.facilities < 1) throw InvalidInstanceError("splp needs at least one facility");
  if (serve_cost.size() != open_cost.size()) throw DimensionError("service matrix height != K");
  inst.clients = static_cast<int>(serve_cost.front().size());
  if (inst.clients < 1) throw InvalidInstanceError("splp needs at least one client");
  for (const auto& row : serve_cost) {
    if (static_cast<int>(row.size()) != inst.clients) throw DimensionError("service row length != L");
    for (const Rational& c : row) {
      if (c.sign() < 0) throw InvalidInstanceError("negative service cost");
    }
  }
  for (const Rational& c : open_cost) {
    if (c.sign() < 0) throw InvalidInstanceError("negative opening cost");
  }
  inst.open_cost = std::move(open_cost);
  inst.serve_cost = std::move(serve_cost);
  return inst;
}

bool splp_feasible(const SplpInstance& inst, const SplpSolution& s) {
  if (static_cast<int>(s.y.size()) != inst.facilities ||
      static_cast<int>(s.u.size()) != inst.facilities) {
    throw DimensionError("splp solution shape mismatch");
  }
  for (int l = 0; l < inst.clients; ++l) {
    int served = 0;
    for (int k = 0; k < inst.facilities; ++k) served += s.y[k][l];
    if (served != 1) return false;
  }
  for (int k = 0; k < inst.facilities; ++k) {
    if (static_cast<int>(s.y[k].size()) != inst.clients) {
      throw DimensionError("splp solution shape mismatch");
    }
    for (int l = 0; l < inst.clients; ++l) {
      if (s.y[k][l] > s.u[k]) return false;
    }
  }
  return true;
}

Rational splp_value(const SplpInstance& inst, const SplpSolution& s) {
  Rational v;
  for (int k = 0; k < inst.facilities; ++k) {
    if (s.u[k]) v += inst.open_cost[k];
    for (int l = 0; l < inst.clients; ++l) {
      if (s.y[k][l]) v += inst.serve_cost[k][l];
    }
  }
  return v;
}

BinaryVector splp_encode(const SplpInstance& inst, const SplpSolution& s) {
  BinaryVector x(static_cast<std::size_t>(inst.facilities) * inst.clients + inst.facilities);
  for (int k = 0; k < inst.facilities; ++k) {
    for (int l = 0; l < inst.clients; ++l) {
      x[static_cast<std::size_t>(k) * inst.clients + l] = s.y[k][l];
    }
  }
  for (int k = 0; k < inst.facilities; ++k) {
    x[static_cast<std::size_t>(inst.facilities) * inst.clients + k] = s.u[k];
  }
  return x;
}

SplpSolution splp_decode(const SplpInstance& inst, const BinaryVector& x) {
  if (x.size() != static_cast<std::size_t>(inst.facilities) * inst.clients + inst.facilities) {
    throw DimensionError("splp vector length mismatch");
  }
  SplpSolution s;
  s.y.assign(inst.facilities, std::vector<std::uint8_t>(inst.clients, 0));
  s.u.assign(inst.facilities, 0);
  for (int k = 0; k < inst.facilities; ++k) {
    for (int l = 0; l < inst.clients; ++l) {
      s.y[k][l] = x[static_cast<std::size_t>(k) * inst.clients + l];
    }
    s.u[k] = x[static_cast<std::size_t>(inst.facilities) * inst.clients + k];
  }
  return s;
}

SplpSolution splp_orp(const SplpInstance& inst, const SplpSolution& p1, const SplpSolution& p2) {
  if (!splp_feasible(inst, p1)) throw InfeasibleParentError("parent 1 is infeasible");
  if (!splp_feasible(inst, p2)) throw InfeasibleParentError("parent 2 is infeasible");

  const int K = inst.facilities;
  const int L = inst.clients;
  Rational lambda;
  {
    Rational sum;
    for (const Rational& c : inst.open_cost) sum += c;
    for (int l = 0; l < L; ++l) {
      Rational best = inst.serve_cost[0][l];
      for (int k = 1; k < K; ++k) best = max(best, inst.serve_cost[k][l]);
      sum += best;
    }
    lambda = sum + Rational(1);
  }

  // packing over (y, ubar): client rows sum_k y_kl <= 1 and opening rows
  // ubar_k + y_kl <= 1
  const int n = K * L + K;
  std::vector<Rational> cost(n);
  for (int k = 0; k < K; ++k) {
    for (int l = 0; l < L; ++l) cost[k * L + l] = lambda - inst.serve_cost[k][l];
    cost[K * L + k] = inst.open_cost[k];
  }
  std::vector<std::vector<std::uint8_t>> rows;
  for (int l = 0; l < L; ++l) {
    std::vector<std::uint8_t> row(n, 0);
    for (int k = 0; k < K; ++k) row[k * L + l] = 1;
    rows.push_back(std::move(row));
  }
  for (int k = 0; k < K; ++k) {
    for (int l = 0; l < L; ++l) {
      std::vector<std::uint8_t> row(n, 0);
      row[K * L + k] = 1;
      row[k * L + l] = 1;
      rows.push_back(std::move(row));
    }
  }
  SetSystemInstance packing =
      SetSystemInstance::create(SetKind::Packing, std::move(cost), std::move(rows));

  auto beta = [&](const SplpSolution& s) {
    BinaryVector q = splp_encode(inst, s);
    for (int k = 0; k < K; ++k) {
      std::size_t idx = static_cast<std::size_t>(K) * L + k;
      q[idx] = q[idx] ? 0 : 1;  // ubar = 1 - u
    }
    return q;
  };

  BinaryVector r = set_packing_orp(packing, beta(p1), beta(p2));
  for (int k = 0; k < K; ++k) {
    std::size_t idx = static_cast<std::size_t>(K) * L + k;
    r[idx] = r[idx] ? 0 : 1;
  }
  SplpSolution s = splp_decode(inst, r);
  if (!splp_feasible(inst, s)) throw Error("internal: splp ORP produced an infeasible solution");
  return s;
}

OrpInstance<SetSystemInstance> gen_hard_setcover_orp(const SetSystemInstance& cover) {
  if (cover.kind != SetKind::Covering) throw SolverMismatchError("instance is not a covering");
  for (int i = 0; i < cover.m; ++i) {
    bool coverable = false;
    for (int j = 0; j < cover.n; ++j) {
      if (cover.a[i][j]) {
        coverable = true;
        break;
      }
    }
    if (!coverable) {
      throw InvalidInstanceError("row " + std::to_string(i + 1) + " cannot be covered");
    }
  }

  std::vector<Rational> cost;
  cost.reserve(2 * cover.n);
  cost.insert(cost.end(), cover.cost.begin(), cover.cost.end());
  cost.insert(cost.end(), cover.cost.begin(), cover.cost.end());
  std::vector<std::vector<std::uint8_t>> a(cover.m, std::vector<std::uint8_t>(2 * cover.n, 0));
  for (int i = 0; i < cover.m; ++i) {
    for (int j = 0; j < cover.n; ++j) {
      a[i][j] = cover.a[i][j];
      a[i][cover.n + j] = cover.a[i][j];
    }
  }
  SetSystemInstance doubled =
      SetSystemInstance::create(SetKind::Covering, std::move(cost), std::move(a));

  BinaryVector p1(2 * cover.n, 0), p2(2 * cover.n, 0);
  for (int j = 0; j < cover.n; ++j) {
    p1[j] = 1;
    p2[cover.n + j] = 1;
  }
  return make_orp_instance(std::move(doubled), std::move(p1), std::move(p2),
                           [](const SetSystemInstance& inst, const BinaryVector& x) {
                             return set_system_feasible(inst, x);
                           });
}

}  // namespace orp::blp
