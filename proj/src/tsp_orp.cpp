#include "orp/tsp_orp.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "orp/errors.hpp"
#include "orp/hamilton.hpp"

namespace orp::tsp {

TspInstance TspInstance::create(bool symmetric, std::vector<std::vector<Rational>> dist) {
  TspInstance inst;
  inst.n = static_cast<int>(dist.size());
  if (inst.n < 2) throw InvalidInstanceError("tsp needs at least two vertices");
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i].size() != dist.size()) throw DimensionError("tsp distance matrix is not square");
    for (std::size_t j = 0; j < dist.size(); ++j) {
      if (i != j && dist[i][j].sign() < 0) throw InvalidInstanceError("negative distance");
    }
  }
  if (symmetric) {
    for (std::size_t i = 0; i < dist.size(); ++i) {
      for (std::size_t j = i + 1; j < dist.size(); ++j) {
        if (dist[i][j] != dist[j][i]) {
          throw InvalidInstanceError("distance matrix is not symmetric");
        }
      }
    }
  }
  inst.symmetric = symmetric;
  inst.dist = std::move(dist);
  return inst;
}

Tour tour_from_sequence(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 2) throw InvalidInstanceError("tour needs at least two vertices");
  std::vector<char> seen(n, 0);
  for (int v : seq) {
    if (v < 0 || v >= n) throw InvalidInstanceError("tour vertex out of range");
    if (seen[v]) throw InvalidInstanceError("tour repeats vertex " + std::to_string(v + 1));
    seen[v] = 1;
  }
  Tour t;
  t.next.resize(n);
  for (int i = 0; i < n; ++i) t.next[seq[i]] = seq[(i + 1) % n];
  return t;
}

std::vector<int> tour_sequence(const Tour& t, int start) {
  std::vector<int> seq;
  seq.reserve(t.next.size());
  int v = start;
  for (std::size_t i = 0; i < t.next.size(); ++i) {
    seq.push_back(v);
    v = t.next[v];
  }
  return seq;
}

bool is_hamiltonian_tour(const Tour& t) {
  const int n = t.n();
  if (n < 2) return false;
  std::vector<char> hit(n, 0);
  int v = 0;
  for (int i = 0; i < n; ++i) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
    v = t.next[v];
  }
  return v == 0;
}

Rational tour_length(const TspInstance& inst, const Tour& t) {
  if (t.n() != inst.n) throw DimensionError("tour size != instance size");
  Rational len;
  for (int v = 0; v < inst.n; ++v) len += inst.dist[v][t.next[v]];
  return len;
}

namespace {

void check_tour(const TspInstance& inst, const Tour& t, const char* which) {
  if (t.n() != inst.n) throw DimensionError("tour size != instance size");
  if (!is_hamiltonian_tour(t)) {
    throw InvalidInstanceError(std::string(which) + " is not a hamiltonian circuit");
  }
}

std::vector<int> predecessors(const Tour& t) {
  std::vector<int> pred(t.n());
  for (int v = 0; v < t.n(); ++v) pred[t.next[v]] = v;
  return pred;
}

std::set<std::pair<int, int>> edge_set(const Tour& t) {
  std::set<std::pair<int, int>> e;
  for (int v = 0; v < t.n(); ++v) {
    e.emplace(std::min(v, t.next[v]), std::max(v, t.next[v]));
  }
  return e;
}

ContractedTspGraph fully_common_result(const TspInstance& inst, const Tour& t, bool symmetric) {
  ContractedTspGraph c;
  c.symmetric = symmetric;
  c.fully_common = true;
  std::vector<int> seq = tour_sequence(t, 0);
  PseudoArc p;
  p.from = 0;
  p.to = 0;
  p.length = tour_length(inst, t);
  p.inner.assign(seq.begin() + 1, seq.end());
  c.pseudo.push_back(std::move(p));
  c.reduced_vertices = {0};
  if (symmetric) c.contracted_offset = c.pseudo[0].length;
  return c;
}

}  // namespace

ContractedTspGraph contract_common_general(const TspInstance& inst, const Tour& t1,
                                           const Tour& t2) {
  check_tour(inst, t1, "parent 1");
  check_tour(inst, t2, "parent 2");
  if (t1 == t2) return fully_common_result(inst, t1, false);

  const int n = inst.n;
  std::vector<char> common_out(n, 0);
  for (int v = 0; v < n; ++v) common_out[v] = t1.next[v] == t2.next[v];
  std::vector<int> pred1 = predecessors(t1);
  auto common_in = [&](int v) { return common_out[pred1[v]] != 0; };
  auto interior = [&](int v) { return common_out[v] && common_in(v); };

  ContractedTspGraph c;
  c.symmetric = false;
  std::vector<int> rid(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!interior(v)) {
      rid[v] = static_cast<int>(c.reduced_vertices.size());
      c.reduced_vertices.push_back(v);
    }
  }
  const int reduced = static_cast<int>(c.reduced_vertices.size());
  c.split_node_count = 2 * reduced;
  c.shadow_node_count = 2 * reduced;

  auto in_copy = [&](int v) { return 2 * rid[v]; };
  auto out_copy = [&](int v) { return 2 * rid[v] + 1; };

  for (int r = 0; r < reduced; ++r) {
    c.arcs.push_back({2 * r, 2 * r + 1, Rational(0), ContractedTspGraph::ArcKind::Artificial, -1});
    c.edges.push_back({2 * r, 2 * r + 1, Rational(0), true, -1});
  }

  // maximal common paths become pseudo-arcs keeping length and direction
  for (int v = 0; v < n; ++v) {
    if (rid[v] < 0 || !common_out[v]) continue;
    PseudoArc p;
    p.from = v;
    int cur = t1.next[v];
    p.length = inst.dist[v][cur];
    while (common_out[cur]) {
      p.inner.push_back(cur);
      p.length += inst.dist[cur][t1.next[cur]];
      cur = t1.next[cur];
    }
    p.to = cur;
    if (p.to == p.from) throw Error("internal: common path closed on itself");
    int index = static_cast<int>(c.pseudo.size());
    c.arcs.push_back({out_copy(p.from), in_copy(p.to), p.length,
                      ContractedTspGraph::ArcKind::Pseudo, index});
    c.edges.push_back({out_copy(p.from), in_copy(p.to), p.length, true, index});
    c.pseudo.push_back(std::move(p));
  }

  // remaining arcs of either parent
  for (int v = 0; v < n; ++v) {
    if (common_out[v]) continue;
    for (int head : {t1.next[v], t2.next[v]}) {
      c.arcs.push_back({out_copy(v), in_copy(head), inst.dist[v][head],
                        ContractedTspGraph::ArcKind::Regular, -1});
      c.edges.push_back({out_copy(v), in_copy(head), inst.dist[v][head], false, -1});
    }
  }

  std::set<std::pair<int, int>> seen;
  std::vector<int> degree(c.shadow_node_count, 0);
  for (const auto& e : c.edges) {
    if (!seen.emplace(std::min(e.a, e.b), std::max(e.a, e.b)).second) {
      throw Error("internal: parallel shadow edge in contraction");
    }
    degree[e.a] += 1;
    degree[e.b] += 1;
  }
  for (int d : degree) {
    if (d > 3) throw Error("internal: shadow degree exceeds 3");
  }
  return c;
}

ContractedTspGraph contract_common_symmetric(const TspInstance& inst, const Tour& t1,
                                             const Tour& t2) {
  if (!inst.symmetric) throw SolverMismatchError("instance is not symmetric");
  check_tour(inst, t1, "parent 1");
  check_tour(inst, t2, "parent 2");

  const int n = inst.n;
  std::set<std::pair<int, int>> e1 = edge_set(t1);
  std::set<std::pair<int, int>> e2 = edge_set(t2);
  if (e1 == e2) return fully_common_result(inst, t1, true);

  std::set<std::pair<int, int>> common;
  for (const auto& e : e1) {
    if (e2.count(e)) common.insert(e);
  }

  std::vector<std::vector<int>> common_adj(n);
  for (const auto& [u, v] : common) {
    common_adj[u].push_back(v);
    common_adj[v].push_back(u);
  }

  ContractedTspGraph c;
  c.symmetric = true;
  std::vector<int> rid(n, -1);
  for (int v = 0; v < n; ++v) {
    if (common_adj[v].size() < 2) {
      rid[v] = static_cast<int>(c.reduced_vertices.size());
      c.reduced_vertices.push_back(v);
    }
  }
  const int reduced = static_cast<int>(c.reduced_vertices.size());
  c.shadow_node_count = reduced;

  // contract each maximal common path into a zero-length forced edge
  std::vector<char> visited(n, 0);
  for (int v = 0; v < n; ++v) {
    if (rid[v] < 0 || visited[v] || common_adj[v].empty()) continue;
    PseudoArc p;
    p.from = v;
    visited[v] = 1;
    int prev = v;
    int cur = common_adj[v][0];
    p.length = inst.dist[v][cur];
    while (rid[cur] < 0) {
      visited[cur] = 1;
      p.inner.push_back(cur);
      int nxt = common_adj[cur][0] == prev ? common_adj[cur][1] : common_adj[cur][0];
      p.length += inst.dist[cur][nxt];
      prev = cur;
      cur = nxt;
    }
    visited[cur] = 1;
    p.to = cur;
    if (p.to == p.from) throw Error("internal: common path closed on itself");
    c.contracted_offset += p.length;
    int index = static_cast<int>(c.pseudo.size());
    c.edges.push_back({rid[p.from], rid[p.to], Rational(0), true, index});
    c.pseudo.push_back(std::move(p));
  }

  for (const auto& e : e1) {
    if (!common.count(e)) {
      c.edges.push_back({rid[e.first], rid[e.second], inst.dist[e.first][e.second], false, -1});
    }
  }
  for (const auto& e : e2) {
    if (!common.count(e)) {
      c.edges.push_back({rid[e.first], rid[e.second], inst.dist[e.first][e.second], false, -1});
    }
  }

  std::set<std::pair<int, int>> seen;
  std::vector<int> degree(reduced, 0);
  for (const auto& e : c.edges) {
    if (e.a < 0 || e.b < 0) throw Error("internal: contracted edge touches interior vertex");
    if (!seen.emplace(std::min(e.a, e.b), std::max(e.a, e.b)).second) {
      throw Error("internal: parallel edge in symmetric contraction");
    }
    degree[e.a] += 1;
    degree[e.b] += 1;
  }
  for (int d : degree) {
    if (d > 4) throw Error("internal: reduced degree exceeds 4");
  }
  return c;
}

namespace {

struct ArcKey {
  static std::uint64_t make(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
};

hamilton::Graph shadow_graph(const ContractedTspGraph& c) {
  hamilton::Graph g;
  g.n = c.shadow_node_count;
  g.edges.reserve(c.edges.size());
  for (const auto& e : c.edges) g.edges.push_back({e.a, e.b, e.forced});
  return g;
}

void check_gene_transmission_general(const TspInstance& inst, const Tour& t1, const Tour& t2,
                                     const Tour& x) {
  for (int v = 0; v < inst.n; ++v) {
    if (x.next[v] != t1.next[v] && x.next[v] != t2.next[v]) {
      throw Error("internal: offspring uses an arc absent from both parents");
    }
    if (t1.next[v] == t2.next[v] && x.next[v] != t1.next[v]) {
      throw Error("internal: offspring drops a common arc");
    }
  }
}

void check_gene_transmission_symmetric(const Tour& t1, const Tour& t2, const Tour& x) {
  auto e1 = edge_set(t1);
  auto e2 = edge_set(t2);
  auto ex = edge_set(x);
  for (const auto& e : ex) {
    if (!e1.count(e) && !e2.count(e)) {
      throw Error("internal: offspring uses an edge absent from both parents");
    }
  }
  for (const auto& e : e1) {
    if (e2.count(e) && !ex.count(e)) throw Error("internal: offspring drops a common edge");
  }
}

}  // namespace

TspOrpResult tsp_orp_general(const TspInstance& inst, const Tour& t1, const Tour& t2,
                             int workers) {
  check_tour(inst, t1, "parent 1");
  check_tour(inst, t2, "parent 2");
  if (t1 == t2) return {t1, tour_length(inst, t1)};

  ContractedTspGraph c = contract_common_general(inst, t1, t2);
  hamilton::Graph g = shadow_graph(c);

  std::unordered_map<std::uint64_t, const ContractedTspGraph::Arc*> arc_at;
  arc_at.reserve(c.arcs.size() * 2);
  for (const auto& a : c.arcs) arc_at[ArcKey::make(a.tail, a.head)] = &a;

  // cost of traversing the split-node cycle in one direction, if realizable
  auto directed_cost = [&](const std::vector<int>& seq, bool reverse) -> std::optional<Rational> {
    Rational cost;
    const std::size_t m = seq.size();
    for (std::size_t i = 0; i < m; ++i) {
      int a = reverse ? seq[(m - i) % m] : seq[i];
      int b = reverse ? seq[m - 1 - i] : seq[(i + 1) % m];
      auto it = arc_at.find(ArcKey::make(a, b));
      if (it == arc_at.end()) return std::nullopt;
      cost += it->second->length;
    }
    return cost;
  };

  hamilton::CycleEval<std::vector<int>> eval =
      [&](const std::vector<int>& cycle) -> std::optional<std::pair<Rational, std::vector<int>>> {
    std::optional<Rational> fwd = directed_cost(cycle, false);
    std::optional<Rational> rev = directed_cost(cycle, true);
    if (fwd && (!rev || *fwd <= *rev)) return std::make_pair(*fwd, cycle);
    if (rev) {
      std::vector<int> reversed(cycle.rbegin(), cycle.rend());
      return std::make_pair(*rev, std::move(reversed));
    }
    return std::nullopt;
  };

  auto best = hamilton::minimize_over_cycles(g, workers, eval);
  if (!best) throw Error("internal: no feasible circuit found although parents are feasible");

  // expand the oriented split-node cycle back to a tour on the original
  // vertices
  const std::vector<int>& seq = best->second;
  std::vector<int> order;  // reduced-vertex visit order
  order.reserve(c.reduced_vertices.size());
  for (int node : seq) {
    if (node % 2 == 0) order.push_back(node / 2);
  }
  Tour x;
  x.next.assign(inst.n, -1);
  const std::size_t r = order.size();
  for (std::size_t i = 0; i < r; ++i) {
    int u = c.reduced_vertices[order[i]];
    int w = c.reduced_vertices[order[(i + 1) % r]];
    auto it = arc_at.find(ArcKey::make(2 * order[i] + 1, 2 * order[(i + 1) % r]));
    if (it == arc_at.end()) throw Error("internal: missing arc during expansion");
    const auto* arc = it->second;
    if (arc->kind == ContractedTspGraph::ArcKind::Pseudo) {
      const PseudoArc& p = c.pseudo[arc->pseudo_index];
      int prev = u;
      for (int inner : p.inner) {
        x.next[prev] = inner;
        prev = inner;
      }
      x.next[prev] = w;
    } else {
      x.next[u] = w;
    }
  }
  if (!is_hamiltonian_tour(x)) throw Error("internal: expansion is not a tour");
  Rational len = tour_length(inst, x);
  if (len != best->first) throw Error("internal: expanded length differs from enumerated cost");
  check_gene_transmission_general(inst, t1, t2, x);
  return {x, len};
}

TspOrpResult tsp_orp_symmetric(const TspInstance& inst, const Tour& t1, const Tour& t2,
                               int workers) {
  if (!inst.symmetric) throw SolverMismatchError("instance is not symmetric");
  check_tour(inst, t1, "parent 1");
  check_tour(inst, t2, "parent 2");
  if (edge_set(t1) == edge_set(t2)) return {t1, tour_length(inst, t1)};

  ContractedTspGraph c = contract_common_symmetric(inst, t1, t2);
  hamilton::Graph g = shadow_graph(c);

  std::unordered_map<std::uint64_t, const ContractedTspGraph::UEdge*> edge_at;
  edge_at.reserve(c.edges.size() * 2);
  for (const auto& e : c.edges) {
    edge_at[ArcKey::make(std::min(e.a, e.b), std::max(e.a, e.b))] = &e;
  }

  hamilton::CycleEval<std::vector<int>> eval =
      [&](const std::vector<int>& cycle) -> std::optional<std::pair<Rational, std::vector<int>>> {
    Rational cost;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int a = cycle[i];
      int b = cycle[(i + 1) % cycle.size()];
      auto it = edge_at.find(ArcKey::make(std::min(a, b), std::max(a, b)));
      if (it == edge_at.end()) return std::nullopt;
      cost += it->second->length;
    }
    return std::make_pair(cost, cycle);
  };

  auto best = hamilton::minimize_over_cycles(g, workers, eval);
  if (!best) throw Error("internal: no feasible circuit found although parents are feasible");

  const std::vector<int>& order = best->second;
  Tour x;
  x.next.assign(inst.n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int a = order[i];
    int b = order[(i + 1) % order.size()];
    int u = c.reduced_vertices[a];
    int w = c.reduced_vertices[b];
    auto it = edge_at.find(ArcKey::make(std::min(a, b), std::max(a, b)));
    if (it == edge_at.end()) throw Error("internal: missing edge during expansion");
    const auto* edge = it->second;
    if (edge->pseudo_index >= 0) {
      const PseudoArc& p = c.pseudo[edge->pseudo_index];
      std::vector<int> inner = p.inner;
      if (p.from != u) std::reverse(inner.begin(), inner.end());
      int prev = u;
      for (int v : inner) {
        x.next[prev] = v;
        prev = v;
      }
      x.next[prev] = w;
    } else {
      x.next[u] = w;
    }
  }
  if (!is_hamiltonian_tour(x)) throw Error("internal: expansion is not a tour");

  Rational len = tour_length(inst, x);
  if (len != best->first + c.contracted_offset) {
    throw Error("internal: expanded length differs from reduced optimum plus offset");
  }
  check_gene_transmission_symmetric(t1, t2, x);

  // canonical orientation: lexicographically smaller vertex sequence from 0
  std::vector<int> fwd = tour_sequence(x, 0);
  Tour rev_tour;
  rev_tour.next.assign(inst.n, -1);
  for (int v = 0; v < inst.n; ++v) rev_tour.next[x.next[v]] = v;
  std::vector<int> bwd = tour_sequence(rev_tour, 0);
  if (bwd < fwd) x = rev_tour;
  return {x, len};
}

}  // namespace orp::tsp
