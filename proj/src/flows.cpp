#include "orp/flows.hpp"

#include <queue>

#include "orp/errors.hpp"

namespace orp {

namespace {

struct Dinic {
  struct Edge {
    int to;
    int rev;
    Rational cap;
  };

  int n;
  std::vector<std::vector<Edge>> g;
  std::vector<int> level;
  std::vector<std::size_t> iter;

  explicit Dinic(int n) : n(n), g(n), level(n), iter(n) {}

  void add_edge(int u, int v, const Rational& cap) {
    g[u].push_back({v, static_cast<int>(g[v].size()), cap});
    g[v].push_back({u, static_cast<int>(g[u].size()) - 1, Rational(0)});
  }

  bool bfs(int s, int t) {
    level.assign(n, -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Edge& e : g[u]) {
        if (e.cap.sign() > 0 && level[e.to] < 0) {
          level[e.to] = level[u] + 1;
          q.push(e.to);
        }
      }
    }
    return level[t] >= 0;
  }

  Rational dfs(int u, int t, Rational limit) {
    if (u == t) return limit;
    for (std::size_t& i = iter[u]; i < g[u].size(); ++i) {
      Edge& e = g[u][i];
      if (e.cap.sign() <= 0 || level[e.to] != level[u] + 1) continue;
      Rational pushed = dfs(e.to, t, min(limit, e.cap));
      if (pushed.sign() > 0) {
        e.cap -= pushed;
        g[e.to][e.rev].cap += pushed;
        return pushed;
      }
    }
    level[u] = -1;
    return Rational(0);
  }

  Rational run(int s, int t, const Rational& total_cap) {
    Rational flow;
    while (bfs(s, t)) {
      iter.assign(n, 0);
      for (;;) {
        Rational pushed = dfs(s, t, total_cap);
        if (pushed.sign() == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Edge& e : g[u]) {
        if (e.cap.sign() > 0 && !seen[e.to]) {
          seen[e.to] = 1;
          q.push(e.to);
        }
      }
    }
    return seen;
  }
};

}  // namespace

MaxFlowResult max_flow_min_cut(const FlowNetwork& net) {
  if (net.node_count < 2) throw InvalidInstanceError("flow network needs at least two nodes");
  if (net.source == net.sink) throw InvalidInstanceError("source equals sink");
  if (net.source < 0 || net.source >= net.node_count || net.sink < 0 ||
      net.sink >= net.node_count) {
    throw InvalidInstanceError("source/sink out of range");
  }
  Dinic dinic(net.node_count);
  Rational total_cap;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    if (a.tail < 0 || a.tail >= net.node_count || a.head < 0 || a.head >= net.node_count) {
      throw InvalidInstanceError("arc " + std::to_string(i + 1) + " endpoint out of range");
    }
    if (a.capacity.sign() < 0) {
      throw InvalidInstanceError("arc " + std::to_string(i + 1) + " has negative capacity");
    }
    if (a.tail == a.head) continue;  // self loops carry no flow
    dinic.add_edge(a.tail, a.head, a.capacity);
    total_cap += a.capacity;
  }
  total_cap += Rational(1);

  MaxFlowResult result;
  result.value = dinic.run(net.source, net.sink, total_cap);
  result.source_side = dinic.reachable(net.source);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    if (a.tail != a.head && result.source_side[a.tail] && !result.source_side[a.head]) {
      result.cut_arcs.push_back(static_cast<int>(i));
    }
  }
  return result;
}

VertexSelection bipartite_min_weight_vertex_cover(const BipartiteGraph& g) {
  const int nl = g.left_count();
  const int nr = g.right_count();
  for (const Rational& w : g.left_weight) {
    if (w.sign() < 0) throw InvalidInstanceError("negative vertex weight");
  }
  for (const Rational& w : g.right_weight) {
    if (w.sign() < 0) throw InvalidInstanceError("negative vertex weight");
  }

  FlowNetwork net;
  net.node_count = nl + nr + 2;
  net.source = nl + nr;
  net.sink = nl + nr + 1;
  for (int u = 0; u < nl; ++u) net.arcs.push_back({net.source, u, g.left_weight[u]});
  for (int v = 0; v < nr; ++v) net.arcs.push_back({nl + v, net.sink, g.right_weight[v]});
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || u >= nl || v < 0 || v >= nr) throw InvalidInstanceError("edge endpoint out of range");
    net.arcs.push_back({u, nl + v, max(g.left_weight[u], g.right_weight[v])});
  }

  MaxFlowResult flow = max_flow_min_cut(net);

  VertexSelection cover;
  cover.left.assign(nl, 0);
  cover.right.assign(nr, 0);
  for (int u = 0; u < nl; ++u) {
    if (!flow.source_side[u]) cover.left[u] = 1;
  }
  for (int v = 0; v < nr; ++v) {
    if (flow.source_side[nl + v]) cover.right[v] = 1;
  }
  // A crossing arc in the canonical cut is replaced by the lighter of its
  // source-/sink-adjacent substitutes, which keeps the cut minimal and makes
  // the arc set read off as a cover.
  for (const auto& [u, v] : g.edges) {
    if (flow.source_side[u] && !flow.source_side[nl + v]) {
      if (g.left_weight[u] <= g.right_weight[v]) {
        cover.left[u] = 1;
      } else {
        cover.right[v] = 1;
      }
    }
  }
  for (int u = 0; u < nl; ++u) {
    if (cover.left[u]) cover.weight += g.left_weight[u];
  }
  for (int v = 0; v < nr; ++v) {
    if (cover.right[v]) cover.weight += g.right_weight[v];
  }
  if (cover.weight != flow.value) {
    throw Error("internal: cover weight does not match min cut value");
  }
  return cover;
}

VertexSelection bipartite_max_weight_independent_set(const BipartiteGraph& g) {
  VertexSelection cover = bipartite_min_weight_vertex_cover(g);
  VertexSelection sel;
  sel.left.assign(g.left_count(), 0);
  sel.right.assign(g.right_count(), 0);
  for (int u = 0; u < g.left_count(); ++u) {
    if (!cover.left[u]) {
      sel.left[u] = 1;
      sel.weight += g.left_weight[u];
    }
  }
  for (int v = 0; v < g.right_count(); ++v) {
    if (!cover.right[v]) {
      sel.right[v] = 1;
      sel.weight += g.right_weight[v];
    }
  }
  return sel;
}

}  // namespace orp
