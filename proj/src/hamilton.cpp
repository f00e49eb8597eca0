#include "orp/hamilton.hpp"

#include <array>
#include <deque>
#include <thread>

#include "orp/errors.hpp"

namespace orp::hamilton {

namespace {

constexpr std::uint8_t kUndecided = 0;
constexpr std::uint8_t kIn = 1;
constexpr std::uint8_t kOut = 2;

struct State {
  std::vector<std::uint8_t> status;           // per edge
  std::vector<int> deg_in;                    // chosen edges per vertex
  std::vector<int> deg_avail;                 // undecided edges per vertex
  std::vector<int> path_end;                  // for a path endpoint: the other end
  std::vector<std::array<int, 2>> chosen_at;  // chosen edge ids per vertex
  int chosen_total = 0;
};

class Search {
 public:
  Search(const Graph& g, const std::function<void(const std::vector<int>&)>& emit)
      : g_(g), emit_(emit), incident_(g.n) {
    for (std::size_t e = 0; e < g_.edges.size(); ++e) {
      const auto& ed = g_.edges[e];
      if (ed.a < 0 || ed.a >= g_.n || ed.b < 0 || ed.b >= g_.n || ed.a == ed.b) {
        throw InvalidInstanceError("bad edge in hamiltonian search");
      }
      incident_[ed.a].push_back(static_cast<int>(e));
      incident_[ed.b].push_back(static_cast<int>(e));
    }
  }

  State root_state() const {
    State s;
    s.status.assign(g_.edges.size(), kUndecided);
    s.deg_in.assign(g_.n, 0);
    s.deg_avail.assign(g_.n, 0);
    s.path_end.resize(g_.n);
    s.chosen_at.assign(g_.n, {-1, -1});
    for (int v = 0; v < g_.n; ++v) {
      s.deg_avail[v] = static_cast<int>(incident_[v].size());
      s.path_end[v] = v;
    }
    return s;
  }

  std::deque<std::pair<int, bool>> forced_queue() const {
    std::deque<std::pair<int, bool>> q;
    for (std::size_t e = 0; e < g_.edges.size(); ++e) {
      if (g_.edges[e].forced) q.emplace_back(static_cast<int>(e), true);
    }
    return q;
  }

  // Applies the queued decisions and everything they imply. Returns false
  // when the state is contradictory; a full cycle emitted along the way also
  // finishes the branch (the remaining edges are forced out).
  bool propagate(State& s, std::deque<std::pair<int, bool>> queue) const {
    while (!queue.empty()) {
      auto [e, take] = queue.front();
      queue.pop_front();
      if (take) {
        if (s.status[e] == kIn) continue;
        if (s.status[e] == kOut) return false;
        int a = g_.edges[e].a;
        int b = g_.edges[e].b;
        if (s.deg_in[a] >= 2 || s.deg_in[b] >= 2) return false;
        if (s.path_end[a] == b) {
          if (s.chosen_total + 1 == g_.n) emit_cycle(s, e);
          return false;  // premature cycle, or a reported full tour
        }
        s.status[e] = kIn;
        s.chosen_total += 1;
        int ea = s.path_end[a];
        int eb = s.path_end[b];
        s.path_end[ea] = eb;
        s.path_end[eb] = ea;
        for (int v : {a, b}) {
          s.chosen_at[v][s.deg_in[v]] = e;
          s.deg_in[v] += 1;
          s.deg_avail[v] -= 1;
        }
        for (int v : {a, b}) {
          if (!push_vertex_rules(s, v, queue)) return false;
        }
      } else {
        if (s.status[e] == kOut) continue;
        if (s.status[e] == kIn) return false;
        s.status[e] = kOut;
        int a = g_.edges[e].a;
        int b = g_.edges[e].b;
        s.deg_avail[a] -= 1;
        s.deg_avail[b] -= 1;
        for (int v : {a, b}) {
          if (!push_vertex_rules(s, v, queue)) return false;
        }
      }
    }
    return true;
  }

  void search(const State& s) const {
    int e = pick_branch_edge(s);
    if (e < 0) return;  // nothing left to decide and no cycle closed
    for (bool take : {true, false}) {
      State child = s;
      if (propagate(child, {{e, take}})) search(child);
    }
  }

  int pick_branch_edge(const State& s) const {
    // prefer extending an existing path end, else the first undecided edge
    int fallback = -1;
    for (std::size_t e = 0; e < s.status.size(); ++e) {
      if (s.status[e] != kUndecided) continue;
      if (fallback < 0) fallback = static_cast<int>(e);
      if (s.deg_in[g_.edges[e].a] == 1 || s.deg_in[g_.edges[e].b] == 1) {
        return static_cast<int>(e);
      }
    }
    return fallback;
  }

 private:
  bool push_vertex_rules(State& s, int v, std::deque<std::pair<int, bool>>& queue) const {
    if (s.deg_in[v] + s.deg_avail[v] < 2) return false;
    if (s.deg_in[v] == 2) {
      for (int e : incident_[v]) {
        if (s.status[e] == kUndecided) queue.emplace_back(e, false);
      }
    } else if (s.deg_in[v] + s.deg_avail[v] == 2) {
      for (int e : incident_[v]) {
        if (s.status[e] == kUndecided) queue.emplace_back(e, true);
      }
    }
    return true;
  }

  void emit_cycle(const State& s, int closing_edge) const {
    const int a = g_.edges[closing_edge].a;
    const int b = g_.edges[closing_edge].b;
    std::vector<int> cycle;
    cycle.reserve(g_.n);
    int prev_edge = closing_edge;
    int v = a;
    for (int step = 0; step < g_.n; ++step) {
      cycle.push_back(v);
      if (step + 1 == g_.n) break;
      int next_edge = s.chosen_at[v][0] == prev_edge || s.chosen_at[v][0] < 0
                          ? s.chosen_at[v][1]
                          : s.chosen_at[v][0];
      if (next_edge < 0) throw Error("internal: broken cycle walk");
      const auto& ed = g_.edges[next_edge];
      v = ed.a == v ? ed.b : ed.a;
      prev_edge = next_edge;
    }
    if (v != b) throw Error("internal: cycle walk did not close");
    emit_(cycle);
  }

  const Graph& g_;
  const std::function<void(const std::vector<int>&)>& emit_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace

void enumerate_forced_hamiltonian_cycles(
    const Graph& g, const std::function<void(const std::vector<int>&)>& fn) {
  if (g.n < 3) return;
  Search search(g, fn);
  State root = search.root_state();
  if (search.propagate(root, search.forced_queue())) search.search(root);
}

std::optional<std::pair<Rational, std::vector<int>>> minimize_over_cycles(
    const Graph& g, int workers, const CycleEval<std::vector<int>>& eval) {
  using Best = std::optional<std::pair<Rational, std::vector<int>>>;
  auto consider = [](Best& best, Best cand) {
    if (cand && (!best || cand->first < best->first)) best = std::move(cand);
  };

  if (workers <= 1 || g.n < 3) {
    Best best;
    enumerate_forced_hamiltonian_cycles(g, [&](const std::vector<int>& cycle) {
      consider(best, eval(cycle));
    });
    return best;
  }

  // Expand a frontier of independent subproblems, then give each worker a
  // fixed slice. Frontier order is deterministic, so the reduced optimum
  // does not depend on thread scheduling.
  Best expansion_best;
  std::function<void(const std::vector<int>&)> collect_expansion =
      [&](const std::vector<int>& cycle) { consider(expansion_best, eval(cycle)); };
  Search expander(g, collect_expansion);

  std::deque<State> frontier;
  {
    State root = expander.root_state();
    if (expander.propagate(root, expander.forced_queue())) frontier.push_back(std::move(root));
  }
  const std::size_t target = static_cast<std::size_t>(workers) * 8;
  while (!frontier.empty() && frontier.size() < target) {
    State s = std::move(frontier.front());
    frontier.pop_front();
    int e = expander.pick_branch_edge(s);
    if (e < 0) continue;
    for (bool take : {true, false}) {
      State child = s;
      if (expander.propagate(child, {{e, take}})) frontier.push_back(std::move(child));
    }
  }

  std::vector<State> tasks(frontier.begin(), frontier.end());
  std::vector<Best> results(tasks.size());
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      for (std::size_t i = static_cast<std::size_t>(w); i < tasks.size();
           i += static_cast<std::size_t>(workers)) {
        Best local;
        std::function<void(const std::vector<int>&)> collect =
            [&](const std::vector<int>& cycle) { consider(local, eval(cycle)); };
        Search worker_search(g, collect);
        worker_search.search(tasks[i]);
        results[i] = std::move(local);
      }
    });
  }
  for (auto& t : threads) t.join();

  Best best = std::move(expansion_best);
  for (auto& r : results) consider(best, std::move(r));
  return best;
}

}  // namespace orp::hamilton
