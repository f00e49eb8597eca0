#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "orp/hamilton.hpp"

using namespace orp;
using hamilton::Graph;

namespace {

Graph complete(int n) {
  Graph g;
  g.n = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v, false});
  }
  return g;
}

// canonical form: start at 0, walk in the direction of the smaller neighbor
std::vector<int> canonical(const std::vector<int>& cycle) {
  const int n = static_cast<int>(cycle.size());
  int at = static_cast<int>(std::find(cycle.begin(), cycle.end(), 0) - cycle.begin());
  std::vector<int> fwd(n), bwd(n);
  for (int i = 0; i < n; ++i) {
    fwd[i] = cycle[(at + i) % n];
    bwd[i] = cycle[(at - i + n) % n];
  }
  return std::min(fwd, bwd);
}

std::set<std::vector<int>> collect(const Graph& g) {
  std::set<std::vector<int>> out;
  std::size_t emitted = 0;
  hamilton::enumerate_forced_hamiltonian_cycles(g, [&](const std::vector<int>& cycle) {
    emitted += 1;
    out.insert(canonical(cycle));
  });
  // emitted == distinct canonical forms <=> each cycle visited exactly once
  REQUIRE(emitted == out.size());
  return out;
}

}  // namespace

TEST_CASE("complete graphs have (n-1)!/2 hamiltonian cycles") {
  CHECK(collect(complete(3)).size() == 1);
  CHECK(collect(complete(4)).size() == 3);
  CHECK(collect(complete(5)).size() == 12);
  CHECK(collect(complete(6)).size() == 60);
}

TEST_CASE("a plain cycle has exactly one hamiltonian cycle") {
  Graph g;
  g.n = 5;
  for (int i = 0; i < 5; ++i) g.edges.push_back({i, (i + 1) % 5, false});
  auto cycles = collect(g);
  CHECK(cycles.size() == 1);
  CHECK(*cycles.begin() == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("a path has none") {
  Graph g;
  g.n = 4;
  for (int i = 0; i < 3; ++i) g.edges.push_back({i, i + 1, false});
  CHECK(collect(g).empty());
}

TEST_CASE("forced edges restrict the enumeration") {
  // K4 with forced edge {0,2}: only the two cycles through it remain
  Graph g = complete(4);
  for (auto& e : g.edges) {
    if (e.a == 0 && e.b == 2) e.forced = true;
  }
  auto cycles = collect(g);
  CHECK(cycles.size() == 2);
  for (const auto& c : cycles) {
    bool adjacent = false;
    for (int i = 0; i < 4; ++i) {
      int a = c[i];
      int b = c[(i + 1) % 4];
      if ((a == 0 && b == 2) || (a == 2 && b == 0)) adjacent = true;
    }
    CHECK(adjacent);
  }
}

TEST_CASE("contradictory forced edges produce nothing") {
  // three forced edges at one vertex cannot all be used
  Graph g = complete(4);
  for (auto& e : g.edges) {
    if (e.a == 0) e.forced = true;
  }
  CHECK(collect(g).empty());
}

TEST_CASE("minimize_over_cycles agrees across worker counts") {
  Graph g = complete(6);
  std::vector<std::vector<Rational>> w(6, std::vector<Rational>(6));
  // arbitrary but fixed weights
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) w[i][j] = Rational((i * 7 + j * 3) % 11 + 1);
  }
  hamilton::CycleEval<std::vector<int>> eval =
      [&](const std::vector<int>& cycle) -> std::optional<std::pair<Rational, std::vector<int>>> {
    Rational cost;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int a = cycle[i];
      int b = cycle[(i + 1) % cycle.size()];
      cost += w[std::min(a, b)][std::max(a, b)];
    }
    return std::make_pair(cost, cycle);
  };
  auto seq = hamilton::minimize_over_cycles(g, 1, eval);
  auto par = hamilton::minimize_over_cycles(g, 4, eval);
  REQUIRE(seq.has_value());
  REQUIRE(par.has_value());
  CHECK(seq->first == par->first);
}
