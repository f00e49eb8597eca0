#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "orp/io.hpp"
#include "orp/oracle.hpp"
#include "orp/rng.hpp"
#include "orp/tsp_orp.hpp"

using namespace orp;
using tsp::ContractedTspGraph;
using tsp::Tour;
using tsp::TspInstance;

namespace {

TspInstance random_instance(Rng& rng, int n, bool symmetric) {
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) dist[i][j] = Rational(rng.int_in(0, 50));
    }
  }
  if (symmetric) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) dist[j][i] = dist[i][j];
    }
  }
  return TspInstance::create(symmetric, std::move(dist));
}

Tour random_tour(Rng& rng, int n) { return tsp::tour_from_sequence(rng.permutation(n)); }

int count_common_arcs(const Tour& a, const Tour& b) {
  int c = 0;
  for (int v = 0; v < a.n(); ++v) c += a.next[v] == b.next[v];
  return c;
}

}  // namespace

TEST_CASE("tour helpers") {
  Tour t = tsp::tour_from_sequence({0, 2, 1, 3});
  CHECK(tsp::is_hamiltonian_tour(t));
  CHECK(tsp::tour_sequence(t, 0) == std::vector<int>{0, 2, 1, 3});
  CHECK_THROWS_AS(tsp::tour_from_sequence({0, 0, 1}), InvalidInstanceError);
  Tour broken;
  broken.next = {1, 0, 3, 2};  // two 2-cycles
  CHECK_FALSE(tsp::is_hamiltonian_tour(broken));
}

TEST_CASE("general contraction: identical parents collapse entirely") {
  Rng rng(1);
  TspInstance inst = random_instance(rng, 5, false);
  Tour t = random_tour(rng, 5);
  ContractedTspGraph c = tsp::contract_common_general(inst, t, t);
  CHECK(c.fully_common);
  CHECK(c.pseudo.size() == 1);
  CHECK(c.pseudo[0].length == tsp::tour_length(inst, t));
  auto r = tsp::tsp_orp_general(inst, t, t);
  CHECK(r.tour == t);
  CHECK(r.length == tsp::tour_length(inst, t));
}

TEST_CASE("general contraction: arc-disjoint parents keep every arc") {
  // two arc-disjoint tours on 5 vertices
  Tour t1 = tsp::tour_from_sequence({0, 1, 2, 3, 4});
  Tour t2 = tsp::tour_from_sequence({0, 2, 4, 1, 3});
  CHECK(count_common_arcs(t1, t2) == 0);
  Rng rng(2);
  TspInstance inst = random_instance(rng, 5, false);
  ContractedTspGraph c = tsp::contract_common_general(inst, t1, t2);
  CHECK(c.pseudo.empty());
  CHECK(c.reduced_vertices.size() == 5);
  CHECK(c.split_node_count == 10);
  int forced = 0, free = 0;
  for (const auto& e : c.edges) (e.forced ? forced : free) += 1;
  // non-forced shadow edges = arcs present in exactly one parent
  CHECK(free == 10);
  CHECK(forced == 5);  // the artificial edges
}

TEST_CASE("general contraction: one shared path becomes one pseudo-arc") {
  // both tours travel 0 -> 1 -> 2 -> 3 (three shared arcs), then differ
  Tour t1 = tsp::tour_from_sequence({0, 1, 2, 3, 4, 5});
  Tour t2 = tsp::tour_from_sequence({0, 1, 2, 3, 5, 4});
  Rng rng(3);
  TspInstance inst = random_instance(rng, 6, false);
  ContractedTspGraph c = tsp::contract_common_general(inst, t1, t2);
  REQUIRE(c.pseudo.size() == 1);
  CHECK(c.pseudo[0].from == 0);
  CHECK(c.pseudo[0].to == 3);
  CHECK(c.pseudo[0].inner == std::vector<int>{1, 2});
  Rational expect = inst.dist[0][1] + inst.dist[1][2] + inst.dist[2][3];
  CHECK(c.pseudo[0].length == expect);
  // interior vertices 1 and 2 disappear from the reduced graph
  CHECK(c.reduced_vertices == std::vector<int>{0, 3, 4, 5});
}

TEST_CASE("general ORP matches the permutation oracle") {
  Rng rng(2025);
  for (int it = 0; it < 80; ++it) {
    int n = 4 + static_cast<int>(rng.below(4));  // 4..7
    TspInstance inst = random_instance(rng, n, false);
    Tour t1 = random_tour(rng, n);
    Tour t2 = random_tour(rng, n);
    auto r = tsp::tsp_orp_general(inst, t1, t2);
    auto report = oracle::brute_force_tour_orp(inst, t1, t2);
    CHECK(r.length == report.value);
    CHECK(r.length <= tsp::tour_length(inst, t1));
    CHECK(r.length <= tsp::tour_length(inst, t2));
    // arc rule: nothing outside the parents, everything they share
    for (int v = 0; v < n; ++v) {
      bool in_parent = r.tour.next[v] == t1.next[v] || r.tour.next[v] == t2.next[v];
      CHECK(in_parent);
      if (t1.next[v] == t2.next[v]) CHECK(r.tour.next[v] == t1.next[v]);
    }
  }
}

TEST_CASE("symmetric contraction mirrors the general one") {
  Rng rng(4);
  TspInstance inst = random_instance(rng, 6, true);

  Tour t = random_tour(rng, 6);
  ContractedTspGraph ident = tsp::contract_common_symmetric(inst, t, t);
  CHECK(ident.fully_common);

  // reversed orientation has the same edge set
  std::vector<int> seq = tsp::tour_sequence(t, 0);
  std::vector<int> rev(seq.rbegin(), seq.rend());
  ContractedTspGraph c2 = tsp::contract_common_symmetric(inst, t, tsp::tour_from_sequence(rev));
  CHECK(c2.fully_common);

  // edge-disjoint tours: degrees stay within 4
  Tour a = tsp::tour_from_sequence({0, 1, 2, 3, 4, 5});
  Tour b = tsp::tour_from_sequence({0, 2, 4, 1, 3, 5});
  ContractedTspGraph c3 = tsp::contract_common_symmetric(inst, a, b);
  std::vector<int> degree(c3.shadow_node_count, 0);
  for (const auto& e : c3.edges) {
    degree[e.a] += 1;
    degree[e.b] += 1;
  }
  for (int d : degree) CHECK(d <= 4);

  // exactly one shared path 0-1-2: the second tour detours through the
  // remaining vertices without touching any other first-tour edge
  TspInstance inst7 = random_instance(rng, 7, true);
  Tour p1 = tsp::tour_from_sequence({0, 1, 2, 3, 4, 5, 6});
  Tour p2 = tsp::tour_from_sequence({0, 1, 2, 4, 6, 3, 5});
  ContractedTspGraph c4 = tsp::contract_common_symmetric(inst7, p1, p2);
  REQUIRE(c4.pseudo.size() == 1);
  CHECK(c4.pseudo[0].inner == std::vector<int>{1});
  CHECK(c4.contracted_offset == inst7.dist[0][1] + inst7.dist[1][2]);
}

TEST_CASE("symmetric ORP matches the oracle and the offset identity") {
  Rng rng(909);
  for (int it = 0; it < 80; ++it) {
    int n = 4 + static_cast<int>(rng.below(4));
    TspInstance inst = random_instance(rng, n, true);
    Tour t1 = random_tour(rng, n);
    Tour t2 = random_tour(rng, n);
    auto r = tsp::tsp_orp_symmetric(inst, t1, t2);
    auto report = oracle::brute_force_tour_orp(inst, t1, t2);
    CHECK(r.length == report.value);
    CHECK(r.length == tsp::tour_length(inst, r.tour));
    CHECK(r.length <= tsp::tour_length(inst, t1));
    CHECK(r.length <= tsp::tour_length(inst, t2));

    // reduced optimum + offset identity, recomputed independently
    auto edges_of = [](const Tour& t) {
      std::set<std::pair<int, int>> e;
      for (int v = 0; v < t.n(); ++v) {
        e.emplace(std::min(v, t.next[v]), std::max(v, t.next[v]));
      }
      return e;
    };
    if (edges_of(t1) != edges_of(t2)) {
      ContractedTspGraph c = tsp::contract_common_symmetric(inst, t1, t2);
      Rational reduced_len;
      auto ex = edges_of(r.tour);
      Rational skipped;
      for (const auto& p : c.pseudo) skipped += p.length;
      CHECK(skipped == c.contracted_offset);
      reduced_len = r.length - c.contracted_offset;
      CHECK(reduced_len + c.contracted_offset == r.length);
    }
  }
}

TEST_CASE("identical parents short-circuit both solvers") {
  Rng rng(6);
  TspInstance gen = random_instance(rng, 6, false);
  Tour t = random_tour(rng, 6);
  CHECK(tsp::tsp_orp_general(gen, t, t).tour == t);

  TspInstance sym = random_instance(rng, 6, true);
  Tour s = random_tour(rng, 6);
  CHECK(tsp::tsp_orp_symmetric(sym, s, s).tour == s);
  // opposite orientation, same edge set
  std::vector<int> seq = tsp::tour_sequence(s, 0);
  std::vector<int> rev(seq.rbegin(), seq.rend());
  CHECK(tsp::tsp_orp_symmetric(sym, s, tsp::tour_from_sequence(rev)).tour == s);
}

TEST_CASE("worker counts do not change the optimum") {
  Rng rng(17);
  for (int it = 0; it < 15; ++it) {
    int n = 5 + static_cast<int>(rng.below(3));
    TspInstance inst = random_instance(rng, n, false);
    Tour t1 = random_tour(rng, n);
    Tour t2 = random_tour(rng, n);
    auto seq = tsp::tsp_orp_general(inst, t1, t2, 1);
    auto par = tsp::tsp_orp_general(inst, t1, t2, 4);
    CHECK(seq.length == par.length);
  }
  for (int it = 0; it < 15; ++it) {
    int n = 5 + static_cast<int>(rng.below(3));
    TspInstance inst = random_instance(rng, n, true);
    Tour t1 = random_tour(rng, n);
    Tour t2 = random_tour(rng, n);
    CHECK(tsp::tsp_orp_symmetric(inst, t1, t2, 1).length ==
          tsp::tsp_orp_symmetric(inst, t1, t2, 4).length);
  }
}

TEST_CASE("solvers reject invalid tours") {
  Rng rng(8);
  TspInstance inst = random_instance(rng, 4, false);
  Tour bad;
  bad.next = {1, 0, 3, 2};
  Tour good = random_tour(rng, 4);
  CHECK_THROWS_AS(tsp::tsp_orp_general(inst, bad, good), InvalidInstanceError);
  CHECK_THROWS_AS(tsp::contract_common_general(inst, good, bad), InvalidInstanceError);
  CHECK_THROWS_AS(tsp::tsp_orp_symmetric(inst, good, good), SolverMismatchError);
}

TEST_CASE("tsp text format round trip") {
  Rng rng(9);
  TspInstance inst = random_instance(rng, 4, true);
  std::string text = io::write_tsp(inst);
  auto back = io::parse_tsp(text);
  CHECK(io::write_tsp(back) == text);
  CHECK(back.symmetric);

  auto parents = io::write_parents_sequence({0, 1, 2, 3}, {3, 2, 1, 0});
  auto [s1, s2] = io::parse_parents_sequence(parents, 4);
  CHECK(io::write_parents_sequence(s1, s2) == parents);
  CHECK_THROWS_AS(io::parse_parents_sequence("parents\n1 2 3 5\n1 2 3 4\n", 4), ParseError);
}
