#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orp/graph_orp.hpp"
#include "orp/io.hpp"
#include "orp/oracle.hpp"
#include "orp/rng.hpp"

using namespace orp;
using graph::WeightedGraph;

namespace {

WeightedGraph k4_minus_edge() {
  // K4 without the {v3, v4} edge, weights 1..4
  return WeightedGraph::create(
      {Rational(1), Rational(2), Rational(3), Rational(4)},
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

oracle::BinaryEvaluator clique_eval(const WeightedGraph& g) {
  return [&g](const BinaryVector& x) {
    return std::make_pair(graph::is_clique(g, x), graph::selected_weight(g, x));
  };
}

oracle::BinaryEvaluator is_eval(const WeightedGraph& g) {
  return [&g](const BinaryVector& x) {
    return std::make_pair(graph::is_independent_set(g, x), graph::selected_weight(g, x));
  };
}

oracle::BinaryEvaluator vc_eval(const WeightedGraph& g) {
  return [&g](const BinaryVector& x) {
    return std::make_pair(graph::is_vertex_cover(g, x), graph::selected_weight(g, x));
  };
}

WeightedGraph random_graph(Rng& rng, int max_n, double p) {
  int n = 2 + static_cast<int>(rng.below(max_n - 1));
  std::vector<Rational> w(n);
  for (auto& v : w) v = Rational(rng.int_in(0, 10));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.emplace_back(u, v);
    }
  }
  return WeightedGraph::create(std::move(w), std::move(edges));
}

BinaryVector greedy_clique_from(const WeightedGraph& g, Rng& rng) {
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

}  // namespace

TEST_CASE("clique ORP on K4 minus an edge") {
  WeightedGraph g = k4_minus_edge();
  auto p1 = BinaryVector::of({1, 0, 1, 0});  // {v1, v3}
  auto p2 = BinaryVector::of({0, 1, 0, 1});  // {v2, v4}
  BinaryVector x = graph::clique_orp(g, p1, p2);
  CHECK(x == BinaryVector::of({1, 1, 0, 1}));
  CHECK(graph::selected_weight(g, x) == Rational(7));
  auto report = oracle::brute_force_binary_orp(clique_eval(g), Sense::Max, p1, p2);
  CHECK(report.value == Rational(7));
}

TEST_CASE("clique ORP with identical parents returns the parent") {
  WeightedGraph g = k4_minus_edge();
  auto p = BinaryVector::of({1, 1, 0, 0});
  CHECK(graph::clique_orp(g, p, p) == p);
}

TEST_CASE("clique ORP on the star matches the oracle") {
  // center 0, leaves 1..3; parents {center} and {leaf 1}: the two vertices
  // are adjacent, so the optimal offspring can take both
  WeightedGraph g = WeightedGraph::create(
      {Rational(5), Rational(3), Rational(1), Rational(1)}, {{0, 1}, {0, 2}, {0, 3}});
  auto p1 = BinaryVector::of({1, 0, 0, 0});
  auto p2 = BinaryVector::of({0, 1, 0, 0});
  BinaryVector x = graph::clique_orp(g, p1, p2);
  auto report = oracle::brute_force_binary_orp(clique_eval(g), Sense::Max, p1, p2);
  CHECK(graph::selected_weight(g, x) == report.value);
  CHECK(report.value == Rational(8));
}

TEST_CASE("clique ORP rejects infeasible parents") {
  WeightedGraph g = k4_minus_edge();
  auto bad = BinaryVector::of({0, 0, 1, 1});  // v3 v4 not adjacent
  CHECK_THROWS_AS(graph::clique_orp(g, bad, bad), InfeasibleParentError);
}

TEST_CASE("independent set ORP on the weighted path") {
  WeightedGraph g = WeightedGraph::create({Rational(1), Rational(5), Rational(1)},
                                          {{0, 1}, {1, 2}});
  auto p1 = BinaryVector::of({0, 1, 0});
  auto p2 = BinaryVector::of({1, 0, 1});
  BinaryVector x = graph::independent_set_orp(g, p1, p2);
  CHECK(x == p1);
  CHECK(graph::selected_weight(g, x) == Rational(5));
}

TEST_CASE("independent set ORP on the edgeless graph takes every free one-gene") {
  WeightedGraph g = WeightedGraph::create({Rational(2), Rational(3), Rational(4)}, {});
  auto p1 = BinaryVector::of({1, 0, 0});
  auto p2 = BinaryVector::of({0, 1, 1});
  BinaryVector x = graph::independent_set_orp(g, p1, p2);
  CHECK(x == BinaryVector::of({1, 1, 1}));
  auto p = BinaryVector::of({0, 1, 0});
  CHECK(graph::independent_set_orp(g, p, p) == p);
}

TEST_CASE("vertex cover ORP basics") {
  WeightedGraph single = WeightedGraph::create({Rational(2), Rational(7)}, {{0, 1}});
  BinaryVector x =
      graph::vertex_cover_orp(single, BinaryVector::of({1, 0}), BinaryVector::of({0, 1}));
  CHECK(x == BinaryVector::of({1, 0}));

  WeightedGraph tri = WeightedGraph::create({Rational(1), Rational(1), Rational(10)},
                                            {{0, 1}, {1, 2}, {0, 2}});
  auto p1 = BinaryVector::of({1, 1, 0});
  auto p2 = BinaryVector::of({0, 1, 1});
  CHECK(graph::vertex_cover_orp(tri, p1, p2) == BinaryVector::of({1, 1, 0}));
  CHECK(graph::vertex_cover_orp(tri, p1, p1) == p1);
}

TEST_CASE("random clique ORPs match the oracle") {
  Rng rng(2024);
  int solved = 0;
  for (int it = 0; it < 200; ++it) {
    WeightedGraph g = random_graph(rng, 11, 0.55);
    Rng r1 = Rng::derive(2024, it, 1);
    Rng r2 = Rng::derive(2024, it, 2);
    BinaryVector p1 = greedy_clique_from(g, r1);
    BinaryVector p2 = greedy_clique_from(g, r2);
    BinaryVector x = graph::clique_orp(g, p1, p2);
    CHECK(validate_gene_transmission(x, p1, p2));
    CHECK(graph::is_clique(g, x));
    auto report = oracle::brute_force_binary_orp(clique_eval(g), Sense::Max, p1, p2);
    CHECK(graph::selected_weight(g, x) == report.value);
    // fixed-gene law
    for (int j = 0; j < g.n; ++j) {
      if (p1[j] && p2[j]) CHECK(x[j] == 1);
      if (!p1[j] && !p2[j]) CHECK(x[j] == 0);
    }
    // dominance
    CHECK(graph::selected_weight(g, p1) <= report.value);
    CHECK(graph::selected_weight(g, p2) <= report.value);
    solved += 1;
  }
  CHECK(solved == 200);
}

TEST_CASE("graph text format round trip") {
  WeightedGraph g = k4_minus_edge();
  std::string text = io::write_graph(g);
  WeightedGraph back = io::parse_graph(text);
  CHECK(io::write_graph(back) == text);
  CHECK(back.n == 4);
  CHECK(back.edges.size() == 5);
  CHECK_THROWS_AS(io::parse_graph("graph 2 1\nv 1 1\nv 2 1\ne 1 3\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("graph 2 0\nv 1 1\nv 1 2\n"), ParseError);
}

TEST_CASE("random independent-set and vertex-cover ORPs match the oracle") {
  Rng rng(515);
  for (int it = 0; it < 120; ++it) {
    WeightedGraph g = random_graph(rng, 10, 0.45);
    // complement of a greedy clique in the complement graph = greedy IS
    WeightedGraph comp = graph::complement(g);
    Rng r1 = Rng::derive(515, it, 1);
    Rng r2 = Rng::derive(515, it, 2);
    BinaryVector is1 = greedy_clique_from(comp, r1);
    BinaryVector is2 = greedy_clique_from(comp, r2);

    BinaryVector x = graph::independent_set_orp(g, is1, is2);
    CHECK(graph::is_independent_set(g, x));
    CHECK(validate_gene_transmission(x, is1, is2));
    auto report = oracle::brute_force_binary_orp(is_eval(g), Sense::Max, is1, is2);
    CHECK(graph::selected_weight(g, x) == report.value);

    auto flip = [](const BinaryVector& v) {
      BinaryVector r(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) r[j] = v[j] ? 0 : 1;
      return r;
    };
    BinaryVector c1 = flip(is1);
    BinaryVector c2 = flip(is2);
    BinaryVector y = graph::vertex_cover_orp(g, c1, c2);
    CHECK(graph::is_vertex_cover(g, y));
    CHECK(validate_gene_transmission(y, c1, c2));
    auto cover_report = oracle::brute_force_binary_orp(vc_eval(g), Sense::Min, c1, c2);
    CHECK(graph::selected_weight(g, y) == cover_report.value);
  }
}
