#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orp/core.hpp"
#include "orp/io.hpp"
#include "orp/rng.hpp"

using namespace orp;

TEST_CASE("rational basics") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(7, 2) / Rational(7) == Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(-7, 2).str() == "-7/2");
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("2.125") == Rational(17, 8));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("7/2") == Rational(7, 2));
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
}

TEST_CASE("rational overflow is an error") {
  Rational big(INT64_MAX);
  CHECK_THROWS_AS(big + Rational(1), OverflowError);
  CHECK_THROWS_AS(big * Rational(2), OverflowError);
}

TEST_CASE("objective values compare only within one sense") {
  ObjectiveValue a{Rational(3), Sense::Max};
  ObjectiveValue b{Rational(5), Sense::Max};
  CHECK(b.strictly_better_than(a));
  CHECK_FALSE(a.strictly_better_than(b));
  CHECK(b.at_least_as_good_as(a));
  ObjectiveValue c{Rational(3), Sense::Min};
  ObjectiveValue d{Rational(5), Sense::Min};
  CHECK(c.strictly_better_than(d));
  CHECK_THROWS_AS(a.strictly_better_than(c), InvalidInstanceError);
}

TEST_CASE("difference_set examples") {
  auto p1 = BinaryVector::of({0, 1, 1, 0});
  auto p2 = BinaryVector::of({0, 0, 1, 1});
  CHECK(difference_set(p1, p2) == std::vector<int>{1, 3});
  CHECK(difference_set(p1, p1).empty());
  CHECK(difference_set(BinaryVector::of({0, 0, 0}), BinaryVector::of({1, 1, 1})) ==
        std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(difference_set(p1, BinaryVector::of({0, 1})), DimensionError);
}

TEST_CASE("difference_set is symmetric") {
  Rng rng(7);
  for (int it = 0; it < 50; ++it) {
    int n = 1 + static_cast<int>(rng.below(20));
    BinaryVector a(n), b(n);
    for (int j = 0; j < n; ++j) {
      a[j] = rng.chance(0.5);
      b[j] = rng.chance(0.5);
    }
    CHECK(difference_set(a, b) == difference_set(b, a));
  }
}

TEST_CASE("gene transmission examples") {
  auto p1 = BinaryVector::of({1, 0});
  auto p2 = BinaryVector::of({0, 1});
  CHECK(validate_gene_transmission(p1, p1, p2));
  CHECK(validate_gene_transmission(BinaryVector::of({1, 1}), p1, p2));
  CHECK_FALSE(validate_gene_transmission(BinaryVector::of({1, 1}), BinaryVector::of({0, 0}),
                                         BinaryVector::of({0, 1})));
  CHECK_THROWS_AS(validate_gene_transmission(BinaryVector::of({1}), p1, p2), DimensionError);
}

TEST_CASE("gene transmission fixes the agreeing positions") {
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    int n = 1 + static_cast<int>(rng.below(16));
    BinaryVector p1(n), p2(n), x(n);
    for (int j = 0; j < n; ++j) {
      p1[j] = rng.chance(0.5);
      p2[j] = rng.chance(0.5);
      x[j] = rng.chance(0.5) ? p1[j] : p2[j];
    }
    CHECK(validate_gene_transmission(x, p1, p2));
    auto d = difference_set(p1, p2);
    std::vector<char> in_d(n, 0);
    for (int j : d) in_d[j] = 1;
    for (int j = 0; j < n; ++j) {
      if (!in_d[j]) CHECK(x[j] == p1[j]);
    }
  }
}

namespace {

BlpInstance tiny_max_blp() {
  // max x1 + 2 x2 subject to x1 + x2 <= 1
  BlpRow row;
  row.coeffs = {Rational(1), Rational(1)};
  row.rel = Relation::Le;
  row.rhs = Rational(1);
  return BlpInstance::create(Sense::Max, {Rational(1), Rational(2)}, {row});
}

}  // namespace

TEST_CASE("evaluate_blp examples") {
  BlpInstance inst = tiny_max_blp();
  auto [ok1, v1] = evaluate_blp(inst, BinaryVector::of({0, 1}));
  CHECK(ok1);
  CHECK(v1.value == Rational(2));
  auto [ok2, v2] = evaluate_blp(inst, BinaryVector::of({1, 1}));
  CHECK_FALSE(ok2);
  CHECK(v2.value == Rational(3));
  auto [ok3, v3] = evaluate_blp(inst, BinaryVector::of({0, 0}));
  CHECK(ok3);
  CHECK(v3.value == Rational(0));
}

TEST_CASE("blp rejects empty-support rows") {
  BlpRow row;
  row.coeffs = {Rational(0), Rational(0)};
  row.rhs = Rational(1);
  CHECK_THROWS_AS(BlpInstance::create(Sense::Max, {Rational(1), Rational(1)}, {row}),
                  InvalidInstanceError);
}

TEST_CASE("normalize_to_le preserves the feasible set") {
  Rng rng(3);
  for (int it = 0; it < 60; ++it) {
    int n = 2 + static_cast<int>(rng.below(5));
    int m = 1 + static_cast<int>(rng.below(4));
    std::vector<Rational> c(n);
    for (auto& v : c) v = Rational(rng.int_in(-5, 5));
    std::vector<BlpRow> rows;
    for (int i = 0; i < m; ++i) {
      BlpRow row;
      row.coeffs.resize(n);
      bool nonzero = false;
      for (auto& v : row.coeffs) {
        v = Rational(rng.int_in(-3, 3));
        nonzero = nonzero || !v.is_zero();
      }
      if (!nonzero) row.coeffs[0] = Rational(1);
      int r = static_cast<int>(rng.below(3));
      row.rel = r == 0 ? Relation::Le : (r == 1 ? Relation::Ge : Relation::Eq);
      row.rhs = Rational(rng.int_in(-4, 4));
      rows.push_back(std::move(row));
    }
    BlpInstance inst = BlpInstance::create(rng.chance(0.5) ? Sense::Max : Sense::Min, c, rows);
    BlpInstance norm = normalize_to_le(inst);
    for (const BlpRow& row : norm.rows) CHECK(row.rel == Relation::Le);
    for (int t = 0; t < 20; ++t) {
      BinaryVector x(n);
      for (int j = 0; j < n; ++j) x[j] = rng.chance(0.5);
      auto [f1, o1] = evaluate_blp(inst, x);
      auto [f2, o2] = evaluate_blp(norm, x);
      CHECK(f1 == f2);
      CHECK(o1.value == o2.value);
    }
  }
}

TEST_CASE("orp instance construction validates parents") {
  BlpInstance inst = tiny_max_blp();
  auto feasible = [](const BlpInstance& i, const BinaryVector& x) {
    return evaluate_blp(i, x).first;
  };
  auto orp = make_orp_instance(inst, BinaryVector::of({1, 0}), BinaryVector::of({0, 1}), feasible);
  CHECK(orp.diff == std::vector<int>{0, 1});
  CHECK(validate_gene_transmission(orp.p1, orp.p1, orp.p2));
  CHECK(validate_gene_transmission(orp.p2, orp.p1, orp.p2));
  CHECK_THROWS_AS(
      make_orp_instance(inst, BinaryVector::of({1, 1}), BinaryVector::of({0, 1}), feasible),
      InfeasibleParentError);
}

TEST_CASE("blp text format round trip") {
  BlpInstance inst = tiny_max_blp();
  std::string text = io::write_blp(inst);
  BlpInstance back = io::parse_blp(text);
  CHECK(io::write_blp(back) == text);
  CHECK(back.n == 2);
  CHECK(back.sense == Sense::Max);
  CHECK(back.n_max == 2);

  auto parents = io::write_parents_binary(BinaryVector::of({1, 0}), BinaryVector::of({0, 1}));
  auto [p1, p2] = io::parse_parents_binary(parents, 2);
  CHECK(io::write_parents_binary(p1, p2) == parents);

  CHECK_THROWS_AS(io::parse_blp("blp x"), ParseError);
  CHECK_THROWS_AS(io::parse_parents_binary("parents\n1 2\n0 0\n", 2), ParseError);
}
