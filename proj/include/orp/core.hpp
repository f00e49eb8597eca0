#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orp/errors.hpp"
#include "orp/rational.hpp"

namespace orp {

enum class Sense { Max, Min };

inline const char* sense_name(Sense s) { return s == Sense::Max ? "max" : "min"; }

// Objective value tagged with its optimization direction. Comparisons are
// only meaningful within one sense; better() encodes that.
struct ObjectiveValue {
  Rational value;
  Sense sense = Sense::Max;

  // True if *this is strictly better than other under the shared sense.
  bool strictly_better_than(const ObjectiveValue& other) const {
    if (sense != other.sense) throw InvalidInstanceError("comparing objectives of different senses");
    return sense == Sense::Max ? other.value < value : value < other.value;
  }
  bool at_least_as_good_as(const ObjectiveValue& other) const {
    return !other.strictly_better_than(*this);
  }
};

// Fixed-length 0/1 solution vector.
struct BinaryVector {
  std::vector<std::uint8_t> bits;

  BinaryVector() = default;
  explicit BinaryVector(std::size_t n, std::uint8_t fill = 0) : bits(n, fill) {}
  static BinaryVector of(std::initializer_list<int> vals) {
    BinaryVector v;
    for (int b : vals) v.bits.push_back(b ? 1 : 0);
    return v;
  }

  std::size_t size() const { return bits.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits[i]; }
  std::uint8_t& operator[](std::size_t i) { return bits[i]; }

  friend bool operator==(const BinaryVector& a, const BinaryVector& b) { return a.bits == b.bits; }
  friend bool operator!=(const BinaryVector& a, const BinaryVector& b) { return !(a == b); }
};

// Positions where the parents disagree: the free variables of the ORP.
// 0-based indices, ascending.
std::vector<int> difference_set(const BinaryVector& p1, const BinaryVector& p2);

// True iff x_j is one of the parent values at every position.
bool validate_gene_transmission(const BinaryVector& x, const BinaryVector& p1,
                                const BinaryVector& p2);

enum class Relation { Le, Ge, Eq };

inline const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Le: return "le";
    case Relation::Ge: return "ge";
    default: return "eq";
  }
}

struct BlpRow {
  std::vector<Rational> coeffs;
  Relation rel = Relation::Le;
  Rational rhs;
};

// Boolean linear program over x in {0,1}^n. support[i] lists the columns
// with nonzero coefficient in row i and is never empty.
struct BlpInstance {
  int n = 0;
  Sense sense = Sense::Max;
  std::vector<Rational> c;
  std::vector<BlpRow> rows;
  std::vector<std::vector<int>> support;
  int n_max = 0;

  static BlpInstance create(Sense sense, std::vector<Rational> c, std::vector<BlpRow> rows);
  int m() const { return static_cast<int>(rows.size()); }
};

// Feasibility across all rows plus the objective c.x (computed regardless of
// feasibility).
std::pair<bool, ObjectiveValue> evaluate_blp(const BlpInstance& inst, const BinaryVector& x);

// Pure rewrite with only "le" rows: ge rows are negated, eq rows become a
// le/ge pair. Objective and sense are untouched.
BlpInstance normalize_to_le(const BlpInstance& inst);

// An instance bundled with two feasible parents and the derived free-index
// set. Construction validates feasibility of both parents.
template <class Inst>
struct OrpInstance {
  Inst instance;
  BinaryVector p1;
  BinaryVector p2;
  std::vector<int> diff;
};

template <class Inst, class FeasibleFn>
OrpInstance<Inst> make_orp_instance(Inst instance, BinaryVector p1, BinaryVector p2,
                                    FeasibleFn&& feasible) {
  if (p1.size() != p2.size()) throw DimensionError("parent vectors differ in length");
  if (!feasible(instance, p1)) throw InfeasibleParentError("parent 1 is not feasible");
  if (!feasible(instance, p2)) throw InfeasibleParentError("parent 2 is not feasible");
  auto d = difference_set(p1, p2);
  return OrpInstance<Inst>{std::move(instance), std::move(p1), std::move(p2), std::move(d)};
}

}  // namespace orp
