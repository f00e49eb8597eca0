#include "orp/core.hpp"

namespace orp {

std::vector<int> difference_set(const BinaryVector& p1, const BinaryVector& p2) {
  if (p1.size() != p2.size()) throw DimensionError("difference_set: parent lengths differ");
  std::vector<int> d;
  for (std::size_t j = 0; j < p1.size(); ++j) {
    if (p1[j] != p2[j]) d.push_back(static_cast<int>(j));
  }
  return d;
}

bool validate_gene_transmission(const BinaryVector& x, const BinaryVector& p1,
                                const BinaryVector& p2) {
  if (x.size() != p1.size() || x.size() != p2.size()) {
    throw DimensionError("validate_gene_transmission: lengths differ");
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != p1[j] && x[j] != p2[j]) return false;
  }
  return true;
}

BlpInstance BlpInstance::create(Sense sense, std::vector<Rational> c, std::vector<BlpRow> rows) {
  BlpInstance inst;
  inst.n = static_cast<int>(c.size());
  if (inst.n < 1) throw InvalidInstanceError("blp needs at least one variable");
  inst.sense = sense;
  inst.c = std::move(c);
  inst.rows = std::move(rows);
  inst.support.resize(inst.rows.size());
  for (std::size_t i = 0; i < inst.rows.size(); ++i) {
    const BlpRow& row = inst.rows[i];
    if (static_cast<int>(row.coeffs.size()) != inst.n) {
      throw DimensionError("blp row " + std::to_string(i + 1) + " has wrong length");
    }
    for (int j = 0; j < inst.n; ++j) {
      if (!row.coeffs[j].is_zero()) inst.support[i].push_back(j);
    }
    if (inst.support[i].empty()) {
      throw InvalidInstanceError("blp row " + std::to_string(i + 1) + " has empty support");
    }
    inst.n_max = std::max(inst.n_max, static_cast<int>(inst.support[i].size()));
  }
  return inst;
}

std::pair<bool, ObjectiveValue> evaluate_blp(const BlpInstance& inst, const BinaryVector& x) {
  if (static_cast<int>(x.size()) != inst.n) throw DimensionError("evaluate_blp: vector length mismatch");
  Rational value;
  for (int j = 0; j < inst.n; ++j) {
    if (x[j]) value += inst.c[j];
  }
  bool feasible = true;
  for (std::size_t i = 0; i < inst.rows.size() && feasible; ++i) {
    const BlpRow& row = inst.rows[i];
    Rational lhs;
    for (int j : inst.support[i]) {
      if (x[j]) lhs += row.coeffs[j];
    }
    switch (row.rel) {
      case Relation::Le: feasible = lhs <= row.rhs; break;
      case Relation::Ge: feasible = lhs >= row.rhs; break;
      case Relation::Eq: feasible = lhs == row.rhs; break;
    }
  }
  return {feasible, ObjectiveValue{value, inst.sense}};
}

BlpInstance normalize_to_le(const BlpInstance& inst) {
  std::vector<BlpRow> rows;
  for (const BlpRow& row : inst.rows) {
    if (row.rel == Relation::Le) {
      rows.push_back(row);
      continue;
    }
    BlpRow neg;
    neg.rel = Relation::Le;
    neg.rhs = -row.rhs;
    neg.coeffs.reserve(row.coeffs.size());
    for (const Rational& a : row.coeffs) neg.coeffs.push_back(-a);
    if (row.rel == Relation::Ge) {
      rows.push_back(std::move(neg));
    } else {  // Eq -> keep both directions
      BlpRow le = row;
      le.rel = Relation::Le;
      rows.push_back(std::move(le));
      rows.push_back(std::move(neg));
    }
  }
  return BlpInstance::create(inst.sense, inst.c, std::move(rows));
}

}  // namespace orp
