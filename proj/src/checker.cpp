#include "ramsey/checker.hpp"

#include <stdexcept>

namespace ramsey {

std::string condition_tag_name(ConditionTag tag) {
  switch (tag) {
    case ConditionTag::kNegationSymmetry: return "i";
    case ConditionTag::kSelfSumset: return "ii";
    case ConditionTag::kCrossSumset: return "iii";
  }
  return "?";
}

std::string describe(const CheckWitness& w) {
  if (const auto* v = std::get_if<SumFreeViolation>(&w))
    return "sum-free violation in X_0: " + std::to_string(v->x) + " + " +
           std::to_string(v->y) + " = " + std::to_string(v->z);
  if (const auto* gap = std::get_if<CoverageGap>(&w))
    return "coverage gap: g^" + std::to_string(gap->j) + " not in X_0 + X_" +
           std::to_string(gap->i);
  const auto& cv = std::get<ConditionViolation>(w);
  return "condition (" + condition_tag_name(cv.tag) + ") fails: " + cv.details;
}

namespace {

// Lexicographically-first Schur triple (x, y, z) in A, scanning x <= y.
SumFreeViolation find_schur_triple(const ResidueSet& a) {
  const u64 p = a.modulus();
  const auto xs = a.members();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i; j < xs.size(); ++j) {
      u64 z = xs[i] + xs[j];
      if (z >= p) z -= p;
      if (a.contains(z)) return {xs[i], xs[j], z};
    }
  }
  throw std::logic_error("find_schur_triple: no triple present");
}

std::string set_label(u64 i) { return "X_" + std::to_string(i); }

}  // namespace

CheckOutcome naive_check(const CosetDecomposition& dec) {
  const u64 p = dec.p();
  const u64 m = dec.m();

  std::vector<ResidueSet> x;
  x.reserve(m);
  for (u64 i = 0; i < m; ++i) x.push_back(dec.coset(i));

  // (i) -X_i = X_i
  for (u64 i = 0; i < m; ++i) {
    if (!(x[i].negated() == x[i]))
      return CheckOutcome::fail(ConditionViolation{
          ConditionTag::kNegationSymmetry, "-" + set_label(i) + " != " + set_label(i)});
  }

  // (ii) X_i + X_i = Z/pZ \ X_i
  for (u64 i = 0; i < m; ++i) {
    const ResidueSet s = sumset(x[i], x[i]);
    if (s == x[i].complement()) continue;
    if (s.intersects(x[i])) {
      if (i == 0) return CheckOutcome::fail(find_schur_triple(x[0]));
      return CheckOutcome::fail(ConditionViolation{
          ConditionTag::kSelfSumset,
          set_label(i) + " + " + set_label(i) + " meets " + set_label(i)});
    }
    const u64 missing = (x[i].complement() & s.complement()).smallest();
    return CheckOutcome::fail(ConditionViolation{
        ConditionTag::kSelfSumset, set_label(i) + " + " + set_label(i) +
                                       " misses " + std::to_string(missing)});
  }

  // (iii) X_i + X_j = Z/pZ \ {0} for i != j
  ResidueSet nonzero = ResidueSet::full(p);
  nonzero.erase(0);
  for (u64 i = 0; i < m; ++i) {
    for (u64 j = i + 1; j < m; ++j) {
      const ResidueSet s = sumset(x[i], x[j]);
      if (s == nonzero) continue;
      std::string details = set_label(i) + " + " + set_label(j);
      if (s.contains(0)) {
        details += " contains 0";
      } else {
        details += " misses " + std::to_string((nonzero & s.complement()).smallest());
      }
      return CheckOutcome::fail(
          ConditionViolation{ConditionTag::kCrossSumset, std::move(details)});
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome fast_check(const CosetDecomposition& dec) {
  const u64 p = dec.p();
  const u64 m = dec.m();
  const ResidueSet x0 = dec.coset(0);

  // (a) X_0 sum-free, via: X_0 sum-free iff 1 not in X_0 + X_0,
  // i.e. (1 - X_0) disjoint from X_0.
  const ResidueSet one_minus = x0.difference_from(1);
  const ResidueSet hit = one_minus & x0;
  if (!hit.empty()) {
    const u64 w = hit.smallest();
    const u64 other = (1 + p - w) % p;
    return CheckOutcome::fail(
        SumFreeViolation{std::min(w, other), std::max(w, other), 1});
  }

  // Translated sets g^j - X_0 for all j, as in the coverage condition.
  std::vector<ResidueSet> diff;
  diff.reserve(m);
  diff.push_back(one_minus);  // j = 0
  u64 gj = 1;
  for (u64 j = 1; j < m; ++j) {
    gj = mod_mul(gj, dec.g(), p);
    diff.push_back(x0.difference_from(gj));
  }

  // (b) every orbit of (i, j) != (0, 0) under
  // (i, j) -> ((m-i) mod m, (j-i) mod m), tested at its lex-min member.
  std::optional<ResidueSet> xi;
  for (u64 i = 0; i < m; ++i) {
    xi.reset();
    for (u64 j = (i == 0) ? 1 : 0; j < m; ++j) {
      const u64 pi = (m - i) % m;
      const u64 pj = (j + m - i) % m;
      if (std::make_pair(pi, pj) < std::make_pair(i, j)) continue;
      if (!xi) xi = dec.coset(i);
      if (!diff[j].intersects(*xi))
        return CheckOutcome::fail(CoverageGap{i, j});
    }
  }
  return CheckOutcome::pass();
}

namespace {

// Binary relation on U x U as one row-set per x.
struct Relation {
  u64 p;
  std::vector<ResidueSet> rows;

  static Relation difference_relation(u64 p, const ResidueSet& xs) {
    Relation r{p, {}};
    r.rows.reserve(p);
    for (u64 x = 0; x < p; ++x) r.rows.push_back(xs.difference_from(x));
    return r;
  }

  bool symmetric() const {
    for (u64 x = 0; x < p; ++x)
      for (u64 y : rows[x].members())
        if (!rows[y].contains(x)) return false;
    return true;
  }
};

Relation compose(const Relation& a, const Relation& b) {
  Relation r{a.p, {}};
  r.rows.reserve(a.p);
  for (u64 x = 0; x < a.p; ++x) {
    ResidueSet row(a.p);
    a.rows[x].for_each([&](u64 y) { row = row | b.rows[y]; });
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace

bool verify_relational(u64 p, const std::vector<ResidueSet>& parts, u64 cap) {
  if (p > cap)
    throw std::invalid_argument("verify_relational: p exceeds cap");
  const u64 m = parts.size();
  std::vector<Relation> rel;
  rel.reserve(m);
  for (const auto& xs : parts)
    rel.push_back(Relation::difference_relation(p, xs));

  // (I) A_i^-1 = A_i
  for (const auto& a : rel)
    if (!a.symmetric()) return false;

  // (II) A_i o A_i = A_i^c (complement within U x U)
  for (u64 i = 0; i < m; ++i) {
    const Relation sq = compose(rel[i], rel[i]);
    for (u64 x = 0; x < p; ++x)
      if (!(sq.rows[x] == rel[i].rows[x].complement())) return false;
  }

  // (III) A_i o A_j = Id^c for i != j
  for (u64 i = 0; i < m; ++i) {
    for (u64 j = 0; j < m; ++j) {
      if (i == j) continue;
      const Relation c = compose(rel[i], rel[j]);
      for (u64 x = 0; x < p; ++x) {
        ResidueSet expect = ResidueSet::full(p);
        expect.erase(x);
        if (!(c.rows[x] == expect)) return false;
      }
    }
  }
  return true;
}

bool verify_relational(const CosetDecomposition& dec, u64 cap) {
  std::vector<ResidueSet> parts;
  parts.reserve(dec.m());
  for (u64 i = 0; i < dec.m(); ++i) parts.push_back(dec.coset(i));
  return verify_relational(dec.p(), parts, cap);
}

}  // namespace ramsey
