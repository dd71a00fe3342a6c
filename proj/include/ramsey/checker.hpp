#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/coset.hpp"
#include "ramsey/residue_set.hpp"

namespace ramsey {

// x + y == z (mod p) with x, y, z all in X_0.
struct SumFreeViolation {
  u64 x, y, z;
};

// g^j is not in X_0 + X_i, i.e. (g^j - X_0) and X_i are disjoint.
struct CoverageGap {
  u64 i, j;
};

enum class ConditionTag { kNegationSymmetry, kSelfSumset, kCrossSumset };

// Literal failure of one of the three coset conditions.
struct ConditionViolation {
  ConditionTag tag;
  std::string details;
};

using CheckWitness =
    std::variant<SumFreeViolation, CoverageGap, ConditionViolation>;

struct CheckOutcome {
  bool verdict = false;
  std::optional<CheckWitness> witness;  // present iff verdict is false

  static CheckOutcome pass() { return {true, std::nullopt}; }
  static CheckOutcome fail(CheckWitness w) { return {false, std::move(w)}; }
};

std::string condition_tag_name(ConditionTag tag);
std::string describe(const CheckWitness& w);

// Literal check of the three conditions, every pair, no shortcuts:
//   -X_i = X_i;  X_i + X_i = Z/pZ \ X_i;  X_i + X_j = Z/pZ \ {0} for i != j.
// O(m^2) sumsets. The oracle the fast checker is tested against.
CheckOutcome naive_check(const CosetDecomposition& dec);

// Equivalent verdict in O(m^2) set intersections:
//   (a) (1 - X_0) disjoint from X_0  (sum-freeness of X_0), and
//   (b) (g^j - X_0) meets X_i for every (i, j) != (0, 0).
// The (b) pairs split into orbits of size <= 2 under
// (i, j) -> ((m-i) mod m, (j-i) mod m); each orbit is tested once, at its
// lexicographically smallest member, in ascending order, so the first
// failing representative is reproducible.
CheckOutcome fast_check(const CosetDecomposition& dec);

// Materializes the difference relations A_i = {(x,y) : x-y in X_i} on
// U x U, U = Z/pZ, and literally verifies
//   (I) A_i^-1 = A_i, (II) A_i o A_i = A_i^c, (III) A_i o A_j = Id^c.
// Quadratic in p; rejects p > cap. `parts` must partition {1,...,p-1}.
bool verify_relational(u64 p, const std::vector<ResidueSet>& parts,
                       u64 cap = 100);
bool verify_relational(const CosetDecomposition& dec, u64 cap = 100);

}  // namespace ramsey
