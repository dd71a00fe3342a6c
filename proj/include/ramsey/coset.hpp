#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/modarith.hpp"
#include "ramsey/residue_set.hpp"

namespace ramsey {

// Partition of (Z/pZ)^x into the index-m subgroup X_0 = {g^(am)} and its
// cosets X_i = g^i X_0. Residue g^t carries label t mod m; 0 has no label.
// Requires k = (p-1)/m even, which forces -1 into X_0 and so -X_i = X_i.
class CosetDecomposition {
 public:
  static constexpr std::uint16_t kNoLabel = 0xFFFF;

  // Validates p prime, m | p-1, k even, g a generator; O(p) to build.
  static CosetDecomposition build(u64 p, u64 m, u64 g);

  u64 p() const { return p_; }
  u64 m() const { return m_; }
  u64 k() const { return k_; }
  u64 g() const { return g_; }

  // Label of a nonzero residue; throws for 0 or r >= p.
  u64 label_of(u64 r) const;

  // X_i as a bitset, |X_i| = k. O(k) to materialize.
  ResidueSet coset(u64 i) const;

  const std::vector<std::uint16_t>& labels() const { return labels_; }

 private:
  CosetDecomposition() = default;
  u64 p_ = 0, m_ = 0, k_ = 0, g_ = 0;
  std::vector<std::uint16_t> labels_;
};

}  // namespace ramsey
