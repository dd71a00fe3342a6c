#pragma once

#include <optional>

#include "ramsey/modarith.hpp"

namespace ramsey {

// Search window for one color count. The lower bound is only proven for
// m > 6; `applicable` surfaces that, and callers must widen the window to
// [2m+1, upper] for smaller m.
struct BoundsReport {
  u64 m = 0;
  u64 lower = 0;  // 2m^2 - 2m + 1
  u64 upper = 0;  // m^4 + 5
  std::optional<u128> ramsey;  // classical R_m(3) upper bound; nullopt if > 128 bits
  bool applicable = false;     // m > 6
};

BoundsReport bounds_for(u64 m);

// Cardinality test for X_0 + X_0 = Z/pZ \ X_0: with k = (p-1)/m, the sumset
// has at most k^2/2 + 1 elements, so k^2/2 + 1 >= p - k is necessary.
// Requires m | (p-1).
bool formal_sum_feasible(u64 p, u64 m);

// floor(e * m!) + 1 = (sum over k<=m of m!/k!) + 1, exact integer arithmetic.
// Throws std::overflow_error once the value exceeds 128 bits (m >= 34).
u128 ramsey_bound(u64 m);

}  // namespace ramsey
