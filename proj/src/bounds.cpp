#include "ramsey/bounds.hpp"

#include <limits>
#include <stdexcept>

namespace ramsey {

BoundsReport bounds_for(u64 m) {
  if (m < 1) throw std::invalid_argument("bounds_for: m must be >= 1");
  const u128 upper = u128(m) * m * m * m + 5;
  if (upper > std::numeric_limits<u64>::max())
    throw std::overflow_error("bounds_for: m^4 + 5 exceeds 64 bits");
  BoundsReport r;
  r.m = m;
  r.lower = 2 * m * m - 2 * m + 1;
  r.upper = static_cast<u64>(upper);
  r.applicable = m > 6;
  try {
    r.ramsey = ramsey_bound(m);
  } catch (const std::overflow_error&) {
    r.ramsey = std::nullopt;
  }
  return r;
}

bool formal_sum_feasible(u64 p, u64 m) {
  if (p < 2 || m < 1 || (p - 1) % m != 0)
    throw std::invalid_argument("formal_sum_feasible: m must divide p-1");
  const u64 k = (p - 1) / m;
  // k^2/2 + 1 >= p - k, doubled to stay in integers for odd k too.
  return u128(k) * k + 2 >= 2 * (u128(p) - k);
}

u128 ramsey_bound(u64 m) {
  if (m < 1) throw std::invalid_argument("ramsey_bound: m must be >= 1");
  // S(m) = sum over k<=m of m!/k! satisfies S(i) = i*S(i-1) + 1, S(0) = 1,
  // and floor(e*m!) = S(m) because the series tail is below 1.
  u128 s = 1;
  constexpr u128 kMax = ~u128(0);
  for (u64 i = 1; i <= m; ++i) {
    if (s > (kMax - 1) / i)
      throw std::overflow_error("ramsey_bound: exceeds 128-bit range");
    s = s * i + 1;
  }
  if (s == kMax) throw std::overflow_error("ramsey_bound: exceeds 128-bit range");
  return s + 1;
}

}  // namespace ramsey
