#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::string to_string_u128(u128 v);

// Complete factorization of n, factors ascending by prime.
struct PrimeFactorization {
  u64 n = 1;
  std::vector<std::pair<u64, unsigned>> factors;

  u64 recompose() const;
};

u64 mod_mul(u64 a, u64 b, u64 p);

// base^exp mod p. Requires p >= 2.
u64 mod_pow(u64 base, u64 exp, u64 p);

// Deterministic Miller-Rabin with the first 12 prime witnesses,
// which decides primality for every n < 3.3e24, so for all of u64.
bool is_prime(u64 n);

// Trial division by 2, 3 and a 6-wheel up to sqrt(n).
// Fast for n up to ~1e14; larger semiprimes get slow.
PrimeFactorization factorize(u64 n);

// Smallest generator of (Z/pZ)^x. Requires p an odd prime.
u64 primitive_root(u64 p);

// All primes p in [lo, hi] with p == 1 (mod 2m), ascending.
std::vector<u64> primes_in_progression(u64 m, u64 lo, u64 hi);

}  // namespace ramsey
