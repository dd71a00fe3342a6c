#include "ramsey/modarith.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u64 PrimeFactorization::recompose() const {
  u64 r = 1;
  for (const auto& [q, e] : factors)
    for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

u64 mod_mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<u128>(a) * b) % p);
}

u64 mod_pow(u64 base, u64 exp, u64 p) {
  if (p < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  u64 r = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) r = mod_mul(r, base, p);
    exp >>= 1;
    if (exp) base = mod_mul(base, base, p);
  }
  return r;
}

namespace {

// One strong-pseudoprime round; n odd, n-1 = d * 2^s.
bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mod_mul(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (!miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

PrimeFactorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  PrimeFactorization f;
  f.n = n;
  auto take = [&](u64 q) {
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e) f.factors.emplace_back(q, e);
  };
  take(2);
  take(3);
  // candidates 6k +/- 1
  for (u64 q = 5; q <= n / q; q += 6) {
    take(q);
    take(q + 2);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

u64 primitive_root(u64 p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("primitive_root: p must be an odd prime");
  const PrimeFactorization f = factorize(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, e] : f.factors) {
      (void)e;
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: no generator found");
}

std::vector<u64> primes_in_progression(u64 m, u64 lo, u64 hi) {
  if (m < 1) throw std::invalid_argument("primes_in_progression: m must be >= 1");
  std::vector<u64> out;
  if (lo > hi) return out;
  const u64 step = 2 * m;
  // first value >= lo congruent to 1 mod 2m
  u64 r = lo % step;
  u64 p = (r <= 1) ? lo + (1 - r) : lo + (step + 1 - r);
  while (p <= hi) {
    if (is_prime(p)) out.push_back(p);
    if (hi - p < step) break;
    p += step;
  }
  return out;
}

}  // namespace ramsey
