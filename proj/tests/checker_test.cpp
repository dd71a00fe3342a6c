#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ramsey/checker.hpp"
#include "ramsey/coset.hpp"
#include "ramsey/modarith.hpp"

using namespace ramsey;

namespace {

// All m for which (p, m) admits a decomposition: m | p-1 with (p-1)/m even.
std::vector<u64> valid_ms(u64 p, u64 cap = ~0ull) {
  std::vector<u64> out;
  for (u64 m = 1; m < p && m <= cap; ++m)
    if ((p - 1) % m == 0 && ((p - 1) / m) % 2 == 0) out.push_back(m);
  return out;
}

std::vector<u64> primes_below(u64 hi) {
  std::vector<u64> out;
  for (u64 p = 3; p < hi; p += 2)
    if (is_prime(p)) out.push_back(p);
  return out;
}

// Two smallest primitive roots of p.
std::pair<u64, u64> two_roots(u64 p) {
  const u64 g0 = primitive_root(p);
  const auto fac = factorize(p - 1);
  for (u64 g = g0 + 1; g < p; ++g) {
    bool prim = true;
    for (const auto& [f, e] : fac.factors)
      if (mod_pow(g, (p - 1) / f, p) == 1) { prim = false; break; }
    if (prim) return {g0, g};
  }
  throw std::logic_error("two_roots: p has a unique primitive root");
}

bool witness_is_valid(const CosetDecomposition& dec, const CheckWitness& w) {
  const u64 p = dec.p();
  if (const auto* v = std::get_if<SumFreeViolation>(&w)) {
    const auto x0 = dec.coset(0);
    return x0.contains(v->x) && x0.contains(v->y) && x0.contains(v->z) &&
           (v->x + v->y) % p == v->z;
  }
  if (const auto* gap = std::get_if<CoverageGap>(&w)) {
    const u64 gj = mod_pow(dec.g(), gap->j, p);
    return !sumset(dec.coset(0), dec.coset(gap->i)).contains(gj);
  }
  return !std::get<ConditionViolation>(w).details.empty();
}

}  // namespace

TEST_CASE("p = 5, m = 2 passes everything") {
  const auto dec = CosetDecomposition::build(5, 2, 2);
  CHECK(naive_check(dec).verdict);
  CHECK(fast_check(dec).verdict);
  CHECK_FALSE(naive_check(dec).witness.has_value());
  CHECK(verify_relational(dec));
}

TEST_CASE("p = 13, m = 2 fails: the squares are not sum-free") {
  const auto dec = CosetDecomposition::build(13, 2, 2);

  const auto n = naive_check(dec);
  REQUIRE_FALSE(n.verdict);
  const auto nv = std::get<SumFreeViolation>(n.witness.value());
  CHECK(nv.x == 1);
  CHECK(nv.y == 3);
  CHECK(nv.z == 4);

  const auto f = fast_check(dec);
  REQUIRE_FALSE(f.verdict);
  const auto fv = std::get<SumFreeViolation>(f.witness.value());
  CHECK(fv.z == 1);
  CHECK(witness_is_valid(dec, f.witness.value()));
  CHECK(describe(f.witness.value()).find("sum-free") != std::string::npos);

  CHECK_FALSE(verify_relational(dec));
}

TEST_CASE("p = 7, m = 3 fails with a coverage gap at the subgroup itself") {
  const auto dec = CosetDecomposition::build(7, 3, 3);

  const auto f = fast_check(dec);
  REQUIRE_FALSE(f.verdict);
  const auto gap = std::get<CoverageGap>(f.witness.value());
  CHECK(gap.i == 0);
  CHECK(gap.j == 1);
  CHECK(witness_is_valid(dec, f.witness.value()));
  CHECK(describe(f.witness.value()) == "coverage gap: g^1 not in X_0 + X_0");

  const auto n = naive_check(dec);
  REQUIRE_FALSE(n.verdict);
  const auto cv = std::get<ConditionViolation>(n.witness.value());
  CHECK(cv.tag == ConditionTag::kSelfSumset);
  CHECK(condition_tag_name(cv.tag) == "ii");
}

TEST_CASE("p = 13, m = 3 passes") {
  const u64 g = primitive_root(13);
  const auto dec = CosetDecomposition::build(13, 3, g);
  CHECK(naive_check(dec).verdict);
  CHECK(fast_check(dec).verdict);
  CHECK(verify_relational(dec));
}

TEST_CASE("m = 1 collapses to sum-freeness of the whole group") {
  // X_0 = (Z/pZ)^x contains 1 and 2, so the check always fails.
  for (u64 p : {3ull, 5ull, 11ull, 31ull}) {
    const auto dec = CosetDecomposition::build(p, 1, primitive_root(p));
    CHECK_FALSE(naive_check(dec).verdict);
    CHECK_FALSE(fast_check(dec).verdict);
  }
}

TEST_CASE("fast and naive agree exhaustively below 500") {
  for (u64 p : primes_below(500)) {
    const u64 g = primitive_root(p);
    for (u64 m : valid_ms(p)) {
      const auto dec = CosetDecomposition::build(p, m, g);
      const auto f = fast_check(dec);
      const auto n = naive_check(dec);
      INFO("p=", p, " m=", m);
      CHECK(f.verdict == n.verdict);
      CHECK(f.witness.has_value() == !f.verdict);
      CHECK(n.witness.has_value() == !n.verdict);
      if (!f.verdict) CHECK(witness_is_valid(dec, f.witness.value()));
    }
  }
}

TEST_CASE("fast and naive agree on random larger instances") {
  std::mt19937_64 rng(20260814);
  int done = 0;
  while (done < 200) {
    const u64 p = 501 + 2 * (rng() % 2250);  // odd in [501, 5000]
    if (!is_prime(p)) continue;
    const auto ms = valid_ms(p, 50);
    const u64 m = ms[rng() % ms.size()];
    const auto dec = CosetDecomposition::build(p, m, primitive_root(p));
    CHECK(fast_check(dec).verdict == naive_check(dec).verdict);
    ++done;
  }
  // a handful well past the exhaustive range
  while (done < 220) {
    const u64 p = 5001 + 2 * (rng() % 7500);  // odd in [5001, 20000]
    if (!is_prime(p)) continue;
    const auto ms = valid_ms(p, 30);
    const u64 m = ms[rng() % ms.size()];
    const auto dec = CosetDecomposition::build(p, m, primitive_root(p));
    CHECK(fast_check(dec).verdict == naive_check(dec).verdict);
    ++done;
  }
}

TEST_CASE("both checkers match the literal relation algebra for small p") {
  for (u64 p : primes_below(61)) {
    const u64 g = primitive_root(p);
    for (u64 m : valid_ms(p)) {
      const auto dec = CosetDecomposition::build(p, m, g);
      const bool rel = verify_relational(dec);
      INFO("p=", p, " m=", m);
      CHECK(fast_check(dec).verdict == rel);
      CHECK(naive_check(dec).verdict == rel);
    }
  }
}

TEST_CASE("relational verifier rejects a non-coset partition and large p") {
  const std::vector<ResidueSet> bad = {ResidueSet::of(5, {1, 2}),
                                       ResidueSet::of(5, {3, 4})};
  CHECK_FALSE(verify_relational(5, bad));
  CHECK(verify_relational(2, {ResidueSet::of(2, {1})}));
  CHECK_THROWS_AS(verify_relational(101, bad, 100), std::invalid_argument);
}

TEST_CASE("verdict does not depend on the chosen generator") {
  for (u64 p : primes_below(300)) {
    if (p < 5) continue;
    const auto [g0, g1] = two_roots(p);
    for (u64 m : valid_ms(p)) {
      const auto a = CosetDecomposition::build(p, m, g0);
      const auto b = CosetDecomposition::build(p, m, g1);
      INFO("p=", p, " m=", m, " g0=", g0, " g1=", g1);
      CHECK(fast_check(a).verdict == fast_check(b).verdict);
      CHECK(naive_check(a).verdict == naive_check(b).verdict);
    }
  }
}

TEST_CASE("coverage of (i, j) is invariant under the pairing") {
  // (g^j - X_0) meets X_i iff (g^j' - X_0) meets X_i' for the partner
  // (i', j') = ((m-i) mod m, (j-i) mod m); this is what lets the fast
  // checker test each orbit once.
  for (u64 p : primes_below(200)) {
    const u64 g = primitive_root(p);
    for (u64 m : valid_ms(p)) {
      const auto dec = CosetDecomposition::build(p, m, g);
      const auto x0 = dec.coset(0);
      std::vector<char> meets(m * m);
      u64 gj = 1;
      for (u64 j = 0; j < m; ++j) {
        const auto d = difference_from(gj, x0);
        for (u64 i = 0; i < m; ++i)
          meets[i * m + j] = d.intersects(dec.coset(i)) ? 1 : 0;
        gj = mod_mul(gj, g, p);
      }
      for (u64 i = 0; i < m; ++i)
        for (u64 j = 0; j < m; ++j) {
          const u64 pi = (m - i) % m, pj = (j + m - i) % m;
          CHECK(meets[i * m + j] == meets[pi * m + pj]);
        }
    }
  }
}

TEST_CASE("zero membership in sumsets is automatic") {
  // 0 is always in X_i + X_i and never in X_i + X_j for i != j, whether or
  // not the conditions hold, so checkers need only look at nonzero targets.
  for (u64 p : primes_below(120)) {
    const u64 g = primitive_root(p);
    for (u64 m : valid_ms(p, 12)) {
      const auto dec = CosetDecomposition::build(p, m, g);
      for (u64 i = 0; i < m; ++i) {
        CHECK(sumset(dec.coset(i), dec.coset(i)).contains(0));
        for (u64 j = i + 1; j < m; ++j)
          CHECK_FALSE(sumset(dec.coset(i), dec.coset(j)).contains(0));
      }
    }
  }
}
