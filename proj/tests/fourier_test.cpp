#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ramsey/coset.hpp"
#include "ramsey/fourier.hpp"
#include "ramsey/modarith.hpp"
#include "ramsey/residue_set.hpp"

using namespace ramsey;

namespace {

using cd = std::complex<double>;

// Oracle: direct O(p^2) summation, reducing a*t mod p before taking angles.
std::vector<cd> dft_direct(const ResidueSet& a) {
  const u64 p = a.modulus();
  std::vector<cd> out(p);
  for (u64 t = 0; t < p; ++t) {
    cd acc = 0;
    a.for_each([&](u64 x) {
      const u64 r = static_cast<u64>((u128(x) * t) % p);
      acc += std::polar(1.0, -2.0 * std::numbers::pi * double(r) / double(p));
    });
    out[t] = acc;
  }
  return out;
}

double max_err(const std::vector<cd>& got, const std::vector<cd>& want) {
  double e = 0;
  for (std::size_t i = 0; i < got.size(); ++i)
    e = std::max(e, std::abs(got[i] - want[i]));
  return e;
}

ResidueSet random_subset(u64 p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution coin(unit(rng));
  ResidueSet s(p);
  for (u64 x = 0; x < p; ++x)
    if (coin(rng)) s.insert(x);
  return s;
}

std::vector<u64> primes_below(u64 hi) {
  std::vector<u64> out;
  for (u64 p = 2; p < hi; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("closed-form spectra") {
  const auto full = transform(ResidueSet::full(97));
  CHECK(std::abs(full.coeffs[0] - cd(97.0)) < 1e-9);
  for (u64 t = 1; t < 97; ++t) CHECK(std::abs(full.coeffs[t]) < 1e-9);

  const auto point = transform(ResidueSet::of(101, {7}));
  for (u64 t = 0; t < 101; ++t) {
    CHECK(std::abs(point.coeffs[t]) == doctest::Approx(1.0).epsilon(1e-9));
    const double want = -2.0 * std::numbers::pi * double((7 * t) % 101) / 101.0;
    CHECK(std::abs(point.coeffs[t] - std::polar(1.0, want)) < 1e-9);
  }

  const auto tiny = transform(ResidueSet::of(2, {1}));
  CHECK(std::abs(tiny.coeffs[0] - cd(1.0)) < 1e-12);
  CHECK(std::abs(tiny.coeffs[1] - cd(-1.0)) < 1e-12);

  // {1, 4} mod 5 = {1, -1}: coefficients 2*cos(2*pi*t/5), all real
  const auto s5 = transform(ResidueSet::of(5, {1, 4}));
  for (u64 t = 0; t < 5; ++t) {
    const double want = 2.0 * std::cos(2.0 * std::numbers::pi * double(t) / 5.0);
    CHECK(s5.coeffs[t].real() == doctest::Approx(want).epsilon(1e-12));
    CHECK(std::abs(s5.coeffs[t].imag()) < 1e-12);
  }
}

TEST_CASE("chirp-z agrees with direct summation") {
  std::mt19937_64 rng(99);
  for (u64 p : {2ull, 3ull, 5ull, 16ull, 64ull, 97ull, 101ull, 128ull, 499ull,
                1000ull, 1009ull}) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto a = random_subset(p, rng);
      const auto spec = transform(a);
      REQUIRE(spec.coeffs.size() == p);
      CHECK(max_err(spec.coeffs, dft_direct(a)) < 1e-8);
    }
  }
}

TEST_CASE("spectrum invariants") {
  std::mt19937_64 rng(7);
  for (u64 p : {11ull, 64ull, 499ull}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto a = random_subset(p, rng);
      const auto spec = transform(a);
      // mass at zero, Parseval, conjugate symmetry
      CHECK(spec.coeffs[0].real() == doctest::Approx(double(a.size())).epsilon(1e-9));
      CHECK(std::abs(spec.coeffs[0].imag()) < 1e-8);
      double power = 0;
      for (const auto& c : spec.coeffs) power += std::norm(c);
      CHECK(power == doctest::Approx(double(p) * double(a.size())).epsilon(1e-9));
      for (u64 t = 1; t < p; ++t)
        CHECK(std::abs(spec.coeffs[p - t] - std::conj(spec.coeffs[t])) < 1e-8);
    }
  }
}

TEST_CASE("schur counts, small closed forms") {
  CHECK(count_schur_naive(ResidueSet::of(5, {1, 4})) == 0);
  CHECK(count_schur_fourier(ResidueSet::of(5, {1, 4})) == 0);
  CHECK(count_schur_naive(ResidueSet::of(7, {0})) == 1);
  CHECK(count_schur_naive(ResidueSet::full(11)) == 121);
  CHECK(count_schur_fourier(ResidueSet::full(11)) == 121);
  CHECK(count_schur_naive(ResidueSet(13)) == 0);
  CHECK(count_schur_fourier(ResidueSet(13)) == 0);
  // x + y == z has |A|^2 solutions when A is a subgroup containing 0... not
  // here; spot-check one worked value instead: squares mod 13
  const auto qr = ResidueSet::of(13, {1, 3, 4, 9, 10, 12});
  CHECK(count_schur_naive(qr) == count_schur_fourier(qr));
  CHECK(count_schur_naive(qr) > 0);
}

TEST_CASE("fourier count matches naive count on random subsets") {
  std::mt19937_64 rng(20260814);
  for (u64 p : {11ull, 101ull, 499ull, 1009ull}) {
    for (int rep = 0; rep < 50; ++rep) {
      const auto a = random_subset(p, rng);
      CHECK(count_schur_fourier(a) == count_schur_naive(a));
    }
  }
}

TEST_CASE("count is sum-freeness sensitive") {
  std::mt19937_64 rng(5);
  for (u64 p : {11ull, 101ull}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_subset(p, rng);
      CHECK((count_schur_naive(a) == 0) == is_sumfree(a));
    }
  }
}

TEST_CASE("profile of the squares mod 5") {
  const auto dec = CosetDecomposition::build(5, 2, 2);
  const auto prof = uniformity_profile(dec);
  CHECK(prof.p == 5);
  CHECK(prof.m == 2);
  CHECK(prof.delta == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(prof.threshold == doctest::Approx(0.16).epsilon(1e-12));
  // alpha_max = 2*cos(pi/5)/5 = golden ratio over 5
  CHECK(prof.alpha_max == doctest::Approx(0.3236067977).epsilon(1e-8));
  CHECK_FALSE(prof.certified_not_sumfree);
  CHECK(prof.solutions_exact == 0);
}

TEST_CASE("coefficients are constant on cosets") {
  for (u64 p : {13ull, 29ull, 199ull}) {
    const u64 g = primitive_root(p);
    for (u64 m = 1; m < 10; ++m) {
      if ((p - 1) % m != 0 || ((p - 1) / m) % 2 != 0) continue;
      const auto dec = CosetDecomposition::build(p, m, g);
      const auto spec = transform(dec.coset(0));
      for (u64 i = 0; i < m; ++i) {
        const auto xi = dec.coset(i);
        const cd ref = spec.coeffs[xi.smallest()];
        xi.for_each([&](u64 t) { CHECK(std::abs(spec.coeffs[t] - ref) < 1e-8); });
      }
    }
  }
}

TEST_CASE("gauss bound on nontrivial coefficients") {
  // |C(t)| <= ((m-1)*sqrt(p) + 1)/m for t != 0, so alpha_max < 1/sqrt(p).
  for (u64 p : primes_below(2000)) {
    if (p < 3) continue;
    const u64 g = primitive_root(p);
    for (u64 m = 1; m <= 12; ++m) {
      if ((p - 1) % m != 0 || ((p - 1) / m) % 2 != 0) continue;
      const auto prof = uniformity_profile(CosetDecomposition::build(p, m, g));
      const double gauss =
          (double(m - 1) * std::sqrt(double(p)) + 1.0) / (double(m) * double(p));
      CHECK(prof.alpha_max <= gauss + 1e-9);
      CHECK(prof.alpha_max < 1.0 / std::sqrt(double(p)));
    }
  }
}

TEST_CASE("certificates are sound") {
  int certified = 0;
  for (u64 m = 2; m <= 5; ++m) {
    for (const auto& prof : scan_uniformity(m, 2, 3000)) {
      CHECK(prof.solutions_exact >= 0);
      if (prof.certified_not_sumfree) {
        ++certified;
        CHECK(prof.alpha_max < prof.threshold);
        CHECK(prof.solution_lower_bound > 0);
        CHECK(double(prof.solutions_exact) >= prof.solution_lower_bound - 1e-6);
      }
    }
  }
  CHECK(certified > 0);  // the scan range is wide enough to certify some
}

TEST_CASE("scan output is ordered and filtered") {
  const auto profs = scan_uniformity(3, 2, 500);
  const auto ps = primes_in_progression(3, 2, 500);
  REQUIRE(profs.size() == ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(profs[i].p == ps[i]);
    CHECK(profs[i].m == 3);
  }
}

TEST_CASE("first admissible prime past the m = 13 window is certified") {
  const auto ps = primes_in_progression(13, 28567, 40000);
  REQUIRE_FALSE(ps.empty());
  const auto dec = CosetDecomposition::build(ps[0], 13, primitive_root(ps[0]));
  const auto prof = uniformity_profile(dec);
  CHECK(prof.certified_not_sumfree);
  CHECK(prof.solutions_exact > 0);
}
