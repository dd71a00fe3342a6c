#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ramsey/coset.hpp"
#include "ramsey/residue_set.hpp"

namespace ramsey {

// Full-length transform of a characteristic function:
// coeffs[t] = sum over a in A of exp(-2*pi*i * a*t / p).
struct Spectrum {
  u64 p = 0;
  std::vector<std::complex<double>> coeffs;
};

// Chirp-z (Bluestein) evaluation, O(p log p) for arbitrary p.
Spectrum transform(const ResidueSet& a);

// Exact count of ordered triples (x, y, z) in A^3 with x + y == z (mod p).
std::int64_t count_schur_naive(const ResidueSet& a);

// Same count through (1/p) * sum over k of C(k)^2 * C(-k) where C is the
// transform of the characteristic function; algebraically exact, so the
// rounded value must match count_schur_naive. Throws std::runtime_error
// when the imaginary residual or the distance to the nearest integer
// exceeds 1e-6 * max(1, N).
std::int64_t count_schur_fourier(const ResidueSet& a);

// Additive quasirandomness of X_0: delta = |X_0|/p, alpha_max the largest
// normalized nontrivial coefficient modulus. alpha_max < delta^2 forces at
// least (delta^3 - alpha_max*delta) * p^2 Schur triples, so it certifies
// that X_0 is not sum-free.
struct FourierProfile {
  u64 p = 0;
  u64 m = 0;
  double delta = 0;
  double alpha_max = 0;
  double threshold = 0;  // delta^2
  bool certified_not_sumfree = false;
  double solution_lower_bound = 0;
  std::int64_t solutions_exact = 0;
};

FourierProfile uniformity_profile(const CosetDecomposition& dec);

// One profile per prime p == 1 (mod 2m) in [lo, hi], ascending.
std::vector<FourierProfile> scan_uniformity(u64 m, u64 lo, u64 hi);

}  // namespace ramsey
