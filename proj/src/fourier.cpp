#include "ramsey/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ramsey {

namespace {

using cd = std::complex<double>;

// Iterative radix-2 FFT; a.size() must be a power of two.
void fft(std::vector<cd>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // twiddles for the largest stage, strided into for smaller ones
  thread_local std::vector<cd> table;
  thread_local std::size_t table_n = 0;
  if (table_n != n) {
    table.resize(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j)
      table[j] = std::polar(1.0, -2.0 * std::numbers::pi * double(j) / double(n));
    table_n = n;
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        cd w = table[j * stride];
        if (inverse) w = std::conj(w);
        const cd u = a[i + j];
        const cd v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
  if (inverse)
    for (auto& v : a) v /= double(n);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t r = 1;
  while (r < n) r <<= 1;
  return r;
}

}  // namespace

Spectrum transform(const ResidueSet& a) {
  const u64 n = a.modulus();
  Spectrum spec;
  spec.p = n;

  // Chirp w[k] = exp(-i*pi*k^2/n); k^2 reduced mod 2n keeps angles small.
  std::vector<cd> chirp(n);
  for (u64 k = 0; k < n; ++k) {
    const u64 ksq = (u64)((u128(k) * k) % (2 * n));
    chirp[k] = std::polar(1.0, -std::numbers::pi * double(ksq) / double(n));
  }

  const std::size_t len = next_pow2(2 * static_cast<std::size_t>(n) - 1);
  std::vector<cd> fa(len), fb(len);
  a.for_each([&](u64 k) { fa[k] = chirp[k]; });
  fb[0] = 1.0;
  for (u64 k = 1; k < n; ++k) fb[k] = fb[len - k] = std::conj(chirp[k]);

  fft(fa, false);
  fft(fb, false);
  for (std::size_t i = 0; i < len; ++i) fa[i] *= fb[i];
  fft(fa, true);

  spec.coeffs.resize(n);
  for (u64 t = 0; t < n; ++t) spec.coeffs[t] = chirp[t] * fa[t];
  return spec;
}

std::int64_t count_schur_naive(const ResidueSet& a) {
  const u64 p = a.modulus();
  const auto xs = a.members();
  std::int64_t count = 0;
  for (u64 x : xs) {
    for (u64 y : xs) {
      u64 z = x + y;
      if (z >= p) z -= p;
      count += a.contains(z);
    }
  }
  return count;
}

std::int64_t count_schur_fourier(const ResidueSet& a) {
  const Spectrum spec = transform(a);
  const u64 p = spec.p;
  cd sum = 0;
  for (u64 k = 0; k < p; ++k) {
    const cd c = spec.coeffs[k];
    const cd cneg = spec.coeffs[k == 0 ? 0 : p - k];
    sum += c * c * cneg;
  }
  sum /= double(p);
  const double n = sum.real();
  const double rounded = std::round(n);
  const double tol = 1e-6 * std::max(1.0, std::abs(n));
  if (std::abs(sum.imag()) > tol || std::abs(n - rounded) > tol)
    throw std::runtime_error("count_schur_fourier: numerical breakdown");
  return static_cast<std::int64_t>(rounded);
}

FourierProfile uniformity_profile(const CosetDecomposition& dec) {
  const ResidueSet x0 = dec.coset(0);
  const Spectrum spec = transform(x0);
  const u64 p = dec.p();

  FourierProfile prof;
  prof.p = p;
  prof.m = dec.m();
  prof.delta = double(p - 1) / (double(dec.m()) * double(p));
  double max_mod = 0;
  for (u64 k = 1; k < p; ++k)
    max_mod = std::max(max_mod, std::abs(spec.coeffs[k]));
  prof.alpha_max = max_mod / double(p);
  prof.threshold = prof.delta * prof.delta;
  prof.certified_not_sumfree = prof.alpha_max < prof.threshold;
  prof.solution_lower_bound =
      (prof.delta * prof.delta * prof.delta - prof.alpha_max * prof.delta) *
      double(p) * double(p);
  prof.solutions_exact = count_schur_naive(x0);
  return prof;
}

std::vector<FourierProfile> scan_uniformity(u64 m, u64 lo, u64 hi) {
  std::vector<FourierProfile> out;
  for (u64 p : primes_in_progression(m, lo, hi)) {
    const auto dec = CosetDecomposition::build(p, m, primitive_root(p));
    out.push_back(uniformity_profile(dec));
  }
  return out;
}

}  // namespace ramsey
