#include "ramsey/coset.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

CosetDecomposition CosetDecomposition::build(u64 p, u64 m, u64 g) {
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument("CosetDecomposition: p must be an odd prime");
  if (m < 1 || (p - 1) % m != 0)
    throw std::invalid_argument("CosetDecomposition: m must divide p-1");
  const u64 k = (p - 1) / m;
  if (k % 2 != 0)
    throw std::invalid_argument("CosetDecomposition: (p-1)/m must be even");
  if (m >= kNoLabel)
    throw std::invalid_argument("CosetDecomposition: m too large for label storage");
  if (g < 2 || g >= p)
    throw std::invalid_argument("CosetDecomposition: g must lie in [2, p)");

  CosetDecomposition dec;
  dec.p_ = p;
  dec.m_ = m;
  dec.k_ = k;
  dec.g_ = g;
  dec.labels_.assign(p, kNoLabel);

  u64 cur = 1;
  for (u64 t = 0; t < p - 1; ++t) {
    if (dec.labels_[cur] != kNoLabel)
      throw std::invalid_argument("CosetDecomposition: g is not a primitive root");
    dec.labels_[cur] = static_cast<std::uint16_t>(t % m);
    cur = mod_mul(cur, g, p);
  }
  return dec;
}

u64 CosetDecomposition::label_of(u64 r) const {
  if (r == 0 || r >= p_)
    throw std::out_of_range("label_of: residue must be in [1, p)");
  return labels_[r];
}

ResidueSet CosetDecomposition::coset(u64 i) const {
  if (i >= m_) throw std::out_of_range("coset: label out of range");
  ResidueSet x(p_);
  const u64 step = mod_pow(g_, m_, p_);
  u64 cur = mod_pow(g_, i, p_);
  for (u64 a = 0; a < k_; ++a) {
    x.insert(cur);
    cur = mod_mul(cur, step, p_);
  }
  return x;
}

}  // namespace ramsey
