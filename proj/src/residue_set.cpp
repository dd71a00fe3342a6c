#include "ramsey/residue_set.hpp"

#include <stdexcept>

namespace ramsey {

ResidueSet::ResidueSet(u64 modulus)
    : p_(modulus), size_(0), words_((modulus + 63) / 64, 0) {
  if (modulus < 2) throw std::invalid_argument("ResidueSet: modulus must be >= 2");
}

ResidueSet ResidueSet::of(u64 modulus, std::initializer_list<u64> members) {
  ResidueSet s(modulus);
  for (u64 r : members) s.insert(r);
  return s;
}

ResidueSet ResidueSet::full(u64 modulus) {
  ResidueSet s(modulus);
  for (auto& w : s.words_) w = ~0ull;
  s.clear_tail();
  s.size_ = modulus;
  return s;
}

void ResidueSet::insert(u64 r) {
  if (r >= p_) throw std::out_of_range("ResidueSet::insert: residue out of range");
  u64& w = words_[r >> 6];
  const u64 mask = 1ull << (r & 63);
  if (!(w & mask)) {
    w |= mask;
    ++size_;
  }
}

void ResidueSet::erase(u64 r) {
  if (r >= p_) throw std::out_of_range("ResidueSet::erase: residue out of range");
  u64& w = words_[r >> 6];
  const u64 mask = 1ull << (r & 63);
  if (w & mask) {
    w &= ~mask;
    --size_;
  }
}

void ResidueSet::clear_tail() {
  const u64 used = p_ & 63;
  if (used) words_.back() &= (1ull << used) - 1;
}

void ResidueSet::recount() {
  u64 n = 0;
  for (u64 w : words_) n += static_cast<u64>(std::popcount(w));
  size_ = n;
}

void ResidueSet::check_same_modulus(const ResidueSet& other) const {
  if (p_ != other.p_)
    throw std::invalid_argument("ResidueSet: modulus mismatch");
}

void ResidueSet::or_translated(const ResidueSet& src, u64 c) {
  check_same_modulus(src);
  c %= p_;
  const std::size_t nw = words_.size();
  if (c == 0) {
    for (std::size_t i = 0; i < nw; ++i) words_[i] |= src.words_[i];
    recount();
    return;
  }
  // Rotate src left by c within p_ bits, OR into *this.
  // Bits [c, p): src shifted left by c.
  const std::size_t ws = c >> 6, bs = c & 63;
  for (std::size_t i = nw; i-- > ws;) {
    u64 v = src.words_[i - ws] << bs;
    if (bs && i > ws) v |= src.words_[i - ws - 1] >> (64 - bs);
    words_[i] |= v;
  }
  // Bits [0, c): src bits [p-c, p) wrap to the bottom.
  const u64 k = p_ - c;
  const std::size_t kw = k >> 6, kb = k & 63;
  for (std::size_t i = 0; i + kw < nw; ++i) {
    u64 v = src.words_[i + kw] >> kb;
    if (kb && i + kw + 1 < nw) v |= src.words_[i + kw + 1] << (64 - kb);
    words_[i] |= v;
  }
  clear_tail();
  recount();
}

ResidueSet ResidueSet::translated(u64 c) const {
  ResidueSet out(p_);
  out.or_translated(*this, c);
  return out;
}

ResidueSet ResidueSet::negated() const {
  ResidueSet out(p_);
  for_each([&](u64 r) { out.insert(r == 0 ? 0 : p_ - r); });
  return out;
}

ResidueSet ResidueSet::difference_from(u64 c) const {
  return negated().translated(c % p_);
}

ResidueSet ResidueSet::complement() const {
  ResidueSet out(p_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.clear_tail();
  out.size_ = p_ - size_;
  return out;
}

bool ResidueSet::intersects(const ResidueSet& other) const {
  check_same_modulus(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

ResidueSet ResidueSet::operator&(const ResidueSet& other) const {
  check_same_modulus(other);
  ResidueSet out(p_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] & other.words_[i];
  out.recount();
  return out;
}

ResidueSet ResidueSet::operator|(const ResidueSet& other) const {
  check_same_modulus(other);
  ResidueSet out(p_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] | other.words_[i];
  out.recount();
  return out;
}

bool ResidueSet::operator==(const ResidueSet& other) const {
  return p_ == other.p_ && words_ == other.words_;
}

std::vector<u64> ResidueSet::members() const {
  std::vector<u64> out;
  out.reserve(size_);
  for_each([&](u64 r) { out.push_back(r); });
  return out;
}

u64 ResidueSet::smallest() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return (i << 6) + static_cast<u64>(std::countr_zero(words_[i]));
  throw std::logic_error("ResidueSet::smallest: set is empty");
}

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("sumset: modulus mismatch");
  ResidueSet out(a.modulus());
  a.for_each([&](u64 x) { out.or_translated(b, x); });
  return out;
}

ResidueSet translate(const ResidueSet& a, u64 c) { return a.translated(c); }

ResidueSet negate(const ResidueSet& a) { return a.negated(); }

ResidueSet difference_from(u64 c, const ResidueSet& a) {
  return a.difference_from(c);
}

bool is_sumfree(const ResidueSet& a) {
  bool clash = false;
  a.for_each([&](u64 x) {
    if (!clash && a.translated(x).intersects(a)) clash = true;
  });
  return !clash;
}

}  // namespace ramsey
