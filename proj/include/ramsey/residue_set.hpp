#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ramsey/modarith.hpp"

namespace ramsey {

// Dense bitset over Z/pZ. Bits at positions >= p are kept zero.
// Immutable in spirit: set algebra returns fresh sets; insert/erase are
// for construction only.
class ResidueSet {
 public:
  explicit ResidueSet(u64 modulus);
  static ResidueSet of(u64 modulus, std::initializer_list<u64> members);
  static ResidueSet full(u64 modulus);

  u64 modulus() const { return p_; }
  u64 size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(u64 r) const {
    return (words_[r >> 6] >> (r & 63)) & 1ull;
  }
  void insert(u64 r);
  void erase(u64 r);

  ResidueSet translated(u64 c) const;       // {a + c mod p}
  ResidueSet negated() const;               // {-a mod p}
  ResidueSet difference_from(u64 c) const;  // {c - a mod p}
  ResidueSet complement() const;            // Z/pZ minus this

  // this |= (src + c); word-parallel, no allocation.
  void or_translated(const ResidueSet& src, u64 c);

  bool intersects(const ResidueSet& other) const;
  ResidueSet operator&(const ResidueSet& other) const;
  ResidueSet operator|(const ResidueSet& other) const;
  bool operator==(const ResidueSet& other) const;

  std::vector<u64> members() const;  // ascending
  u64 smallest() const;              // requires non-empty

  template <typename F>
  void for_each(F&& f) const {
    for (u64 w = 0; w < words_.size(); ++w) {
      u64 bits = words_[w];
      while (bits) {
        f((w << 6) + static_cast<u64>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  u64 p_;
  u64 size_;
  std::vector<u64> words_;

  void clear_tail();
  void recount();
  void check_same_modulus(const ResidueSet& other) const;
};

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b);
ResidueSet translate(const ResidueSet& a, u64 c);
ResidueSet negate(const ResidueSet& a);
ResidueSet difference_from(u64 c, const ResidueSet& a);

// No x, y, z in A with x + y == z (mod p); x == y allowed.
bool is_sumfree(const ResidueSet& a);

}  // namespace ramsey
