#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpw {

/// Element ids are dense integers 0..n-1.
using Element = std::uint32_t;

/// Carrier sizes are capped so that every subset fits in one machine word.
inline constexpr std::size_t kMaxCarrier = 64;

using Bits = std::uint64_t;

/// Identity of the structure a Subset or Partition was created for.
/// Tokens are never reused within a process.
using OwnerToken = std::uint64_t;

/// Raised when subsets or partitions of different structures are combined.
class OwnerMismatch : public std::logic_error {
 public:
  OwnerMismatch() : std::logic_error("subset belongs to a different structure") {}
};

/// A set of carrier elements bound to one Structure.
class Subset {
 public:
  Subset(OwnerToken owner, Bits bits) : owner_(owner), bits_(bits) {}

  OwnerToken owner() const { return owner_; }
  Bits bits() const { return bits_; }

  bool contains(Element e) const { return (bits_ >> e) & 1U; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  /// Smallest member; undefined on the empty set.
  Element least() const { return static_cast<Element>(std::countr_zero(bits_)); }

  bool subset_of(const Subset& o) const {
    check_owner(o);
    return (bits_ & ~o.bits_) == 0;
  }

  Subset operator|(const Subset& o) const {
    check_owner(o);
    return {owner_, bits_ | o.bits_};
  }
  Subset operator&(const Subset& o) const {
    check_owner(o);
    return {owner_, bits_ & o.bits_};
  }
  Subset operator-(const Subset& o) const {
    check_owner(o);
    return {owner_, bits_ & ~o.bits_};
  }

  Subset with(Element e) const { return {owner_, bits_ | (Bits{1} << e)}; }

  friend bool operator==(const Subset& a, const Subset& b) {
    a.check_owner(b);
    return a.bits_ == b.bits_;
  }

  /// Members in ascending order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Element>(std::countr_zero(b)));
    return out;
  }

  void check_owner(const Subset& o) const {
    if (owner_ != o.owner_) throw OwnerMismatch();
  }

 private:
  OwnerToken owner_;
  Bits bits_;
};

/// Iterate the set bits of a word in ascending order.
template <class F>
inline void for_each_bit(Bits bits, F&& f) {
  for (; bits != 0; bits &= bits - 1) f(static_cast<Element>(std::countr_zero(bits)));
}

/// Mask with the low n bits set.
inline constexpr Bits low_bits(std::size_t n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }

/// Inclusion order used for every deterministic subset listing:
/// cardinality first, then the numeric bit pattern.
inline bool popcount_then_bits(Bits a, Bits b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace gpw
