#pragma once

#include <functional>
#include <vector>

#include "gpw/structure.hpp"

namespace gpw {

/// An equivalence relation on the carrier, stored as blocks ordered by
/// their least element.
class Partition {
 public:
  /// labels[e] is any block key for element e; equal keys share a block.
  static Partition from_labels(const Structure& s, const std::vector<std::size_t>& labels);

  OwnerToken owner() const { return owner_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Subset>& blocks() const { return blocks_; }
  std::size_t class_of(Element e) const { return class_of_[e]; }
  const Subset& block_of(Element e) const { return blocks_[class_of_[e]]; }
  bool same(Element a, Element b) const { return class_of_[a] == class_of_[b]; }

  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.owner_ == b.owner_ && a.class_of_ == b.class_of_;
  }

 private:
  Partition() = default;
  OwnerToken owner_ = 0;
  std::vector<std::size_t> class_of_;
  std::vector<Subset> blocks_;
};

enum class Relation { L, R, I, N };

const char* to_string(Relation r);

/// Classes of equal L(·), R(·), I(·) or N(·).
Partition relation_partition(const Structure& s, Relation which);

/// (a,b) ∈ σ ⇒ (aγc, bγc) ∈ σ and (cγa, cγb) ∈ σ
bool is_congruence(const Structure& s, const Partition& p);

/// Congruence with (aγb, bγa) ∈ σ and (aγa, a) ∈ σ.
bool is_semilattice_congruence(const Structure& s, const Partition& p);

/// Semilattice congruence with a <= b ⇒ (a, aγb) ∈ σ.
bool is_complete_semilattice_congruence(const Structure& s, const Partition& p);

/// Cap on n for exhaustive partition enumeration (Bell(5) = 52).
inline constexpr std::size_t kMaxPartitionEnumCarrier = 5;

/// Calls `visit` for every partition of the carrier in restricted-growth
/// order; stops early when it returns false. Throws PreconditionError above
/// kMaxPartitionEnumCarrier.
void for_each_partition(const Structure& s, const std::function<bool(const Partition&)>& visit);

}  // namespace gpw
