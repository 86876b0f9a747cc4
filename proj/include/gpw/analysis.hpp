#pragma once

#include <optional>
#include <vector>

#include "gpw/ideals.hpp"
#include "gpw/relations.hpp"

namespace gpw {

// Regularity. Each pinned form fixes the middle operation γ and lets the
// outer Γ positions range freely; the legacy forms let every position range.

/// First (x, γ) with x ∉ (MΓxγxΓM].
std::optional<SquareWitness> find_intra_regular_violation(const Structure& s);
bool is_intra_regular(const Structure& s);

/// First x with x ∉ (MΓxΓxΓM].
std::optional<Element> find_intra_regular_legacy_violation(const Structure& s);
bool is_intra_regular_legacy(const Structure& s);

/// x ∈ (MΓxγx] for every x, γ.
bool is_left_regular(const Structure& s);
/// x ∈ (xγxΓM] for every x, γ.
bool is_right_regular(const Structure& s);
/// x ∈ (MΓxΓx]
bool is_left_regular_legacy(const Structure& s);
/// x ∈ (xΓxΓM]
bool is_right_regular_legacy(const Structure& s);

/// Every left (right) ideal is two-sided.
bool is_left_duo(const Structure& s);
bool is_right_duo(const Structure& s);

// Ideals of a subsemigroup T use T's products and the order restricted to T:
// A ⊆ T nonempty, TΓA ⊆ A (left) and/or AΓT ⊆ A (right), and
// b ∈ T, b <= a ∈ A ⇒ b ∈ A.

/// Throws PreconditionError unless T is a subsemigroup.
bool is_relative_ideal(const Structure& s, const Subset& t, const Subset& a, IdealKind kind);

/// All relative ideals of T, ordered by cardinality then bit pattern.
/// Throws PreconditionError unless T is a subsemigroup.
std::vector<Subset> relative_ideals(const Structure& s, const Subset& t, IdealKind kind);

/// T is its own only ideal of the given kind.
bool is_simple(const Structure& s, const Subset& t, IdealKind kind = IdealKind::TwoSided);
bool is_left_simple(const Structure& s, const Subset& t);
bool is_right_simple(const Structure& s, const Subset& t);

struct BlockVerdict {
  bool is_subsemigroup = false;
  bool is_simple = false;
  bool is_left_simple = false;
  bool is_right_simple = false;
};

struct ChainWitness {
  Element x;
  Element y;
  std::size_t gamma;
};

struct DecompositionReport {
  Partition partition;
  std::vector<BlockVerdict> class_verdicts;
  bool is_semilattice_congruence = false;
  bool is_semilattice_of_simple = false;
  bool is_semilattice_of_left_simple = false;
  bool is_semilattice_of_right_simple = false;
  /// (x)σ = (xγy)σ or (y)σ = (xγy)σ for all x, y, γ.
  bool chain_condition = false;
  bool is_chain_of_simple = false;
  std::optional<ChainWitness> chain_witness_failure;
  /// Secondary view: block i ⪯ block j iff (x)σ = (xγy)σ for all γ, with
  /// x, y the least elements of the blocks. Pairs (i, j), i ≠ j.
  std::vector<std::pair<std::size_t, std::size_t>> preceq;
  bool preceq_is_chain = false;
};

/// Decomposition along the N-classes.
DecompositionReport decompose(const Structure& s);

/// Decomposition along an arbitrary partition σ; the semilattice verdicts
/// also require σ to be a semilattice congruence.
DecompositionReport decompose_with(const Structure& s, const Partition& sigma);

/// Inclusion-maximal simple (or left/right simple) subsemigroups, by brute
/// force over all subsets; ordered by cardinality then bit pattern.
std::vector<Subset> maximal_simple_subsemigroups(const Structure& s,
                                                 IdealKind kind = IdealKind::TwoSided);

/// (MΓaΓM], (MΓa] and (aΓM].
Subset two_sided_core(const Structure& s, Element a);
Subset left_core(const Structure& s, Element a);
Subset right_core(const Structure& s, Element a);

}  // namespace gpw
