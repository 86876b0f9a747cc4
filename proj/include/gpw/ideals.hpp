#pragma once

#include <optional>
#include <vector>

#include "gpw/structure.hpp"
#include "gpw/subset_algebra.hpp"

namespace gpw {

enum class IdealKind { Left, Right, TwoSided };

const char* to_string(IdealKind kind);

/// Upper bound on n for the brute-force subset enumerations below (2^n subsets).
inline constexpr std::size_t kMaxBruteForceCarrier = 12;

/// Nonempty, absorbing on the required side(s), and downward closed.
/// A left ideal absorbs MΓA, a right ideal AΓM.
bool is_ideal(const Structure& s, const Subset& a, IdealKind kind);

/// L(a) = (a ∪ MΓa], R(a) = (a ∪ aΓM], I(a) = (a ∪ MΓa ∪ aΓM ∪ MΓaΓM].
Subset principal(const Structure& s, Element a, IdealKind kind);

/// Every ideal of the given kind, found by testing all 2^n - 1 nonempty
/// subsets; ordered by cardinality, then bit pattern. Cost O(2^n n² k).
std::vector<Subset> all_ideals(const Structure& s, IdealKind kind);

/// Subsemigroup that is closed under division (aγb ∈ F ⇒ a, b ∈ F) and
/// upward closed. The empty set is not a filter.
bool is_filter(const Structure& s, const Subset& f);

/// N(x): the least filter containing x, as the fixed point of product
/// closure, division closure and upward closure starting from {x}.
Subset filter_gen(const Structure& s, Element x);

/// aγb ∈ T ⇒ a ∈ T or b ∈ T
bool is_prime(const Structure& s, const Subset& t);

/// aγa ∈ T ⇒ a ∈ T
bool is_semiprime(const Structure& s, const Subset& t);

/// For every pair of ideals A, B: AΓB ⊆ T ⇒ A ⊆ T or B ⊆ T.
/// Throws PreconditionError unless T is a two-sided ideal.
bool is_weakly_prime(const Structure& s, const Subset& t);

/// A = (AΓA]
bool is_idempotent_subset(const Structure& s, const Subset& a);

/// all_ideals(kind) is totally ordered by inclusion.
bool ideals_form_chain(const Structure& s, IdealKind kind);

struct SquareWitness {
  Element x;
  std::size_t gamma;
};

/// First (x, γ) in (x, γ) order with xγx ∈ T and x ∉ T.
std::optional<SquareWitness> find_semiprime_violation(const Structure& s, const Subset& t);

namespace detail {
/// The weakly-prime condition without the ideal precondition, for callers
/// that quantify over arbitrary subsets.
bool weakly_prime_condition(const Structure& s, const Subset& t, const std::vector<Subset>& ideals);
bool is_ideal_bits(const Structure& s, Bits a, IdealKind kind);
}  // namespace detail

}  // namespace gpw
