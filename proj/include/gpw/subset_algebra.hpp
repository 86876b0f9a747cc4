#pragma once

#include <span>
#include <variant>

#include "gpw/structure.hpp"

namespace gpw {

/// (A] = {t | t <= a for some a in A}
Subset downset(const Structure& s, const Subset& a);

/// {t | t >= a for some a in A}
Subset upset(const Structure& s, const Subset& a);

/// AΓB = {a γ b | a in A, b in B, γ in Γ}
Subset gamma_product(const Structure& s, const Subset& a, const Subset& b);

/// AΓBΓC, evaluated left to right.
Subset gamma_product(const Structure& s, const Subset& a, const Subset& b, const Subset& c);

/// A subset closed under every operation. Empty subsets are not subsemigroups.
bool is_subsemigroup(const Structure& s, const Subset& t);

/// One letter of a Γ-word: an element or an operation.
using WordItem = std::variant<Element, Op>;

/// Evaluates e0 γ0 e1 γ1 ... em. Throws InputError unless the items
/// alternate element, operation, element, ... and end on an element.
Element word_product(const Structure& s, std::span<const WordItem> items);

namespace detail {
// Word-level kernels over raw bit patterns; callers guarantee ownership.
Bits down(const Structure& s, Bits a);
Bits product(const Structure& s, Bits a, Bits b);
}  // namespace detail

}  // namespace gpw
