#include "gpw/subset_algebra.hpp"

#include <cassert>
#include <vector>

namespace gpw {

namespace {

void require_owner(const Structure& s, const Subset& a) {
  if (a.owner() != s.token()) throw OwnerMismatch();
}

}  // namespace

namespace detail {

Bits down(const Structure& s, Bits a) {
  Bits out = 0;
  for_each_bit(a, [&](Element e) { out |= s.below(e); });
  return out;
}

Bits product(const Structure& s, Bits a, Bits b) {
  Bits out = 0;
  const std::size_t k = s.gamma_count();
  for_each_bit(a, [&](Element x) {
    for_each_bit(b, [&](Element y) {
      for (std::size_t g = 0; g < k; ++g) out |= Bits{1} << s.mul(x, g, y);
    });
  });
  return out;
}

}  // namespace detail

Subset downset(const Structure& s, const Subset& a) {
  require_owner(s, a);
  return {s.token(), detail::down(s, a.bits())};
}

Subset upset(const Structure& s, const Subset& a) {
  require_owner(s, a);
  Bits out = 0;
  for_each_bit(a.bits(), [&](Element e) { out |= s.above(e); });
  return {s.token(), out};
}

Subset gamma_product(const Structure& s, const Subset& a, const Subset& b) {
  require_owner(s, a);
  require_owner(s, b);
  return {s.token(), detail::product(s, a.bits(), b.bits())};
}

Subset gamma_product(const Structure& s, const Subset& a, const Subset& b, const Subset& c) {
  return gamma_product(s, gamma_product(s, a, b), c);
}

bool is_subsemigroup(const Structure& s, const Subset& t) {
  require_owner(s, t);
  if (t.empty()) return false;
  return (detail::product(s, t.bits(), t.bits()) & ~t.bits()) == 0;
}

Element word_product(const Structure& s, std::span<const WordItem> items) {
  if (items.empty() || items.size() % 2 == 0)
    throw InputError("a Γ-word must have odd length, starting and ending with an element");
  std::vector<Element> elems;
  std::vector<std::size_t> ops;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i % 2 == 0) {
      const auto* e = std::get_if<Element>(&items[i]);
      if (e == nullptr) throw InputError("expected an element at position " + std::to_string(i));
      if (*e >= s.size()) throw InputError("element " + std::to_string(*e) + " out of range");
      elems.push_back(*e);
    } else {
      const auto* g = std::get_if<Op>(&items[i]);
      if (g == nullptr) throw InputError("expected an operation at position " + std::to_string(i));
      if (g->index >= s.gamma_count()) throw InputError("operation index out of range");
      ops.push_back(g->index);
    }
  }
  Element acc = elems[0];
  for (std::size_t i = 0; i < ops.size(); ++i) acc = s.mul(acc, ops[i], elems[i + 1]);
#ifndef NDEBUG
  Element racc = elems.back();
  for (std::size_t i = ops.size(); i-- > 0;) racc = s.mul(elems[i], ops[i], racc);
  assert(acc == racc && "mixed associativity violated");
#endif
  return acc;
}

}  // namespace gpw
