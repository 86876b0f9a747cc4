#include "gpw/ideals.hpp"

#include <algorithm>

namespace gpw {

namespace {

void require_owner(const Structure& s, const Subset& a) {
  if (a.owner() != s.token()) throw OwnerMismatch();
}

void require_brute_force_size(const Structure& s) {
  if (s.size() > kMaxBruteForceCarrier)
    throw PreconditionError("subset enumeration supports n <= " + std::to_string(kMaxBruteForceCarrier));
}

bool absorbs(const Structure& s, Bits a, IdealKind kind) {
  const Bits m = low_bits(s.size());
  if (kind != IdealKind::Right && (detail::product(s, m, a) & ~a) != 0) return false;
  if (kind != IdealKind::Left && (detail::product(s, a, m) & ~a) != 0) return false;
  return true;
}

bool chain(const std::vector<Subset>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].subset_of(sets[j]) && !sets[j].subset_of(sets[i])) return false;
  return true;
}

}  // namespace

const char* to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::Left: return "left";
    case IdealKind::Right: return "right";
    case IdealKind::TwoSided: return "two_sided";
  }
  return "?";
}

namespace detail {

bool is_ideal_bits(const Structure& s, Bits a, IdealKind kind) {
  if (a == 0) return false;
  if (detail::down(s, a) != a) return false;
  return absorbs(s, a, kind);
}

bool weakly_prime_condition(const Structure& s, const Subset& t, const std::vector<Subset>& ideals) {
  for (const auto& a : ideals)
    for (const auto& b : ideals) {
      if (!gamma_product(s, a, b).subset_of(t)) continue;
      if (!a.subset_of(t) && !b.subset_of(t)) return false;
    }
  return true;
}

}  // namespace detail

bool is_ideal(const Structure& s, const Subset& a, IdealKind kind) {
  require_owner(s, a);
  return detail::is_ideal_bits(s, a.bits(), kind);
}

Subset principal(const Structure& s, Element a, IdealKind kind) {
  const Subset m = s.full();
  const Subset x = s.singleton(a);
  Subset gen = x;
  if (kind != IdealKind::Right) gen = gen | gamma_product(s, m, x);
  if (kind != IdealKind::Left) gen = gen | gamma_product(s, x, m);
  if (kind == IdealKind::TwoSided) gen = gen | gamma_product(s, m, x, m);
  return downset(s, gen);
}

std::vector<Subset> all_ideals(const Structure& s, IdealKind kind) {
  require_brute_force_size(s);
  std::vector<Bits> found;
  const Bits limit = Bits{1} << s.size();
  for (Bits a = 1; a < limit; ++a)
    if (detail::is_ideal_bits(s, a, kind)) found.push_back(a);
  std::sort(found.begin(), found.end(), popcount_then_bits);
  std::vector<Subset> out;
  out.reserve(found.size());
  for (Bits a : found) out.emplace_back(s.token(), a);
  return out;
}

bool is_filter(const Structure& s, const Subset& f) {
  require_owner(s, f);
  if (!is_subsemigroup(s, f)) return false;
  if (upset(s, f) != f) return false;
  const std::size_t n = s.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (std::size_t g = 0; g < s.gamma_count(); ++g)
        if (f.contains(s.mul(a, g, b)) && !(f.contains(a) && f.contains(b))) return false;
  return true;
}

Subset filter_gen(const Structure& s, Element x) {
  const std::size_t n = s.size();
  const std::size_t k = s.gamma_count();
  Bits f = s.singleton(x).bits();
  for (;;) {
    Bits next = f | detail::product(s, f, f);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (std::size_t g = 0; g < k; ++g)
          if ((next >> s.mul(a, g, b)) & 1U) next |= (Bits{1} << a) | (Bits{1} << b);
    for_each_bit(next, [&](Element e) { next |= s.above(e); });
    if (next == f) break;
    f = next;
  }
  return {s.token(), f};
}

bool is_prime(const Structure& s, const Subset& t) {
  require_owner(s, t);
  const std::size_t n = s.size();
  for (Element a = 0; a < n; ++a) {
    if (t.contains(a)) continue;
    for (Element b = 0; b < n; ++b) {
      if (t.contains(b)) continue;
      for (std::size_t g = 0; g < s.gamma_count(); ++g)
        if (t.contains(s.mul(a, g, b))) return false;
    }
  }
  return true;
}

std::optional<SquareWitness> find_semiprime_violation(const Structure& s, const Subset& t) {
  require_owner(s, t);
  for (Element x = 0; x < s.size(); ++x) {
    if (t.contains(x)) continue;
    for (std::size_t g = 0; g < s.gamma_count(); ++g)
      if (t.contains(s.mul(x, g, x))) return SquareWitness{x, g};
  }
  return std::nullopt;
}

bool is_semiprime(const Structure& s, const Subset& t) { return !find_semiprime_violation(s, t); }

bool is_weakly_prime(const Structure& s, const Subset& t) {
  if (!is_ideal(s, t, IdealKind::TwoSided))
    throw PreconditionError("weakly prime is defined here for two-sided ideals only");
  return detail::weakly_prime_condition(s, t, all_ideals(s, IdealKind::TwoSided));
}

bool is_idempotent_subset(const Structure& s, const Subset& a) {
  return downset(s, gamma_product(s, a, a)) == a;
}

bool ideals_form_chain(const Structure& s, IdealKind kind) { return chain(all_ideals(s, kind)); }

}  // namespace gpw
