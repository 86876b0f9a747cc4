#include "gpw/analysis.hpp"

#include <algorithm>

namespace gpw {

namespace {

Bits all(const Structure& s) { return low_bits(s.size()); }
Bits bit(Element e) { return Bits{1} << e; }

// (MΓ{w}ΓM] for a single element w
Bits sandwich_down(const Structure& s, Element w) {
  const Bits m = all(s);
  return detail::down(s, detail::product(s, detail::product(s, m, bit(w)), m));
}

void require_owner(const Structure& s, const Subset& a) {
  if (a.owner() != s.token()) throw OwnerMismatch();
}

void require_subsemigroup(const Structure& s, const Subset& t) {
  if (!is_subsemigroup(s, t)) throw PreconditionError("T must be a subsemigroup");
}

bool relative_ideal_bits(const Structure& s, Bits t, Bits a, IdealKind kind) {
  if (a == 0 || (a & ~t) != 0) return false;
  if (kind != IdealKind::Right && (detail::product(s, t, a) & ~a) != 0) return false;
  if (kind != IdealKind::Left && (detail::product(s, a, t) & ~a) != 0) return false;
  return (detail::down(s, a) & t & ~a) == 0;
}

// Assumes T is a subsemigroup.
bool simple_bits(const Structure& s, Bits t, IdealKind kind) {
  for (Bits a = (t - 1) & t; a != 0; a = (a - 1) & t)
    if (relative_ideal_bits(s, t, a, kind)) return false;
  return true;
}

bool duo(const Structure& s, IdealKind one_side) {
  for (const auto& a : all_ideals(s, one_side))
    if (!is_ideal(s, a, IdealKind::TwoSided)) return false;
  return true;
}

}  // namespace

Subset two_sided_core(const Structure& s, Element a) { return {s.token(), sandwich_down(s, a)}; }

Subset left_core(const Structure& s, Element a) {
  return {s.token(), detail::down(s, detail::product(s, all(s), bit(a)))};
}

Subset right_core(const Structure& s, Element a) {
  return {s.token(), detail::down(s, detail::product(s, bit(a), all(s)))};
}

std::optional<SquareWitness> find_intra_regular_violation(const Structure& s) {
  for (Element x = 0; x < s.size(); ++x)
    for (std::size_t g = 0; g < s.gamma_count(); ++g)
      if (!((sandwich_down(s, s.mul(x, g, x)) >> x) & 1U)) return SquareWitness{x, g};
  return std::nullopt;
}

bool is_intra_regular(const Structure& s) { return !find_intra_regular_violation(s); }

std::optional<Element> find_intra_regular_legacy_violation(const Structure& s) {
  const Bits m = all(s);
  for (Element x = 0; x < s.size(); ++x) {
    const Bits xx = detail::product(s, bit(x), bit(x));
    const Bits words = detail::product(s, detail::product(s, m, xx), m);
    if (!((detail::down(s, words) >> x) & 1U)) return x;
  }
  return std::nullopt;
}

bool is_intra_regular_legacy(const Structure& s) { return !find_intra_regular_legacy_violation(s); }

bool is_left_regular(const Structure& s) {
  for (Element x = 0; x < s.size(); ++x)
    for (std::size_t g = 0; g < s.gamma_count(); ++g)
      if (!((detail::down(s, detail::product(s, all(s), bit(s.mul(x, g, x)))) >> x) & 1U)) return false;
  return true;
}

bool is_right_regular(const Structure& s) {
  for (Element x = 0; x < s.size(); ++x)
    for (std::size_t g = 0; g < s.gamma_count(); ++g)
      if (!((detail::down(s, detail::product(s, bit(s.mul(x, g, x)), all(s))) >> x) & 1U)) return false;
  return true;
}

bool is_left_regular_legacy(const Structure& s) {
  for (Element x = 0; x < s.size(); ++x) {
    const Bits words = detail::product(s, detail::product(s, all(s), bit(x)), bit(x));
    if (!((detail::down(s, words) >> x) & 1U)) return false;
  }
  return true;
}

bool is_right_regular_legacy(const Structure& s) {
  for (Element x = 0; x < s.size(); ++x) {
    const Bits words = detail::product(s, detail::product(s, bit(x), bit(x)), all(s));
    if (!((detail::down(s, words) >> x) & 1U)) return false;
  }
  return true;
}

bool is_left_duo(const Structure& s) { return duo(s, IdealKind::Left); }
bool is_right_duo(const Structure& s) { return duo(s, IdealKind::Right); }

bool is_relative_ideal(const Structure& s, const Subset& t, const Subset& a, IdealKind kind) {
  require_owner(s, a);
  require_subsemigroup(s, t);
  return relative_ideal_bits(s, t.bits(), a.bits(), kind);
}

std::vector<Subset> relative_ideals(const Structure& s, const Subset& t, IdealKind kind) {
  require_subsemigroup(s, t);
  std::vector<Bits> found;
  const Bits tb = t.bits();
  for (Bits a = tb; a != 0; a = (a - 1) & tb)
    if (relative_ideal_bits(s, tb, a, kind)) found.push_back(a);
  std::sort(found.begin(), found.end(), popcount_then_bits);
  std::vector<Subset> out;
  for (Bits a : found) out.emplace_back(s.token(), a);
  return out;
}

bool is_simple(const Structure& s, const Subset& t, IdealKind kind) {
  require_subsemigroup(s, t);
  return simple_bits(s, t.bits(), kind);
}

bool is_left_simple(const Structure& s, const Subset& t) { return is_simple(s, t, IdealKind::Left); }
bool is_right_simple(const Structure& s, const Subset& t) { return is_simple(s, t, IdealKind::Right); }

DecompositionReport decompose(const Structure& s) {
  return decompose_with(s, relation_partition(s, Relation::N));
}

DecompositionReport decompose_with(const Structure& s, const Partition& sigma) {
  if (sigma.owner() != s.token()) throw OwnerMismatch();
  DecompositionReport rep{sigma};
  rep.is_semilattice_congruence = is_semilattice_congruence(s, sigma);

  bool all_simple = true;
  bool all_left = true;
  bool all_right = true;
  for (const auto& block : sigma.blocks()) {
    BlockVerdict v;
    v.is_subsemigroup = is_subsemigroup(s, block);
    if (v.is_subsemigroup) {
      v.is_simple = simple_bits(s, block.bits(), IdealKind::TwoSided);
      v.is_left_simple = simple_bits(s, block.bits(), IdealKind::Left);
      v.is_right_simple = simple_bits(s, block.bits(), IdealKind::Right);
    }
    all_simple = all_simple && v.is_simple;
    all_left = all_left && v.is_left_simple;
    all_right = all_right && v.is_right_simple;
    rep.class_verdicts.push_back(v);
  }
  rep.is_semilattice_of_simple = rep.is_semilattice_congruence && all_simple;
  rep.is_semilattice_of_left_simple = rep.is_semilattice_congruence && all_left;
  rep.is_semilattice_of_right_simple = rep.is_semilattice_congruence && all_right;

  rep.chain_condition = true;
  for (Element x = 0; x < s.size() && rep.chain_condition; ++x)
    for (Element y = 0; y < s.size() && rep.chain_condition; ++y)
      for (std::size_t g = 0; g < s.gamma_count(); ++g) {
        const Element p = s.mul(x, g, y);
        if (!sigma.same(x, p) && !sigma.same(y, p)) {
          rep.chain_condition = false;
          rep.chain_witness_failure = ChainWitness{x, y, g};
          break;
        }
      }
  rep.is_chain_of_simple = rep.is_semilattice_of_simple && rep.chain_condition;

  const auto& blocks = sigma.blocks();
  std::vector<std::vector<bool>> below(blocks.size(), std::vector<bool>(blocks.size()));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      const Element x = blocks[i].least();
      const Element y = blocks[j].least();
      bool le = true;
      for (std::size_t g = 0; g < s.gamma_count(); ++g) le = le && sigma.same(x, s.mul(x, g, y));
      below[i][j] = le;
      if (le && i != j) rep.preceq.emplace_back(i, j);
    }
  rep.preceq_is_chain = true;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (!below[i][j] && !below[j][i]) rep.preceq_is_chain = false;
  return rep;
}

std::vector<Subset> maximal_simple_subsemigroups(const Structure& s, IdealKind kind) {
  if (s.size() > kMaxBruteForceCarrier)
    throw PreconditionError("subset enumeration supports n <= " + std::to_string(kMaxBruteForceCarrier));
  std::vector<Bits> simple;
  const Bits limit = Bits{1} << s.size();
  for (Bits t = 1; t < limit; ++t) {
    if ((detail::product(s, t, t) & ~t) != 0) continue;
    if (simple_bits(s, t, kind)) simple.push_back(t);
  }
  std::vector<Bits> maximal;
  for (Bits t : simple) {
    const bool dominated = std::any_of(simple.begin(), simple.end(),
                                       [t](Bits u) { return u != t && (t & ~u) == 0; });
    if (!dominated) maximal.push_back(t);
  }
  std::sort(maximal.begin(), maximal.end(), popcount_then_bits);
  std::vector<Subset> out;
  for (Bits t : maximal) out.emplace_back(s.token(), t);
  return out;
}

}  // namespace gpw
