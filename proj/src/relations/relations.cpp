#include "gpw/relations.hpp"

#include <algorithm>
#include <map>

#include "gpw/ideals.hpp"

namespace gpw {

Partition Partition::from_labels(const Structure& s, const std::vector<std::size_t>& labels) {
  if (labels.size() != s.size()) throw InputError("partition labels must cover the carrier");
  Partition p;
  p.owner_ = s.token();
  p.class_of_.assign(s.size(), 0);
  std::map<std::size_t, std::size_t> block_index;
  std::vector<Bits> bits;
  // Scanning elements in ascending order numbers blocks by least element.
  for (Element e = 0; e < s.size(); ++e) {
    auto [it, inserted] = block_index.try_emplace(labels[e], bits.size());
    if (inserted) bits.push_back(0);
    p.class_of_[e] = it->second;
    bits[it->second] |= Bits{1} << e;
  }
  for (Bits b : bits) p.blocks_.emplace_back(s.token(), b);
  return p;
}

bool Partition::refines(const Partition& coarser) const {
  if (owner_ != coarser.owner_) throw OwnerMismatch();
  for (const auto& b : blocks_)
    if (!b.subset_of(coarser.block_of(b.least()))) return false;
  return true;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::L: return "L";
    case Relation::R: return "R";
    case Relation::I: return "I";
    case Relation::N: return "N";
  }
  return "?";
}

Partition relation_partition(const Structure& s, Relation which) {
  std::vector<std::size_t> labels(s.size());
  for (Element e = 0; e < s.size(); ++e) {
    Subset gen = [&] {
      switch (which) {
        case Relation::L: return principal(s, e, IdealKind::Left);
        case Relation::R: return principal(s, e, IdealKind::Right);
        case Relation::I: return principal(s, e, IdealKind::TwoSided);
        case Relation::N: return filter_gen(s, e);
      }
      return s.empty_subset();
    }();
    labels[e] = static_cast<std::size_t>(gen.bits());
  }
  return Partition::from_labels(s, labels);
}

namespace {

void require_owner(const Structure& s, const Partition& p) {
  if (p.owner() != s.token()) throw OwnerMismatch();
}

}  // namespace

bool is_congruence(const Structure& s, const Partition& p) {
  require_owner(s, p);
  const std::size_t n = s.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      if (!p.same(a, b)) continue;
      for (Element c = 0; c < n; ++c)
        for (std::size_t g = 0; g < s.gamma_count(); ++g) {
          if (!p.same(s.mul(a, g, c), s.mul(b, g, c))) return false;
          if (!p.same(s.mul(c, g, a), s.mul(c, g, b))) return false;
        }
    }
  return true;
}

bool is_semilattice_congruence(const Structure& s, const Partition& p) {
  if (!is_congruence(s, p)) return false;
  const std::size_t n = s.size();
  for (Element a = 0; a < n; ++a)
    for (std::size_t g = 0; g < s.gamma_count(); ++g) {
      if (!p.same(s.mul(a, g, a), a)) return false;
      for (Element b = a + 1; b < n; ++b)
        if (!p.same(s.mul(a, g, b), s.mul(b, g, a))) return false;
    }
  return true;
}

bool is_complete_semilattice_congruence(const Structure& s, const Partition& p) {
  if (!is_semilattice_congruence(s, p)) return false;
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b) {
      if (!s.leq(a, b)) continue;
      for (std::size_t g = 0; g < s.gamma_count(); ++g)
        if (!p.same(a, s.mul(a, g, b))) return false;
    }
  return true;
}

void for_each_partition(const Structure& s, const std::function<bool(const Partition&)>& visit) {
  const std::size_t n = s.size();
  if (n > kMaxPartitionEnumCarrier)
    throw PreconditionError("partition enumeration supports n <= " +
                            std::to_string(kMaxPartitionEnumCarrier));
  // Restricted growth strings: rg[0] = 0, rg[i] <= 1 + max(rg[0..i-1]).
  std::vector<std::size_t> rg(n, 0);
  std::vector<std::size_t> maxp(n, 0);
  for (;;) {
    if (!visit(Partition::from_labels(s, rg))) return;
    std::size_t i = n - 1;
    while (i > 0 && rg[i] > maxp[i - 1]) --i;
    if (i == 0) return;
    ++rg[i];
    maxp[i] = std::max(maxp[i - 1], rg[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rg[j] = 0;
      maxp[j] = maxp[i];
    }
  }
}

}  // namespace gpw
