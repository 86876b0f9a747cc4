#include "gpw/harness.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "gpw/analysis.hpp"

namespace gpw {

using nlohmann::json;

namespace {

struct IdName {
  TheoremId id;
  const char* name;
};

constexpr IdName kIds[] = {
    {TheoremId::Prop2, "prop2"},     {TheoremId::Lemma3, "lemma3"},   {TheoremId::Lemma4, "lemma4"},
    {TheoremId::Lemma5, "lemma5"},   {TheoremId::Lemma6, "lemma6"},   {TheoremId::Thm8, "thm8"},
    {TheoremId::Lemma9, "lemma9"},   {TheoremId::Thm10, "thm10"},     {TheoremId::Lemma11, "lemma11"},
    {TheoremId::Lemma12, "lemma12"}, {TheoremId::Thm13, "thm13"},     {TheoremId::Prop14, "prop14"},
    {TheoremId::Thm16, "thm16"},     {TheoremId::Lemma17, "lemma17"}, {TheoremId::Thm18, "thm18"},
    {TheoremId::Cor19, "cor19"},     {TheoremId::Thm21, "thm21"},     {TheoremId::Stmt1to2, "stmt1to2"},
    {TheoremId::StmtA, "stmta"},     {TheoremId::StmtB, "stmtb"},
};

Bits bit(Element e) { return Bits{1} << e; }

json elems(const Subset& a) { return a.elements(); }

// ---------------------------------------------------------------------------
// Verdict builders

TheoremVerdict equivalence(TheoremId id, std::vector<Condition> conds) {
  TheoremVerdict v{id, VerdictShape::Equivalence, std::move(conds)};
  v.equivalent = std::all_of(v.conditions.begin(), v.conditions.end(),
                             [&](const Condition& c) { return c.value == v.conditions.front().value; });
  if (!v.equivalent) {
    v.witness = json::object();
    for (const auto& c : v.conditions) v.witness["conditions"][c.name] = c.value;
  }
  return v;
}

TheoremVerdict implication(TheoremId id, Condition hyp, std::vector<Condition> concl, json witness) {
  TheoremVerdict v{id, VerdictShape::Implication, {hyp}};
  v.hypothesis = hyp.value;
  bool all = true;
  for (auto& c : concl) {
    all = all && c.value;
    v.conditions.push_back(std::move(c));
  }
  v.equivalent = !hyp.value || all;
  if (!v.equivalent) v.witness = std::move(witness);
  return v;
}

TheoremVerdict invariant(TheoremId id, std::vector<Condition> conds, json witness) {
  TheoremVerdict v{id, VerdictShape::Invariant, std::move(conds)};
  v.equivalent = std::all_of(v.conditions.begin(), v.conditions.end(), [](const Condition& c) { return c.value; });
  if (!v.equivalent) v.witness = std::move(witness);
  return v;
}

// ---------------------------------------------------------------------------
// Shared quantities

bool every_ideal(const std::vector<Subset>& ideals, const std::function<bool(const Subset&)>& pred) {
  return std::all_of(ideals.begin(), ideals.end(), pred);
}

bool chain(const std::vector<Subset>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].subset_of(sets[j]) && !sets[j].subset_of(sets[i])) return false;
  return true;
}

// Each ideal contains the whole N-class of each of its members.
bool unions_of_blocks(const std::vector<Subset>& ideals, const Partition& p) {
  for (const auto& a : ideals)
    for (Element x : a.elements())
      if (!p.block_of(x).subset_of(a)) return false;
  return true;
}

// {y | x ∈ core(y)} for every x, compared with N(x).
bool filter_formula(const Structure& s, const std::function<Subset(Element)>& core, json* witness) {
  const std::size_t n = s.size();
  std::vector<Subset> cores;
  for (Element y = 0; y < n; ++y) cores.push_back(core(y));
  for (Element x = 0; x < n; ++x) {
    Bits formula = 0;
    for (Element y = 0; y < n; ++y)
      if (cores[y].contains(x)) formula |= bit(y);
    const Subset nx = filter_gen(s, x);
    if (nx.bits() != formula) {
      if (witness != nullptr)
        *witness = {{"x", x}, {"filter", elems(nx)}, {"formula", elems(s.from_bits(formula))}};
      return false;
    }
  }
  return true;
}

// Some partition σ is a semilattice congruence whose classes are simple
// subsemigroups of the given kind, optionally with the chain condition.
bool exists_sigma(const Structure& s, IdealKind kind, bool need_chain) {
  bool found = false;
  for_each_partition(s, [&](const Partition& sigma) {
    if (!is_semilattice_congruence(s, sigma)) return true;
    const auto rep = decompose_with(s, sigma);
    bool ok = kind == IdealKind::TwoSided ? rep.is_semilattice_of_simple
              : kind == IdealKind::Left   ? rep.is_semilattice_of_left_simple
                                          : rep.is_semilattice_of_right_simple;
    if (need_chain) ok = ok && rep.chain_condition;
    found = ok;
    return !found;
  });
  return found;
}

std::vector<Bits> simple_subsemigroups(const Structure& s) {
  std::vector<Bits> out;
  const Bits limit = Bits{1} << s.size();
  for (Bits t = 1; t < limit; ++t) {
    const Subset ts(s.token(), t);
    if (is_subsemigroup(s, ts) && is_simple(s, ts)) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Individual checks

TheoremVerdict check_prop2(const Structure& s) {
  const bool intra = is_intra_regular(s);
  bool holds = true;
  json w;
  for (Element x = 0; x < s.size() && holds; ++x)
    for (Element y = 0; y < s.size() && holds; ++y)
      for (std::size_t g = 0; g < s.gamma_count(); ++g)
        if (two_sided_core(s, s.mul(x, g, y)) != two_sided_core(s, s.mul(y, g, x))) {
          holds = false;
          w = {{"x", x}, {"y", y}, {"gamma", s.gamma_names()[g]}};
          break;
        }
  return implication(TheoremId::Prop2, {"intra_regular", intra}, {{"sandwich_ideals_commute", holds}}, w);
}

TheoremVerdict check_lemma3(const Structure& s) {
  return equivalence(TheoremId::Lemma3,
                     {{"intra_regular", is_intra_regular(s)},
                      {"filter_formula", filter_formula(s, [&](Element y) { return two_sided_core(s, y); }, nullptr)}});
}

TheoremVerdict check_lemma4(const Structure& s) {
  const auto pi = relation_partition(s, Relation::I);
  const auto pn = relation_partition(s, Relation::N);
  const auto pl = relation_partition(s, Relation::L);
  const bool in = pi.refines(pn);
  const bool li = pl.refines(pi);
  return invariant(TheoremId::Lemma4, {{"I_refines_N", in}, {"L_refines_I", li}},
                   {{"I_refines_N", in}, {"L_refines_I", li}});
}

TheoremVerdict check_lemma5(const Structure& s) {
  const auto ideals = all_ideals(s, IdealKind::TwoSided);
  return equivalence(TheoremId::Lemma5,
                     {{"intra_regular", is_intra_regular(s)},
                      {"ideals_semiprime", every_ideal(ideals, [&](const Subset& t) { return is_semiprime(s, t); })}});
}

TheoremVerdict check_lemma6(const Structure& s) {
  bool two = true;
  bool left = true;
  bool right = true;
  json w;
  for (Element a = 0; a < s.size(); ++a) {
    const bool t = is_ideal(s, two_sided_core(s, a), IdealKind::TwoSided);
    const bool l = is_ideal(s, left_core(s, a), IdealKind::Left);
    const bool r = is_ideal(s, right_core(s, a), IdealKind::Right);
    if ((!t || !l || !r) && w.is_null()) w = {{"a", a}};
    two = two && t;
    left = left && l;
    right = right && r;
  }
  return invariant(TheoremId::Lemma6,
                   {{"sandwich_is_ideal", two}, {"left_core_is_left_ideal", left}, {"right_core_is_right_ideal", right}},
                   w);
}

// The seven left-sided conditions evaluated on `s`.
std::vector<Condition> left_conditions(const Structure& s, const std::string& prefix) {
  const auto left_ideals = all_ideals(s, IdealKind::Left);
  const auto pn = relation_partition(s, Relation::N);
  const auto pl = relation_partition(s, Relation::L);
  const auto rep = decompose_with(s, pn);
  std::vector<Condition> c;
  c.push_back({prefix + "1_left_regular_and_left_duo", is_left_regular(s) && is_left_duo(s)});
  c.push_back({prefix + "2_filter_formula", filter_formula(s, [&](Element y) { return left_core(s, y); }, nullptr)});
  c.push_back({prefix + "3_N_equals_L", pn == pl});
  c.push_back({prefix + "4_left_ideals_are_N_unions", unions_of_blocks(left_ideals, pn)});
  c.push_back({prefix + "5_N_classes_left_simple",
               std::all_of(rep.class_verdicts.begin(), rep.class_verdicts.end(),
                           [](const BlockVerdict& v) { return v.is_subsemigroup && v.is_left_simple; })});
  c.push_back({prefix + "6_semilattice_of_left_simple_N", rep.is_semilattice_of_left_simple});
  if (s.size() <= kMaxSigmaOracleCarrier)
    c.push_back({prefix + "6_semilattice_of_left_simple_exists", exists_sigma(s, IdealKind::Left, false)});
  c.push_back({prefix + "7_left_ideals_semiprime_and_two_sided",
               every_ideal(left_ideals, [&](const Subset& t) {
                 return is_semiprime(s, t) && is_ideal(s, t, IdealKind::TwoSided);
               })});
  return c;
}

TheoremVerdict check_lemma9(const Structure& s) {
  const auto ideals = all_ideals(s, IdealKind::TwoSided);
  const bool idempotent = every_ideal(ideals, [&](const Subset& a) { return is_idempotent_subset(s, a); });
  bool meet_is_product = true;
  bool meet_is_ideal = true;
  bool product_below_meet = true;
  json w;
  for (const auto& a : ideals)
    for (const auto& b : ideals) {
      const Subset meet = a & b;
      const Subset prod = downset(s, gamma_product(s, a, b));
      meet_is_product = meet_is_product && meet == prod;
      const bool mi = is_ideal(s, meet, IdealKind::TwoSided);
      const bool pb = prod.subset_of(meet);
      if ((!mi || !pb) && w.is_null()) w = {{"A", elems(a)}, {"B", elems(b)}};
      meet_is_ideal = meet_is_ideal && mi;
      product_below_meet = product_below_meet && pb;
    }
  TheoremVerdict v = equivalence(TheoremId::Lemma9, {{"ideals_idempotent", idempotent}, {"meet_is_product", meet_is_product}});
  v.conditions.push_back({"meet_is_ideal", meet_is_ideal});
  v.conditions.push_back({"product_below_meet", product_below_meet});
  if (!meet_is_ideal || !product_below_meet) {
    v.equivalent = false;
    v.witness = w;
  }
  return v;
}

TheoremVerdict check_lemma11(const Structure& s) {
  bool holds = true;
  json w;
  for (Element x = 0; x < s.size(); ++x)
    if (principal(s, x, IdealKind::TwoSided) != two_sided_core(s, x)) {
      holds = false;
      w = {{"x", x}};
      break;
    }
  return implication(TheoremId::Lemma11, {"intra_regular", is_intra_regular(s)}, {{"principal_is_sandwich", holds}}, w);
}

TheoremVerdict check_lemma12(const Structure& s) {
  bool inclusion = true;
  bool equality = true;
  json w;
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y)
      for (std::size_t g = 0; g < s.gamma_count(); ++g) {
        const Subset lhs = principal(s, s.mul(x, g, y), IdealKind::TwoSided);
        const Subset rhs = principal(s, x, IdealKind::TwoSided) & principal(s, y, IdealKind::TwoSided);
        const bool inc = lhs.subset_of(rhs);
        const bool eq = lhs == rhs;
        if ((!inc || !eq) && w.is_null()) w = {{"x", x}, {"y", y}, {"gamma", s.gamma_names()[g]}};
        inclusion = inclusion && inc;
        equality = equality && eq;
      }
  TheoremVerdict v = implication(TheoremId::Lemma12, {"intra_regular", is_intra_regular(s)},
                                 {{"product_ideal_is_meet", equality}}, w);
  v.conditions.push_back({"product_ideal_below_meet", inclusion});
  if (!inclusion) {
    v.equivalent = false;
    v.witness = w;
  }
  return v;
}

TheoremVerdict check_prop14(const Structure& s) {
  const bool hyp = is_intra_regular(s) && ideals_form_chain(s, IdealKind::TwoSided);
  bool holds = true;
  json w;
  for (Element x = 0; x < s.size() && holds; ++x)
    for (Element y = 0; y < s.size() && holds; ++y)
      for (std::size_t g = 0; g < s.gamma_count(); ++g) {
        const Subset core = two_sided_core(s, s.mul(x, g, y));
        if (!core.contains(x) && !core.contains(y)) {
          holds = false;
          w = {{"x", x}, {"y", y}, {"gamma", s.gamma_names()[g]}};
          break;
        }
      }
  return implication(TheoremId::Prop14, {"intra_regular_and_ideals_chain", hyp}, {{"factor_in_sandwich", holds}}, w);
}

TheoremVerdict check_lemma17(const Structure& s) {
  bool holds = true;
  json w;
  const Bits limit = Bits{1} << s.size();
  for (Bits t = 1; t < limit && holds; ++t) {
    const Subset ts(s.token(), t);
    if (!is_subsemigroup(s, ts)) continue;
    for (Element x : ts.elements()) {
      const Subset cut = two_sided_core(s, x) & ts;
      if (!is_relative_ideal(s, ts, cut, IdealKind::TwoSided)) {
        holds = false;
        w = {{"T", elems(ts)}, {"x", x}};
        break;
      }
    }
  }
  return invariant(TheoremId::Lemma17, {{"sandwich_cut_is_relative_ideal", holds}}, w);
}

TheoremVerdict check_thm18(const Structure& s) {
  const bool intra = is_intra_regular(s);
  const auto pn = relation_partition(s, Relation::N);
  const auto simple = simple_subsemigroups(s);
  auto is_simple_bits = [&](Bits t) { return std::find(simple.begin(), simple.end(), t) != simple.end(); };

  bool blocks_maximal = true;
  json w;
  for (const auto& b : pn.blocks()) {
    const bool ok = is_simple_bits(b.bits()) &&
                    std::none_of(simple.begin(), simple.end(),
                                 [&](Bits t) { return t != b.bits() && (b.bits() & ~t) == 0; });
    if (!ok && w.is_null()) w = {{"block", elems(b)}};
    blocks_maximal = blocks_maximal && ok;
  }
  bool maximal_are_blocks = true;
  for (const auto& t : maximal_simple_subsemigroups(s)) {
    const bool ok = pn.block_of(t.least()) == t;
    if (!ok && w.is_null()) w = {{"maximal_simple", elems(t)}};
    maximal_are_blocks = maximal_are_blocks && ok;
  }
  return implication(TheoremId::Thm18, {"intra_regular", intra},
                     {{"N_classes_maximal_simple", blocks_maximal}, {"maximal_simple_are_N_classes", maximal_are_blocks}},
                     w);
}

TheoremVerdict check_cor19(const Structure& s) {
  const auto pn = relation_partition(s, Relation::N);
  const auto maximal = maximal_simple_subsemigroups(s);
  std::vector<Bits> blocks;
  for (const auto& b : pn.blocks()) blocks.push_back(b.bits());
  std::vector<Bits> maxb;
  for (const auto& t : maximal) maxb.push_back(t.bits());
  std::sort(blocks.begin(), blocks.end());
  std::sort(maxb.begin(), maxb.end());
  json w;
  if (blocks != maxb) {
    w["N_classes"] = json::array();
    for (const auto& b : pn.blocks()) w["N_classes"].push_back(elems(b));
    w["maximal_simple"] = json::array();
    for (const auto& t : maximal) w["maximal_simple"].push_back(elems(t));
  }
  return implication(TheoremId::Cor19, {"intra_regular", is_intra_regular(s)},
                     {{"N_classes_equal_maximal_simple", blocks == maxb}}, w);
}

TheoremVerdict check_stmt1to2(const Structure& s) {
  const std::size_t n = s.size();
  const Bits limit = Bits{1} << n;
  std::vector<Bits> products(static_cast<std::size_t>(limit * limit));
  for (Bits a = 1; a < limit; ++a)
    for (Bits b = 1; b < limit; ++b) products[a * limit + b] = detail::product(s, a, b);
  bool holds = true;
  json w;
  for (Bits t = 0; t < limit && holds; ++t) {
    if (!is_prime(s, Subset(s.token(), t))) continue;
    for (Bits a = 1; a < limit && holds; ++a)
      for (Bits b = 1; b < limit; ++b) {
        if ((products[a * limit + b] & ~t) != 0) continue;
        if ((a & ~t) != 0 && (b & ~t) != 0) {
          holds = false;
          w = {{"T", elems(Subset(s.token(), t))}, {"A", elems(Subset(s.token(), a))}, {"B", elems(Subset(s.token(), b))}};
          break;
        }
      }
  }
  return invariant(TheoremId::Stmt1to2, {{"prime_implies_subset_prime", holds}}, w);
}

TheoremVerdict check_prime_implies(const Structure& s, TheoremId id) {
  const auto ideals = all_ideals(s, IdealKind::TwoSided);
  const Bits limit = Bits{1} << s.size();
  bool holds = true;
  bool on_ideals = true;
  json w;
  for (Bits t = 0; t < limit; ++t) {
    const Subset ts(s.token(), t);
    if (!is_prime(s, ts)) continue;
    bool ok = true;
    if (id == TheoremId::StmtA) {
      ok = is_semiprime(s, ts);
    } else {
      ok = detail::weakly_prime_condition(s, ts, ideals);
      if (is_ideal(s, ts, IdealKind::TwoSided)) on_ideals = on_ideals && is_weakly_prime(s, ts) == ok && ok;
    }
    if (!ok && w.is_null()) w = {{"T", elems(ts)}};
    holds = holds && ok;
  }
  if (id == TheoremId::StmtA) return invariant(id, {{"prime_implies_semiprime", holds}}, w);
  return invariant(id, {{"prime_implies_weakly_prime", holds}, {"prime_ideals_weakly_prime", on_ideals}}, w);
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<TheoremId>& all_theorem_ids() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& e : kIds) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string to_string(TheoremId id) {
  for (const auto& e : kIds)
    if (e.id == id) return e.name;
  return "?";
}

TheoremId parse_theorem_id(const std::string& s) {
  std::string lower;
  for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (const auto& e : kIds)
    if (lower == e.name) return e.id;
  throw InputError("unknown theorem id '" + s + "'");
}

std::vector<TheoremId> parse_theorem_list(const std::string& s) {
  if (s.empty() || s == "all") return all_theorem_ids();
  std::vector<TheoremId> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty()) throw InputError("empty theorem id in list '" + s + "'");
    const TheoremId id = parse_theorem_id(item);
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

const char* to_string(VerdictShape s) {
  switch (s) {
    case VerdictShape::Equivalence: return "equivalence";
    case VerdictShape::Implication: return "implication";
    case VerdictShape::Invariant: return "invariant";
  }
  return "?";
}

bool theorem_supported(TheoremId id, std::size_t n) {
  if (id == TheoremId::Stmt1to2) return n <= kMaxSubsetPairCarrier;
  return n <= kMaxBruteForceCarrier;
}

TheoremVerdict check_theorem8(const Structure& s) {
  const auto ideals = all_ideals(s, IdealKind::TwoSided);
  const auto pn = relation_partition(s, Relation::N);
  const auto pi = relation_partition(s, Relation::I);
  const auto rep = decompose_with(s, pn);
  std::vector<Condition> c;
  c.push_back({"1_intra_regular", is_intra_regular(s)});
  c.push_back({"2_filter_formula", filter_formula(s, [&](Element y) { return two_sided_core(s, y); }, nullptr)});
  c.push_back({"3_N_equals_I", pn == pi});
  c.push_back({"4_ideals_are_N_unions", unions_of_blocks(ideals, pn)});
  c.push_back({"5_N_classes_simple", std::all_of(rep.class_verdicts.begin(), rep.class_verdicts.end(),
                                                 [](const BlockVerdict& v) { return v.is_subsemigroup && v.is_simple; })});
  c.push_back({"6_semilattice_of_simple_N", rep.is_semilattice_of_simple});
  if (s.size() <= kMaxSigmaOracleCarrier)
    c.push_back({"6_semilattice_of_simple_exists", exists_sigma(s, IdealKind::TwoSided, false)});
  c.push_back({"7_ideals_semiprime", every_ideal(ideals, [&](const Subset& t) { return is_semiprime(s, t); })});
  return equivalence(TheoremId::Thm8, std::move(c));
}

TheoremVerdict check_theorem10(const Structure& s) {
  const auto ideals = all_ideals(s, IdealKind::TwoSided);
  const bool weakly = every_ideal(ideals, [&](const Subset& t) { return is_weakly_prime(s, t); });
  const bool idem = every_ideal(ideals, [&](const Subset& t) { return is_idempotent_subset(s, t); });
  return equivalence(TheoremId::Thm10, {{"ideals_weakly_prime", weakly}, {"ideals_idempotent_and_chain", idem && chain(ideals)}});
}

TheoremVerdict check_theorem13(const Structure& s) {
  const auto ideals = all_ideals(s, IdealKind::TwoSided);
  const bool prime = every_ideal(ideals, [&](const Subset& t) { return is_prime(s, t); });
  return equivalence(TheoremId::Thm13,
                     {{"ideals_prime", prime}, {"ideals_chain_and_intra_regular", chain(ideals) && is_intra_regular(s)}});
}

TheoremVerdict check_theorem16(const Structure& s) {
  std::vector<Condition> c;
  c.push_back({"intra_regular_and_ideals_chain", is_intra_regular(s) && ideals_form_chain(s, IdealKind::TwoSided)});
  const auto rep = decompose(s);
  c.push_back({"chain_of_simple_N", rep.is_chain_of_simple});
  if (s.size() <= kMaxSigmaOracleCarrier)
    c.push_back({"chain_of_simple_exists", exists_sigma(s, IdealKind::TwoSided, true)});
  TheoremVerdict v = equivalence(TheoremId::Thm16, std::move(c));
  if (!v.equivalent && rep.chain_witness_failure) {
    const auto& f = *rep.chain_witness_failure;
    v.witness["chain_failure"] = {{"x", f.x}, {"y", f.y}, {"gamma", s.gamma_names()[f.gamma]}};
  }
  return v;
}

TheoremVerdict check_theorem21(const Structure& s) {
  auto left = left_conditions(s, "left.");
  auto right = left_conditions(s.opposite(), "right.");
  TheoremVerdict lv = equivalence(TheoremId::Thm21, left);
  TheoremVerdict rv = equivalence(TheoremId::Thm21, right);
  TheoremVerdict v{TheoremId::Thm21, VerdictShape::Equivalence, std::move(left)};
  for (auto& c : right) v.conditions.push_back(std::move(c));
  v.equivalent = lv.equivalent && rv.equivalent;
  if (!v.equivalent) {
    v.witness = json::object();
    if (!lv.equivalent) v.witness["left"] = lv.witness;
    if (!rv.equivalent) v.witness["right"] = rv.witness;
  }
  return v;
}

TheoremVerdict check_theorem(const Structure& s, TheoremId id) {
  if (!theorem_supported(id, s.size()))
    throw PreconditionError(to_string(id) + " is not supported for n = " + std::to_string(s.size()));
  switch (id) {
    case TheoremId::Prop2: return check_prop2(s);
    case TheoremId::Lemma3: return check_lemma3(s);
    case TheoremId::Lemma4: return check_lemma4(s);
    case TheoremId::Lemma5: return check_lemma5(s);
    case TheoremId::Lemma6: return check_lemma6(s);
    case TheoremId::Thm8: return check_theorem8(s);
    case TheoremId::Lemma9: return check_lemma9(s);
    case TheoremId::Thm10: return check_theorem10(s);
    case TheoremId::Lemma11: return check_lemma11(s);
    case TheoremId::Lemma12: return check_lemma12(s);
    case TheoremId::Thm13: return check_theorem13(s);
    case TheoremId::Prop14: return check_prop14(s);
    case TheoremId::Thm16: return check_theorem16(s);
    case TheoremId::Lemma17: return check_lemma17(s);
    case TheoremId::Thm18: return check_thm18(s);
    case TheoremId::Cor19: return check_cor19(s);
    case TheoremId::Thm21: return check_theorem21(s);
    case TheoremId::Stmt1to2: return check_stmt1to2(s);
    case TheoremId::StmtA:
    case TheoremId::StmtB: return check_prime_implies(s, id);
  }
  throw PreconditionError("unhandled theorem id");
}

std::vector<TheoremVerdict> check(const Structure& s, const std::vector<TheoremId>& ids) {
  std::vector<TheoremVerdict> out;
  out.reserve(ids.size());
  for (TheoremId id : ids) out.push_back(check_theorem(s, id));
  return out;
}

std::vector<TheoremVerdict> check_all(const Structure& s) {
  std::vector<TheoremId> ids;
  for (TheoremId id : all_theorem_ids())
    if (theorem_supported(id, s.size())) ids.push_back(id);
  return check(s, ids);
}

bool aggregate_pass(const std::vector<TheoremVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const TheoremVerdict& v) { return v.equivalent; });
}

}  // namespace gpw
