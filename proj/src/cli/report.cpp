#include "gpw/report.hpp"

#include <sstream>

#include "gpw/gps_json.hpp"
#include "gpw/predicate.hpp"

#ifndef GPW_VERSION
#define GPW_VERSION "0.0.0"
#endif

namespace gpw {

using nlohmann::json;

std::string tool_version() { return std::string("gpw ") + GPW_VERSION; }

json report_header(const std::string& command) {
  return json{{"schema", kReportSchema}, {"tool_version", tool_version()}, {"command", command}};
}

json subset_json(const Subset& a) { return a.elements(); }

json partition_json(const Partition& p) {
  json out = json::array();
  for (const auto& b : p.blocks()) out.push_back(subset_json(b));
  return out;
}

json validation_json(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return json{{"ok", r.ok}, {"violations", std::move(violations)}};
}

json decomposition_json(const Structure& s, const DecompositionReport& d) {
  json blocks = json::array();
  for (std::size_t i = 0; i < d.partition.block_count(); ++i) {
    const auto& v = d.class_verdicts[i];
    blocks.push_back({{"elements", subset_json(d.partition.blocks()[i])},
                      {"subsemigroup", v.is_subsemigroup},
                      {"simple", v.is_simple},
                      {"left_simple", v.is_left_simple},
                      {"right_simple", v.is_right_simple}});
  }
  json preceq = json::array();
  for (const auto& [i, j] : d.preceq) preceq.push_back({i, j});
  json failure = nullptr;
  if (d.chain_witness_failure)
    failure = {{"x", d.chain_witness_failure->x},
               {"y", d.chain_witness_failure->y},
               {"gamma", s.gamma_names()[d.chain_witness_failure->gamma]}};
  return json{{"blocks", std::move(blocks)},
              {"semilattice_congruence", d.is_semilattice_congruence},
              {"semilattice_of_simple", d.is_semilattice_of_simple},
              {"semilattice_of_left_simple", d.is_semilattice_of_left_simple},
              {"semilattice_of_right_simple", d.is_semilattice_of_right_simple},
              {"chain_condition", d.chain_condition},
              {"chain_of_simple", d.is_chain_of_simple},
              {"chain_failure", std::move(failure)},
              {"preceq", std::move(preceq)},
              {"preceq_is_chain", d.preceq_is_chain}};
}

json verdict_json(const TheoremVerdict& v) {
  json conds = json::object();
  for (const auto& c : v.conditions) conds[c.name] = c.value;
  json out{{"id", to_string(v.id)},
           {"shape", to_string(v.shape)},
           {"conditions", std::move(conds)},
           {"equivalent", v.equivalent},
           {"witness", v.witness}};
  if (v.hypothesis) out["hypothesis"] = *v.hypothesis;
  return out;
}

json analysis_json(const Structure& s) {
  json predicates = json::object();
  for (const auto& [name, value] : evaluate_all_predicates(s)) predicates[name] = value;
  predicates["left_regular_legacy"] = is_left_regular_legacy(s);
  predicates["right_regular_legacy"] = is_right_regular_legacy(s);
  predicates["right_simple"] = is_right_simple(s, s.full());

  json witnesses = json::object();
  witnesses["intra_regular"] = nullptr;
  if (auto w = find_intra_regular_violation(s))
    witnesses["intra_regular"] = {{"x", w->x}, {"gamma", s.gamma_names()[w->gamma]}};
  witnesses["intra_regular_legacy"] = nullptr;
  if (auto w = find_intra_regular_legacy_violation(s)) witnesses["intra_regular_legacy"] = {{"x", *w}};
  witnesses["semiprime"] = nullptr;

  json ideals = nullptr;
  if (s.size() <= kMaxBruteForceCarrier) {
    ideals = json::object();
    for (IdealKind kind : {IdealKind::Left, IdealKind::Right, IdealKind::TwoSided}) {
      json list = json::array();
      for (const auto& a : all_ideals(s, kind)) list.push_back(subset_json(a));
      ideals[to_string(kind)] = std::move(list);
    }
    for (const auto& t : all_ideals(s, IdealKind::TwoSided))
      if (auto w = find_semiprime_violation(s, t)) {
        witnesses["semiprime"] = {{"ideal", subset_json(t)}, {"x", w->x}, {"gamma", s.gamma_names()[w->gamma]}};
        break;
      }
  }

  json elements = json::array();
  for (Element a = 0; a < s.size(); ++a)
    elements.push_back({{"element", a},
                        {"L", subset_json(principal(s, a, IdealKind::Left))},
                        {"R", subset_json(principal(s, a, IdealKind::Right))},
                        {"I", subset_json(principal(s, a, IdealKind::TwoSided))},
                        {"N", subset_json(filter_gen(s, a))}});

  json partitions = json::object();
  for (Relation r : {Relation::L, Relation::R, Relation::I, Relation::N})
    partitions[to_string(r)] = partition_json(relation_partition(s, r));

  return json{{"predicates", std::move(predicates)},
              {"witnesses", std::move(witnesses)},
              {"elements", std::move(elements)},
              {"partitions", std::move(partitions)},
              {"ideals", std::move(ideals)},
              {"decomposition", decomposition_json(s, decompose(s))}};
}

json spec_json(const EnumSpec& spec, bool up_to) {
  json out{{"n", spec.n},
           {"k", spec.k},
           {"orders", to_string(spec.order_mode)},
           {"dedup", to_string(spec.dedup)},
           {"up_to", up_to},
           {"limit", nullptr},
           {"within_envelope", spec.within_envelope()}};
  if (spec.limit) out["limit"] = *spec.limit;
  return out;
}

json campaign_json(const CampaignResult& r) {
  json theorems = json::object();
  for (const auto& [id, t] : r.per_theorem)
    theorems[to_string(id)] = {
        {"checked", t.checked}, {"hypothesis_held", t.hypothesis_held}, {"failed", t.failed}, {"skipped", t.skipped}};
  json tallies = json::object();
  for (const auto& [key, count] : r.predicate_tallies) tallies[key] = count;
  json failure = nullptr;
  if (r.failure)
    failure = {{"index", r.failure->index},
               {"structure", to_gps_json(r.failure->structure)},
               {"structure_digest", structure_digest(r.failure->structure)},
               {"verdict", verdict_json(r.failure->verdict)}};
  return json{{"structures", r.structures},
              {"corpus_digest", r.corpus_digest},
              {"theorems", std::move(theorems)},
              {"predicate_names", predicate_names()},
              {"predicate_tallies", std::move(tallies)},
              {"failure", std::move(failure)},
              {"pass", !r.failure}};
}

json search_json(const SearchResult& r) {
  json witnesses = json::array();
  for (const auto& s : r.witnesses)
    witnesses.push_back({{"structure", to_gps_json(s)}, {"structure_digest", structure_digest(s)}});
  return json{{"mode", to_string(r.mode)},
              {"examined", r.examined},
              {"count", r.count},
              {"witnesses", std::move(witnesses)},
              {"exhausted", r.count == 0}};
}

std::string stable_dump(const json& report) {
  json copy = report;
  copy.erase("volatile");
  return canonical_dump(copy);
}

namespace {

bool is_flat(const json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& e : v)
    if (!is_flat(e)) return false;
  return true;
}

void render(const json& v, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      out << pad << key << ":";
      if (is_flat(val)) {
        out << ' ' << (val.is_string() ? val.get<std::string>() : val.dump()) << '\n';
      } else {
        out << '\n';
        render(val, depth + 1, out);
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (is_flat(e)) {
        out << pad << "- " << e.dump() << '\n';
      } else {
        out << pad << "-\n";
        render(e, depth + 1, out);
      }
    }
  } else {
    out << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

}  // namespace gpw
