#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gpw/analysis.hpp"
#include "gpw/campaign.hpp"
#include "gpw/harness.hpp"
#include "gpw/search.hpp"

namespace gpw {

inline constexpr const char* kReportSchema = "report_v1";

std::string tool_version();

/// Schema, tool version and command name; callers add the sections.
nlohmann::json report_header(const std::string& command);

nlohmann::json subset_json(const Subset& a);
nlohmann::json partition_json(const Partition& p);
nlohmann::json validation_json(const ValidationReport& r);
nlohmann::json decomposition_json(const Structure& s, const DecompositionReport& d);
nlohmann::json verdict_json(const TheoremVerdict& v);

/// Predicates with witnesses, per-element ideals and filters, the L/R/I/N
/// partitions, the ideal lattices (n <= 12) and the N-decomposition.
nlohmann::json analysis_json(const Structure& s);

nlohmann::json spec_json(const EnumSpec& spec, bool up_to);
nlohmann::json campaign_json(const CampaignResult& r);
nlohmann::json search_json(const SearchResult& r);

/// The report minus its "volatile" block, dumped canonically.
std::string stable_dump(const nlohmann::json& report);

/// Indented plain-text rendering of a report tree.
std::string render_text(const nlohmann::json& report);

}  // namespace gpw
