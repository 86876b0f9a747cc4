#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpw/explore.hpp"
#include "gpw/harness.hpp"

namespace gpw {

struct TheoremTally {
  std::size_t checked = 0;
  /// Implications whose hypothesis held.
  std::size_t hypothesis_held = 0;
  std::size_t failed = 0;
  /// Checks skipped because the carrier is beyond the check's envelope.
  std::size_t skipped = 0;
};

struct CampaignFailure {
  /// Position in the concatenated stream, from 0.
  std::size_t index = 0;
  Structure structure;
  TheoremVerdict verdict;
};

struct CampaignResult {
  std::size_t structures = 0;
  std::map<TheoremId, TheoremTally> per_theorem;
  /// Key: one '0'/'1' per predicate_names() entry.
  std::map<std::string, std::size_t> predicate_tallies;
  /// First failing verdict in stream order; the campaign stops there.
  std::optional<CampaignFailure> failure;
  /// FNV-1a 64 over the canonical GPS-JSON of every structure checked.
  std::string corpus_digest;
};

CampaignResult run_campaign_serial(std::span<const EnumSpec> specs, const std::vector<TheoremId>& ids);

/// Identical result to run_campaign_serial for every `jobs`.
CampaignResult run_campaign(std::span<const EnumSpec> specs, const std::vector<TheoremId>& ids, int jobs);

}  // namespace gpw
