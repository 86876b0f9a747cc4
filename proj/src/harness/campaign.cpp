#include "gpw/campaign.hpp"

#include <omp.h>

#include "gpw/gps_json.hpp"
#include "gpw/predicate.hpp"

namespace gpw {

namespace {

constexpr std::size_t kChunk = 128;

struct Outcome {
  std::vector<TheoremVerdict> verdicts;
  std::vector<TheoremId> skipped;
  std::string predicate_key;
  std::string canonical;
};

Outcome evaluate(const Structure& s, const std::vector<TheoremId>& ids) {
  Outcome o;
  for (TheoremId id : ids) {
    if (theorem_supported(id, s.size()))
      o.verdicts.push_back(check_theorem(s, id));
    else
      o.skipped.push_back(id);
  }
  for (const auto& [name, value] : evaluate_all_predicates(s)) o.predicate_key.push_back(value ? '1' : '0');
  o.canonical = canonical_dump(to_gps_json(s));
  return o;
}

class Accumulator {
 public:
  explicit Accumulator(const std::vector<TheoremId>& ids) {
    for (TheoremId id : ids) result_.per_theorem[id];
  }

  // Returns false after the first failure.
  bool add(const Structure& s, const Outcome& o) {
    const std::size_t index = result_.structures++;
    digest_ = fnv1a64_update(digest_, o.canonical);
    digest_ = fnv1a64_update(digest_, "\n");
    ++result_.predicate_tallies[o.predicate_key];
    for (TheoremId id : o.skipped) ++result_.per_theorem[id].skipped;
    for (const auto& v : o.verdicts) {
      auto& t = result_.per_theorem[v.id];
      ++t.checked;
      if (v.hypothesis.value_or(false)) ++t.hypothesis_held;
      if (!v.equivalent) {
        ++t.failed;
        if (!result_.failure) result_.failure = CampaignFailure{index, s, v};
      }
    }
    return !result_.failure;
  }

  CampaignResult finish() {
    result_.corpus_digest = "fnv1a64:" + hex64(digest_);
    return std::move(result_);
  }

 private:
  CampaignResult result_;
  std::uint64_t digest_ = kFnvOffset;
};

}  // namespace

CampaignResult run_campaign_serial(std::span<const EnumSpec> specs, const std::vector<TheoremId>& ids) {
  Accumulator acc(ids);
  bool go_on = true;
  for (const auto& spec : specs) {
    for_each_structure_serial(spec, [&](const Structure& s) { return go_on = acc.add(s, evaluate(s, ids)); });
    if (!go_on) break;
  }
  return acc.finish();
}

CampaignResult run_campaign(std::span<const EnumSpec> specs, const std::vector<TheoremId>& ids, int jobs) {
  Accumulator acc(ids);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::vector<Structure> chunk;
  std::vector<Outcome> outcomes;
  bool go_on = true;

  auto flush = [&] {
    outcomes.assign(chunk.size(), Outcome{});
    const auto m = static_cast<std::ptrdiff_t>(chunk.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < m; ++i) {
      const auto u = static_cast<std::size_t>(i);
      outcomes[u] = evaluate(chunk[u], ids);
    }
    for (std::size_t i = 0; i < chunk.size() && go_on; ++i) go_on = acc.add(chunk[i], outcomes[i]);
    chunk.clear();
  };

  for (const auto& spec : specs) {
    for_each_structure(spec, threads, [&](const Structure& s) {
      chunk.push_back(s);
      if (chunk.size() == kChunk) flush();
      return go_on;
    });
    if (!chunk.empty() && go_on) flush();
    if (!go_on) break;
  }
  return acc.finish();
}

}  // namespace gpw
