#include "gpw/search.hpp"

#include <omp.h>

namespace gpw {

namespace {

constexpr std::size_t kChunk = 256;

// Returns false once a First search has its witness.
bool record(SearchResult& r, const Structure& s, bool hit) {
  ++r.examined;
  if (!hit) return true;
  ++r.count;
  if (r.mode != SearchMode::Count) r.witnesses.push_back(s);
  return r.mode != SearchMode::First;
}

}  // namespace

const char* to_string(SearchMode m) {
  switch (m) {
    case SearchMode::First: return "first";
    case SearchMode::All: return "all";
    case SearchMode::Count: return "count";
  }
  return "?";
}

SearchMode parse_search_mode(const std::string& s) {
  if (s == "first") return SearchMode::First;
  if (s == "all") return SearchMode::All;
  if (s == "count") return SearchMode::Count;
  throw InputError("unknown search mode '" + s + "' (expected first, all or count)");
}

SearchResult search_serial(std::span<const EnumSpec> specs, const PredicateExpr& expr, SearchMode mode) {
  SearchResult r;
  r.mode = mode;
  bool go_on = true;
  for (const auto& spec : specs) {
    for_each_structure_serial(spec, [&](const Structure& s) { return go_on = record(r, s, expr.evaluate(s)); });
    if (!go_on) break;
  }
  return r;
}

SearchResult search(std::span<const EnumSpec> specs, const PredicateExpr& expr, SearchMode mode, int jobs) {
  SearchResult r;
  r.mode = mode;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::vector<Structure> chunk;
  std::vector<char> hits;
  bool go_on = true;

  auto flush = [&] {
    hits.assign(chunk.size(), 0);
    const auto m = static_cast<std::ptrdiff_t>(chunk.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < m; ++i) hits[static_cast<std::size_t>(i)] = expr.evaluate(chunk[static_cast<std::size_t>(i)]) ? 1 : 0;
    for (std::size_t i = 0; i < chunk.size() && go_on; ++i) go_on = record(r, chunk[i], hits[i] != 0);
    chunk.clear();
  };

  for (const auto& spec : specs) {
    for_each_structure(spec, threads, [&](const Structure& s) {
      chunk.push_back(s);
      if (chunk.size() == kChunk) flush();
      return go_on;
    });
    if (!chunk.empty()) flush();
    if (!go_on) break;
  }
  return r;
}

}  // namespace gpw
