#pragma once

#include <span>
#include <vector>

#include "gpw/explore.hpp"
#include "gpw/predicate.hpp"

namespace gpw {

enum class SearchMode { First, All, Count };

const char* to_string(SearchMode m);
SearchMode parse_search_mode(const std::string& s);

struct SearchResult {
  SearchMode mode = SearchMode::First;
  std::vector<Structure> witnesses;
  std::size_t count = 0;
  /// Structures taken from the stream; for First, up to and including the witness.
  std::size_t examined = 0;
};

/// Filters the enumeration streams of `specs`, in order, by `expr`.
SearchResult search_serial(std::span<const EnumSpec> specs, const PredicateExpr& expr, SearchMode mode);

/// Same result as search_serial for every `jobs`; predicate evaluation is
/// fanned out over fixed-size chunks of the stream.
SearchResult search(std::span<const EnumSpec> specs, const PredicateExpr& expr, SearchMode mode, int jobs);

}  // namespace gpw
