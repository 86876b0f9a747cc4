#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include <omp.h>

#include "gpw/explore.hpp"
#include "table_search.hpp"

namespace gpw {

using detail::TableSearch;

const char* to_string(OrderMode m) {
  switch (m) {
    case OrderMode::AllPartialOrders: return "all";
    case OrderMode::TrivialOnly: return "trivial";
    case OrderMode::TotalOnly: return "total";
  }
  return "?";
}

const char* to_string(Dedup d) { return d == Dedup::Labeled ? "labeled" : "iso"; }

OrderMode parse_order_mode(const std::string& s) {
  if (s == "all" || s == "all_partial_orders") return OrderMode::AllPartialOrders;
  if (s == "trivial" || s == "trivial_only") return OrderMode::TrivialOnly;
  if (s == "total" || s == "total_only") return OrderMode::TotalOnly;
  throw InputError("unknown order mode '" + s + "' (expected all, trivial or total)");
}

Dedup parse_dedup(const std::string& s) {
  if (s == "labeled") return Dedup::Labeled;
  if (s == "iso" || s == "up_to_iso") return Dedup::UpToIso;
  throw InputError("unknown dedup mode '" + s + "' (expected labeled or iso)");
}

void EnumSpec::check() const {
  if (n < 1) throw InputError("n must be at least 1");
  if (k < 1) throw InputError("k must be at least 1");
  if (n > kMaxCarrier) throw InputError("n exceeds " + std::to_string(kMaxCarrier));
  if (limit && *limit == 0) throw InputError("limit must be positive");
}

bool EnumSpec::within_envelope() const { return (n <= 3 && k <= 2) || (n <= 4 && k == 1); }

std::vector<EnumSpec> sizes_up_to(const EnumSpec& spec) {
  std::vector<EnumSpec> out;
  for (std::size_t m = 1; m <= spec.n; ++m) {
    EnumSpec s = spec;
    s.n = m;
    out.push_back(s);
  }
  return out;
}

namespace {

std::vector<std::vector<bool>> make_orders(std::size_t n, OrderMode mode) {
  std::vector<std::vector<bool>> out;
  std::vector<bool> trivial(n * n, false);
  for (std::size_t a = 0; a < n; ++a) trivial[a * n + a] = true;
  if (mode == OrderMode::TrivialOnly) {
    out.push_back(trivial);
    return out;
  }
  if (mode == OrderMode::TotalOnly) {
    std::vector<std::size_t> rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    do {
      std::vector<bool> leq(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) leq[a * n + b] = rank[a] <= rank[b];
      out.push_back(std::move(leq));
    } while (std::next_permutation(rank.begin(), rank.end()));
    return out;
  }
  // Each unordered pair {a < b} is incomparable, a < b, or b < a; count in
  // base 3 over the pairs and keep the transitive choices.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<int> digit(pairs.size(), 0);
  for (;;) {
    std::vector<bool> leq = trivial;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (digit[i] == 1) leq[pairs[i].first * n + pairs[i].second] = true;
      if (digit[i] == 2) leq[pairs[i].second * n + pairs[i].first] = true;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        if (leq[a * n + b])
          for (std::size_t c = 0; c < n; ++c)
            if (leq[b * n + c] && !leq[a * n + c]) {
              transitive = false;
              break;
            }
    if (transitive) out.push_back(std::move(leq));
    std::size_t i = 0;
    while (i < digit.size() && digit[i] == 2) digit[i++] = 0;
    if (i == digit.size()) break;
    ++digit[i];
  }
  return out;
}

// Completes every table set below `depth` in cell order.
template <class Emit>
bool expand(TableSearch& ts, std::size_t depth, std::size_t stop_depth, Emit& emit) {
  if (depth == stop_depth) return emit(ts.table());
  const auto n = static_cast<std::uint8_t>(ts.n());
  for (std::uint8_t v = 0; v < n; ++v) {
    if (!ts.assign(depth, v)) continue;
    const bool go_on = expand(ts, depth + 1, stop_depth, emit);
    ts.unassign(depth);
    if (!go_on) return false;
  }
  return true;
}

// Crosses one complete table set with the admissible orders.
template <class Out>
bool emit_structures(const EnumSpec& spec, const std::vector<std::uint8_t>& table,
                     const std::vector<std::string>& labels, Out& out) {
  for (const auto& leq : orders_for(spec.n, spec.order_mode)) {
    if (!detail::compatible(table, spec.n, spec.k, leq)) continue;
    Structure s = Structure::from_trusted(spec.n, labels, table, leq);
    if (spec.dedup == Dedup::UpToIso && !is_canonical(s)) continue;
    if (!out(std::move(s))) return false;
  }
  return true;
}

class Limiter {
 public:
  Limiter(const EnumSpec& spec, const StructureVisitor& visit) : spec_(spec), visit_(visit) {}
  bool operator()(const Structure& s) {
    if (!visit_(s)) return false;
    ++count_;
    return !(spec_.limit && count_ >= *spec_.limit);
  }

 private:
  const EnumSpec& spec_;
  const StructureVisitor& visit_;
  std::size_t count_ = 0;
};

}  // namespace

const std::vector<std::vector<bool>>& orders_for(std::size_t n, OrderMode mode) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, OrderMode>, std::vector<std::vector<bool>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, mode);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_orders(n, mode)).first;
  return it->second;
}

bool is_canonical(const Structure& s) {
  const std::size_t n = s.size();
  const std::size_t k = s.gamma_count();
  std::vector<std::size_t> perm(n);  // perm[new] = old
  std::vector<std::size_t> inv(n);   // inv[old] = new
  std::vector<std::size_t> ops(k);   // ops[new] = old
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    std::iota(ops.begin(), ops.end(), 0);
    do {
      // Compare the image key against the identity key, stopping at the
      // first difference.
      int cmp = 0;
      for (std::size_t g = 0; g < k && cmp == 0; ++g)
        for (std::size_t a = 0; a < n && cmp == 0; ++a)
          for (std::size_t b = 0; b < n && cmp == 0; ++b) {
            const std::size_t img = inv[s.mul(static_cast<Element>(perm[a]), ops[g], static_cast<Element>(perm[b]))];
            const std::size_t own = s.mul(static_cast<Element>(a), g, static_cast<Element>(b));
            if (img != own) cmp = img < own ? -1 : 1;
          }
      for (std::size_t a = 0; a < n && cmp == 0; ++a)
        for (std::size_t b = 0; b < n && cmp == 0; ++b) {
          const bool img = s.leq(static_cast<Element>(perm[a]), static_cast<Element>(perm[b]));
          const bool own = s.leq(static_cast<Element>(a), static_cast<Element>(b));
          if (img != own) cmp = img < own ? -1 : 1;
        }
      if (cmp < 0) return false;
    } while (std::next_permutation(ops.begin(), ops.end()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

void for_each_structure_serial(const EnumSpec& spec, const StructureVisitor& visit) {
  spec.check();
  const auto labels = detail::default_labels(spec.k);
  Limiter limit(spec, visit);
  auto forward = [&](Structure&& s) { return limit(s); };
  auto emit = [&](const std::vector<std::uint8_t>& table) { return emit_structures(spec, table, labels, forward); };
  TableSearch ts(spec.n, spec.k);
  expand(ts, 0, ts.cells(), emit);
}

void for_each_structure(const EnumSpec& spec, int jobs, const StructureVisitor& visit) {
  spec.check();
  const auto labels = detail::default_labels(spec.k);

  // Consistent assignments of the first row of every table.
  std::vector<std::vector<std::uint8_t>> prefixes;
  const std::size_t prefix_depth = spec.n * spec.k;
  {
    TableSearch ts(spec.n, spec.k);
    auto keep = [&](const std::vector<std::uint8_t>& t) {
      prefixes.push_back(t);
      return true;
    };
    expand(ts, 0, prefix_depth, keep);
  }

  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const std::size_t batch = static_cast<std::size_t>(threads) * 8;
  Limiter limit(spec, visit);
  std::vector<std::vector<Structure>> results;
  for (std::size_t start = 0; start < prefixes.size(); start += batch) {
    const std::size_t stop = std::min(prefixes.size(), start + batch);
    results.assign(stop - start, {});
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = start; i < stop; ++i) {
      TableSearch ts(spec.n, spec.k);
      ts.set_raw(prefixes[i]);
      auto& out = results[i - start];
      auto collect = [&out](Structure&& s) {
        out.push_back(std::move(s));
        return true;
      };
      auto emit = [&](const std::vector<std::uint8_t>& table) {
        return emit_structures(spec, table, labels, collect);
      };
      expand(ts, prefix_depth, ts.cells(), emit);
    }
    for (const auto& chunk : results)
      for (const auto& s : chunk)
        if (!limit(s)) return;
  }
}

std::vector<Structure> enumerate_serial(const EnumSpec& spec) {
  std::vector<Structure> out;
  for_each_structure_serial(spec, [&](const Structure& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Structure> enumerate(const EnumSpec& spec, int jobs) {
  std::vector<Structure> out;
  for_each_structure(spec, jobs, [&](const Structure& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace gpw
