#include <numeric>
#include <random>

#include "gpw/explore.hpp"
#include "table_search.hpp"

namespace gpw {

namespace {

constexpr std::size_t kNodesPerAttempt = 20000;
constexpr std::size_t kAttempts = 200;
constexpr std::size_t kOrderTries = 16;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// std::uniform_int_distribution is implementation-defined; this is not.
std::size_t below(std::mt19937_64& rng, std::size_t m) { return static_cast<std::size_t>(rng() % m); }

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(rng, i)]);
}

class RandomFill {
 public:
  RandomFill(std::size_t n, std::size_t k, std::mt19937_64& rng) : ts_(n, k), rng_(rng) {}

  bool run() { return step(0); }
  const std::vector<std::uint8_t>& table() const { return ts_.table(); }

 private:
  bool step(std::size_t depth) {
    if (depth == ts_.cells()) return true;
    if (++nodes_ > kNodesPerAttempt) return false;
    std::vector<std::uint8_t> values(ts_.n());
    std::iota(values.begin(), values.end(), std::uint8_t{0});
    shuffle(values, rng_);
    for (auto v : values) {
      if (!ts_.assign(depth, v)) continue;
      if (step(depth + 1)) return true;
      ts_.unassign(depth);
      if (nodes_ > kNodesPerAttempt) return false;
    }
    return false;
  }

  detail::TableSearch ts_;
  std::mt19937_64& rng_;
  std::size_t nodes_ = 0;
};

std::vector<bool> sample_order(const std::vector<std::uint8_t>& table, std::size_t n, std::size_t k,
                               std::mt19937_64& rng) {
  std::vector<bool> trivial(n * n, false);
  for (std::size_t a = 0; a < n; ++a) trivial[a * n + a] = true;
  for (std::size_t attempt = 0; attempt < kOrderTries; ++attempt) {
    std::vector<std::size_t> line(n);
    std::iota(line.begin(), line.end(), 0);
    shuffle(line, rng);
    std::vector<bool> leq = trivial;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() & 1U) leq[line[i] * n + line[j]] = true;
    // Thinned pairs all respect `line`, so the closure stays antisymmetric.
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t a = 0; a < n; ++a)
        if (leq[a * n + m])
          for (std::size_t b = 0; b < n; ++b)
            if (leq[m * n + b]) leq[a * n + b] = true;
    if (detail::compatible(table, n, k, leq)) return leq;
  }
  return trivial;
}

}  // namespace

Structure random_structure(std::size_t n, std::size_t k, std::uint64_t seed) {
  EnumSpec{n, k}.check();
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(n * 1000003ULL + k)));
  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    RandomFill fill(n, k, rng);
    if (!fill.run()) continue;
    const auto leq = sample_order(fill.table(), n, k, rng);
    RawStructure raw = Structure::from_trusted(n, detail::default_labels(k), fill.table(), leq).to_raw();
    return Structure::from_raw(raw);
  }
  throw SamplingBudgetExceeded("no associative table set found for n=" + std::to_string(n) +
                               ", k=" + std::to_string(k) + " within the sampling budget");
}

}  // namespace gpw
