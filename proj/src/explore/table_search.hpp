#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gpw::detail {

inline constexpr std::uint8_t kUnassigned = 0xff;

/// Partial assignment of k operation tables on n elements, filled in a
/// fixed cell order: position p walks (a, b) row-major and, inside each
/// cell, the k operations. Every assignment is checked against all mixed
/// associativity instances whose four lookups are already defined, so a
/// complete assignment is associative.
class TableSearch {
 public:
  TableSearch(std::size_t n, std::size_t k) : n_(n), k_(k), table_(k * n * n, kUnassigned) {}

  std::size_t cells() const { return table_.size(); }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }

  std::size_t index_of(std::size_t p) const {
    const std::size_t g = p % k_;
    const std::size_t ab = p / k_;
    return (g * n_ + ab / n_) * n_ + ab % n_;
  }

  /// Assigns and keeps the value when consistent; otherwise leaves the
  /// cell unassigned and returns false.
  bool assign(std::size_t p, std::uint8_t v) {
    const std::size_t idx = index_of(p);
    table_[idx] = v;
    if (consistent_at(idx)) return true;
    table_[idx] = kUnassigned;
    return false;
  }

  void unassign(std::size_t p) { table_[index_of(p)] = kUnassigned; }

  /// Used to replay a prefix already known to be consistent.
  void set_raw(const std::vector<std::uint8_t>& table) { table_ = table; }

  const std::vector<std::uint8_t>& table() const { return table_; }

 private:
  std::uint8_t at(std::size_t g, std::size_t a, std::size_t b) const { return table_[(g * n_ + a) * n_ + b]; }

  // (x γ y) μ z = x γ (y μ z), vacuous while any lookup is undefined.
  bool holds(std::size_t x, std::size_t y, std::size_t z, std::size_t g, std::size_t m) const {
    const std::uint8_t p = at(g, x, y);
    const std::uint8_t q = at(m, y, z);
    if (p == kUnassigned || q == kUnassigned) return true;
    const std::uint8_t l = at(m, p, z);
    const std::uint8_t r = at(g, x, q);
    return l == kUnassigned || r == kUnassigned || l == r;
  }

  bool consistent_at(std::size_t idx) const {
    const std::size_t g = idx / (n_ * n_);
    const std::size_t a = (idx / n_) % n_;
    const std::size_t b = idx % n_;
    // cell as x γ y, as y μ z
    for (std::size_t m = 0; m < k_; ++m)
      for (std::size_t z = 0; z < n_; ++z)
        if (!holds(a, b, z, g, m)) return false;
    for (std::size_t o = 0; o < k_; ++o)
      for (std::size_t x = 0; x < n_; ++x)
        if (!holds(x, a, b, o, g)) return false;
    // cell as (x γ y) μ z or x γ (y μ z): the inner product must equal a or b
    for (std::size_t o = 0; o < k_; ++o)
      for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y) {
          const std::uint8_t v = at(o, x, y);
          if (v == a && !holds(x, y, b, o, g)) return false;
          if (v == b && !holds(a, x, y, g, o)) return false;
        }
    return true;
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<std::uint8_t> table_;
};

inline std::vector<std::string> default_labels(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t g = 0; g < k; ++g) out.push_back("g" + std::to_string(g));
  return out;
}

/// Order compatibility of a complete table set with an n*n order matrix.
inline bool compatible(const std::vector<std::uint8_t>& t, std::size_t n, std::size_t k,
                       const std::vector<bool>& leq) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq[a * n + b]) continue;
      for (std::size_t g = 0; g < k; ++g)
        for (std::size_t c = 0; c < n; ++c) {
          const std::size_t base = g * n * n;
          if (!leq[t[base + a * n + c] * n + t[base + b * n + c]]) return false;
          if (!leq[t[base + c * n + a] * n + t[base + c * n + b]]) return false;
        }
    }
  return true;
}

}  // namespace gpw::detail
