#pragma once

// Naive reference implementations built only on Structure::mul and
// Structure::leq, with std::set for subsets.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "gpw/ideals.hpp"
#include "gpw/structure.hpp"

namespace oracle {

using Set = std::set<gpw::Element>;

inline Set to_set(const gpw::Subset& a) {
  const auto e = a.elements();
  return Set(e.begin(), e.end());
}

inline std::vector<Set> all_subsets(std::size_t n) {
  std::vector<Set> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Set s;
    for (gpw::Element i = 0; i < n; ++i)
      if ((m >> i) & 1U) s.insert(i);
    out.push_back(s);
  }
  return out;
}

inline Set down(const gpw::Structure& s, const Set& h) {
  Set out;
  for (gpw::Element t = 0; t < s.size(); ++t)
    for (gpw::Element a : h)
      if (s.leq(t, a)) out.insert(t);
  return out;
}

inline Set product(const gpw::Structure& s, const Set& a, const Set& b) {
  Set out;
  for (gpw::Element x : a)
    for (std::size_t g = 0; g < s.gamma_count(); ++g)
      for (gpw::Element y : b) out.insert(s.mul(x, g, y));
  return out;
}

inline Set full(const gpw::Structure& s) {
  Set m;
  for (gpw::Element i = 0; i < s.size(); ++i) m.insert(i);
  return m;
}

inline bool includes(const Set& big, const Set& small) {
  for (auto e : small)
    if (!big.count(e)) return false;
  return true;
}

inline bool is_ideal(const gpw::Structure& s, const Set& a, gpw::IdealKind kind) {
  if (a.empty() || down(s, a) != a) return false;
  const Set m = full(s);
  if (kind != gpw::IdealKind::Right && !includes(a, product(s, m, a))) return false;
  if (kind != gpw::IdealKind::Left && !includes(a, product(s, a, m))) return false;
  return true;
}

inline bool is_filter(const gpw::Structure& s, const Set& f) {
  if (f.empty() || !includes(f, product(s, f, f))) return false;
  for (gpw::Element a = 0; a < s.size(); ++a)
    for (gpw::Element b = 0; b < s.size(); ++b)
      for (std::size_t g = 0; g < s.gamma_count(); ++g)
        if (f.count(s.mul(a, g, b)) && (!f.count(a) || !f.count(b))) return false;
  for (gpw::Element a : f)
    for (gpw::Element c = 0; c < s.size(); ++c)
      if (s.leq(a, c) && !f.count(c)) return false;
  return true;
}

/// Intersection of every filter containing x.
inline Set filter_of(const gpw::Structure& s, gpw::Element x) {
  Set out = full(s);
  for (const auto& f : all_subsets(s.size()))
    if (f.count(x) && is_filter(s, f)) {
      Set meet;
      for (auto e : f)
        if (out.count(e)) meet.insert(e);
      out = meet;
    }
  return out;
}

/// Intersection of every ideal of the given kind containing a.
inline Set ideal_of(const gpw::Structure& s, gpw::Element a, gpw::IdealKind kind) {
  Set out = full(s);
  for (const auto& i : all_subsets(s.size()))
    if (i.count(a) && is_ideal(s, i, kind)) {
      Set meet;
      for (auto e : i)
        if (out.count(e)) meet.insert(e);
      out = meet;
    }
  return out;
}

/// x ∈ (MΓxγxΓM] for all x, γ.
inline bool intra_regular(const gpw::Structure& s) {
  const Set m = full(s);
  for (gpw::Element x = 0; x < s.size(); ++x)
    for (std::size_t g = 0; g < s.gamma_count(); ++g)
      if (!down(s, product(s, product(s, m, {s.mul(x, g, x)}), m)).count(x)) return false;
  return true;
}

/// x ∈ (MΓxΓxΓM] for all x.
inline bool intra_regular_legacy(const gpw::Structure& s) {
  const Set m = full(s);
  for (gpw::Element x = 0; x < s.size(); ++x) {
    const Set xx = product(s, {x}, {x});
    if (!down(s, product(s, product(s, m, xx), m)).count(x)) return false;
  }
  return true;
}

/// Labels equal iff the keyed sets coincide.
inline std::vector<std::size_t> classes(std::size_t n, const std::function<Set(gpw::Element)>& key) {
  std::vector<Set> keys;
  for (gpw::Element a = 0; a < n; ++a) keys.push_back(key(a));
  std::vector<std::size_t> label(n);
  for (std::size_t a = 0; a < n; ++a) {
    label[a] = a;
    for (std::size_t b = 0; b < a; ++b)
      if (keys[a] == keys[b]) {
        label[a] = label[b];
        break;
      }
  }
  return label;
}

/// Count of labeled structures by exhausting every table tuple and every
/// relation matrix.
inline std::size_t brute_force_count(std::size_t n, std::size_t k, bool all_orders) {
  std::vector<std::vector<bool>> orders;
  const std::size_t cells = n * n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
    std::vector<bool> r(cells);
    for (std::size_t i = 0; i < cells; ++i) r[i] = (m >> i) & 1U;
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) ok = ok && r[a * n + a];
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a != b && r[a * n + b] && r[b * n + a]) ok = false;
        for (std::size_t c = 0; c < n && ok; ++c)
          if (r[a * n + b] && r[b * n + c] && !r[a * n + c]) ok = false;
      }
    if (!ok) continue;
    if (!all_orders && m != 0) {
      bool trivial = true;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) trivial = trivial && (r[a * n + b] == (a == b));
      if (!trivial) continue;
    }
    orders.push_back(r);
  }

  const std::size_t total_cells = k * cells;
  std::vector<std::size_t> t(total_cells, 0);
  auto at = [&](std::size_t g, std::size_t a, std::size_t b) { return t[g * cells + a * n + b]; };
  std::size_t count = 0;
  while (true) {
    bool assoc = true;
    for (std::size_t g = 0; g < k && assoc; ++g)
      for (std::size_t h = 0; h < k && assoc; ++h)
        for (std::size_t a = 0; a < n && assoc; ++a)
          for (std::size_t b = 0; b < n && assoc; ++b)
            for (std::size_t c = 0; c < n && assoc; ++c)
              assoc = at(h, at(g, a, b), c) == at(g, a, at(h, b, c));
    if (assoc)
      for (const auto& r : orders) {
        bool compat = true;
        for (std::size_t a = 0; a < n && compat; ++a)
          for (std::size_t b = 0; b < n && compat; ++b)
            if (r[a * n + b])
              for (std::size_t c = 0; c < n && compat; ++c)
                for (std::size_t g = 0; g < k && compat; ++g)
                  compat = r[at(g, a, c) * n + at(g, b, c)] && r[at(g, c, a) * n + at(g, c, b)];
        if (compat) ++count;
      }
    std::size_t i = 0;
    while (i < total_cells && ++t[i] == n) t[i++] = 0;
    if (i == total_cells) break;
  }
  return count;
}

}  // namespace oracle
