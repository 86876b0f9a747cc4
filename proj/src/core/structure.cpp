#include "gpw/structure.hpp"

#include <atomic>
#include <set>
#include <utility>

namespace gpw {

namespace {

std::atomic<OwnerToken> next_token{1};

void check_shape(const RawStructure& raw) {
  const std::size_t n = raw.n;
  if (n < 1) throw InputError("carrier size must be at least 1");
  if (n > kMaxCarrier) throw InputError("carrier size exceeds " + std::to_string(kMaxCarrier));
  if (raw.gamma_names.empty()) throw InputError("at least one operation is required");
  std::set<std::string> seen;
  for (const auto& g : raw.gamma_names)
    if (!seen.insert(g).second) throw InputError("duplicate operation label '" + g + "'");
  if (raw.tables.size() != raw.gamma_names.size())
    throw InputError("expected one table per operation label");
  for (std::size_t g = 0; g < raw.tables.size(); ++g) {
    const auto& t = raw.tables[g];
    if (t.size() != n) throw InputError("table '" + raw.gamma_names[g] + "' must have n rows");
    for (const auto& row : t) {
      if (row.size() != n) throw InputError("table '" + raw.gamma_names[g] + "' is not square");
      for (int v : row)
        if (v < 0 || static_cast<std::size_t>(v) >= n)
          throw InputError("table '" + raw.gamma_names[g] + "' has entry " + std::to_string(v) +
                           " out of range");
    }
  }
  if (raw.leq.size() != n) throw InputError("order matrix must have n rows");
  for (const auto& row : raw.leq)
    if (row.size() != n) throw InputError("order matrix is not square");
}

}  // namespace

ValidationReport validate(const RawStructure& raw) {
  check_shape(raw);
  const std::size_t n = raw.n;
  const std::size_t k = raw.tables.size();
  const auto& le = raw.leq;
  const auto& t = raw.tables;
  ValidationReport rep;
  auto add = [&](const char* axiom, std::vector<std::size_t> w) {
    rep.violations.push_back({axiom, std::move(w)});
  };

  for (std::size_t a = 0; a < n; ++a)
    if (!le[a][a]) add("reflexivity", {a});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (le[a][b] && le[b][a]) add("antisymmetry", {a, b});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (le[a][b] && le[b][c] && !le[a][c]) add("transitivity", {a, b, c});

  // (a γ b) μ c = a γ (b μ c)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t g = 0; g < k; ++g)
          for (std::size_t m = 0; m < k; ++m) {
            const auto lhs = t[m][static_cast<std::size_t>(t[g][a][b])][c];
            const auto rhs = t[g][a][static_cast<std::size_t>(t[m][b][c])];
            if (lhs != rhs) add("associativity", {a, b, c, g, m});
          }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !le[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t g = 0; g < k; ++g) {
          if (!le[static_cast<std::size_t>(t[g][a][c])][static_cast<std::size_t>(t[g][b][c])])
            add("right_compatibility", {a, b, c, g});
          if (!le[static_cast<std::size_t>(t[g][c][a])][static_cast<std::size_t>(t[g][c][b])])
            add("left_compatibility", {a, b, c, g});
        }
    }

  rep.ok = rep.violations.empty();
  return rep;
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("structure violates " + report.violations.front().axiom + " (and " +
                         std::to_string(report.violations.size() - 1) + " more)"),
      report_(std::move(report)) {}

Structure Structure::from_raw(const RawStructure& raw) {
  auto rep = validate(raw);
  if (!rep.ok) throw ValidationError(std::move(rep));
  const std::size_t n = raw.n;
  std::vector<std::uint8_t> table;
  table.reserve(raw.tables.size() * n * n);
  for (const auto& t : raw.tables)
    for (const auto& row : t)
      for (int v : row) table.push_back(static_cast<std::uint8_t>(v));
  std::vector<bool> leq(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a * n + b] = raw.leq[a][b];
  return from_trusted(n, raw.gamma_names, std::move(table), leq);
}

Structure Structure::from_trusted(std::size_t n, std::vector<std::string> gamma_names,
                                  std::vector<std::uint8_t> table, const std::vector<bool>& leq) {
  Structure s;
  s.n_ = n;
  s.gamma_names_ = std::move(gamma_names);
  s.table_ = std::move(table);
  s.build_order(leq);
  s.token_ = next_token.fetch_add(1, std::memory_order_relaxed);
  return s;
}

void Structure::build_order(const std::vector<bool>& leq) {
  down_.assign(n_, 0);
  up_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (leq[a * n_ + b]) {
        down_[b] |= Bits{1} << a;
        up_[a] |= Bits{1} << b;
      }
}

Op Structure::op(const std::string& label) const {
  for (std::size_t g = 0; g < gamma_names_.size(); ++g)
    if (gamma_names_[g] == label) return Op{g};
  throw InputError("unknown operation label '" + label + "'");
}

Subset Structure::singleton(Element a) const {
  if (a >= n_) throw InputError("element " + std::to_string(a) + " out of range");
  return {token_, Bits{1} << a};
}

Subset Structure::subset(std::initializer_list<Element> elems) const {
  return subset(std::vector<Element>(elems));
}

Subset Structure::subset(const std::vector<Element>& elems) const {
  Bits bits = 0;
  for (Element e : elems) {
    if (e >= n_) throw InputError("element " + std::to_string(e) + " out of range");
    bits |= Bits{1} << e;
  }
  return {token_, bits};
}

Subset Structure::from_bits(Bits bits) const {
  if ((bits & ~low_bits(n_)) != 0) throw InputError("subset has bits outside the carrier");
  return {token_, bits};
}

Structure Structure::opposite() const {
  const std::size_t k = gamma_count();
  std::vector<std::uint8_t> t(table_.size());
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) t[(g * n_ + a) * n_ + b] = table_[(g * n_ + b) * n_ + a];
  std::vector<bool> leq(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) leq[a * n_ + b] = this->leq(static_cast<Element>(a), static_cast<Element>(b));
  return from_trusted(n_, gamma_names_, std::move(t), leq);
}

RawStructure Structure::to_raw() const {
  RawStructure raw;
  raw.n = n_;
  raw.gamma_names = gamma_names_;
  const std::size_t k = gamma_count();
  raw.tables.assign(k, std::vector<std::vector<int>>(n_, std::vector<int>(n_)));
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) raw.tables[g][a][b] = table_[(g * n_ + a) * n_ + b];
  raw.leq.assign(n_, std::vector<bool>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) raw.leq[a][b] = leq(static_cast<Element>(a), static_cast<Element>(b));
  return raw;
}

bool operator==(const Structure& a, const Structure& b) {
  return a.n_ == b.n_ && a.gamma_names_ == b.gamma_names_ && a.table_ == b.table_ &&
         a.down_ == b.down_;
}

}  // namespace gpw
