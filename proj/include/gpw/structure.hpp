#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpw/subset.hpp"

namespace gpw {

/// Malformed input: bad shapes, ids out of range, duplicate labels.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Structure data as read from a file, before any checks.
struct RawStructure {
  std::size_t n = 0;
  std::vector<std::string> gamma_names;
  /// tables[g][a][b] = a g b
  std::vector<std::vector<std::vector<int>>> tables;
  /// leq[a][b] means a <= b
  std::vector<std::vector<bool>> leq;
};

struct Violation {
  std::string axiom;
  /// Elements first, then operation indices, in the order the axiom names them.
  std::vector<std::size_t> witness;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks the order axioms, mixed associativity and order compatibility,
/// collecting every violation. Throws InputError for shape errors.
ValidationReport validate(const RawStructure& raw);

/// Raised by Structure::from_raw when validation finds violations.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Reference to one operation of Γ by position.
struct Op {
  std::size_t index;
};

/// A finite po-Γ-semigroup (M, Γ, ≤). Immutable once constructed.
class Structure {
 public:
  /// Validates and builds. Throws InputError or ValidationError.
  static Structure from_raw(const RawStructure& raw);

  /// Builds from tables already known to satisfy every axiom. Used by the
  /// enumerator; `table` is k blocks of n*n entries, row-major, and
  /// `leq` is n*n row-major.
  static Structure from_trusted(std::size_t n, std::vector<std::string> gamma_names,
                                std::vector<std::uint8_t> table, const std::vector<bool>& leq);

  std::size_t size() const { return n_; }
  std::size_t gamma_count() const { return gamma_names_.size(); }
  const std::vector<std::string>& gamma_names() const { return gamma_names_; }
  /// Throws InputError for an unknown label.
  Op op(const std::string& label) const;

  Element mul(Element a, std::size_t g, Element b) const {
    return table_[(g * n_ + a) * n_ + b];
  }

  bool leq(Element a, Element b) const { return (down_[b] >> a) & 1U; }
  /// {t | t <= b}
  Bits below(Element b) const { return down_[b]; }
  /// {c | c >= a}
  Bits above(Element a) const { return up_[a]; }

  OwnerToken token() const { return token_; }

  Subset empty_subset() const { return {token_, 0}; }
  Subset full() const { return {token_, low_bits(n_)}; }
  Subset singleton(Element a) const;
  Subset subset(std::initializer_list<Element> elems) const;
  Subset subset(const std::vector<Element>& elems) const;
  /// Throws InputError when bits outside the carrier are set.
  Subset from_bits(Bits bits) const;

  /// Same carrier and order with every operation transposed (a γ' b = b γ a).
  /// Left-sided notions on the opposite are right-sided notions here.
  Structure opposite() const;

  /// Same tables and order, exported back to the raw form.
  RawStructure to_raw() const;

  const std::vector<std::uint8_t>& table_data() const { return table_; }

  /// Content equality; tokens are ignored.
  friend bool operator==(const Structure& a, const Structure& b);

 private:
  Structure() = default;
  void build_order(const std::vector<bool>& leq);

  std::size_t n_ = 0;
  std::vector<std::string> gamma_names_;
  std::vector<std::uint8_t> table_;
  std::vector<Bits> down_;
  std::vector<Bits> up_;
  OwnerToken token_ = 0;
};

}  // namespace gpw
