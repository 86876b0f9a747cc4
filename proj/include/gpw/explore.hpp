#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpw/structure.hpp"

namespace gpw {

enum class OrderMode { AllPartialOrders, TrivialOnly, TotalOnly };
enum class Dedup { Labeled, UpToIso };

const char* to_string(OrderMode m);
const char* to_string(Dedup d);
/// Accepts "all", "trivial", "total" / "labeled", "iso". Throws InputError.
OrderMode parse_order_mode(const std::string& s);
Dedup parse_dedup(const std::string& s);

struct EnumSpec {
  std::size_t n = 1;
  std::size_t k = 1;
  OrderMode order_mode = OrderMode::TrivialOnly;
  Dedup dedup = Dedup::Labeled;
  std::optional<std::size_t> limit;

  /// Throws InputError when n or k is zero or limit is zero.
  void check() const;
  /// n <= 3 with k <= 2, or n <= 4 with k = 1.
  bool within_envelope() const;
};

/// One spec per carrier size 1..spec.n, other fields copied.
std::vector<EnumSpec> sizes_up_to(const EnumSpec& spec);

/// Return false to stop the stream.
using StructureVisitor = std::function<bool(const Structure&)>;

/// Serial reference enumerator: fills the k tables cell by cell with
/// mixed-associativity pruning, then crosses each complete table set with
/// every compatible order. Visits structures in a fixed order.
void for_each_structure_serial(const EnumSpec& spec, const StructureVisitor& visit);

/// Same stream, same order. The search tree is split on first-row prefixes
/// which are expanded by `jobs` OpenMP threads in bounded batches.
void for_each_structure(const EnumSpec& spec, int jobs, const StructureVisitor& visit);

std::vector<Structure> enumerate_serial(const EnumSpec& spec);
std::vector<Structure> enumerate(const EnumSpec& spec, int jobs = 1);

/// Labeled partial orders on n elements admitted by `mode`, as n*n
/// row-major matrices. The trivial order comes first.
const std::vector<std::vector<bool>>& orders_for(std::size_t n, OrderMode mode);

/// True when no permutation of carrier and operation labels yields a
/// lexicographically smaller (tables, order) key.
bool is_canonical(const Structure& s);

class SamplingBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic in (n, k, seed). Tables come from randomized backtracking
/// with associativity pruning and restarts; the order is a random thinning
/// of a random linear order, kept only if compatible (else trivial).
/// Throws SamplingBudgetExceeded when no table set is found in budget.
Structure random_structure(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace gpw
