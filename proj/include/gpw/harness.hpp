#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpw/structure.hpp"

namespace gpw {

enum class TheoremId {
  Prop2,
  Lemma3,
  Lemma4,
  Lemma5,
  Lemma6,
  Thm8,
  Lemma9,
  Thm10,
  Lemma11,
  Lemma12,
  Thm13,
  Prop14,
  Thm16,
  Lemma17,
  Thm18,
  Cor19,
  Thm21,
  Stmt1to2,
  StmtA,
  StmtB,
};

/// All ids in declaration order.
const std::vector<TheoremId>& all_theorem_ids();
/// Lowercase id as used on the command line, e.g. "thm8", "stmt1to2".
std::string to_string(TheoremId id);
/// Case-insensitive; throws InputError for an unknown id.
TheoremId parse_theorem_id(const std::string& s);
/// Comma-separated ids or "all".
std::vector<TheoremId> parse_theorem_list(const std::string& s);

/// How condition values must relate for the check to pass.
enum class VerdictShape {
  /// every condition has the same value
  Equivalence,
  /// hypothesis false, or every other condition true
  Implication,
  /// every condition true
  Invariant,
};

const char* to_string(VerdictShape s);

struct Condition {
  std::string name;
  bool value;
};

struct TheoremVerdict {
  TheoremId id;
  VerdictShape shape;
  std::vector<Condition> conditions;
  bool equivalent = true;
  /// Set for implications.
  std::optional<bool> hypothesis;
  /// Structured counterexample; null when the check passed.
  nlohmann::json witness;
};

/// Largest carrier for which checks enumerating all partitions (existence
/// of a semilattice congruence) use the exhaustive route in addition to N.
inline constexpr std::size_t kMaxSigmaOracleCarrier = 5;
/// Largest carrier for the subset-pair sweep of the prime-subset statement.
inline constexpr std::size_t kMaxSubsetPairCarrier = 6;

/// Whether check_theorem supports `id` at this carrier size.
bool theorem_supported(TheoremId id, std::size_t n);

/// Throws PreconditionError when the carrier is beyond the check's
/// brute-force envelope.
TheoremVerdict check_theorem(const Structure& s, TheoremId id);

/// Seven conditions of the filter/ideal characterization of intra-regularity.
TheoremVerdict check_theorem8(const Structure& s);
/// Ideals weakly prime ⇔ ideals idempotent and forming a chain.
TheoremVerdict check_theorem10(const Structure& s);
/// Ideals prime ⇔ ideals form a chain and M is intra-regular.
TheoremVerdict check_theorem13(const Structure& s);
/// Intra-regular with a chain of ideals ⇔ chain of simple semigroups.
TheoremVerdict check_theorem16(const Structure& s);
/// Seven conditions of the left-sided characterization, plus its mirror.
TheoremVerdict check_theorem21(const Structure& s);

std::vector<TheoremVerdict> check(const Structure& s, const std::vector<TheoremId>& ids);

/// Every id supported at this carrier size.
std::vector<TheoremVerdict> check_all(const Structure& s);

/// No verdict with equivalent == false.
bool aggregate_pass(const std::vector<TheoremVerdict>& verdicts);

}  // namespace gpw
