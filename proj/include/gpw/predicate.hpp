#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gpw/structure.hpp"

namespace gpw {

/// Registered structure-level predicate names, in reporting order.
const std::vector<std::string>& predicate_names();

/// Throws InputError for an unregistered name.
bool evaluate_predicate(const Structure& s, const std::string& name);

/// Every registered predicate, in predicate_names() order.
std::vector<std::pair<std::string, bool>> evaluate_all_predicates(const Structure& s);

/// Boolean combination of registered predicates.
///
/// Grammar: expr := term ('|' term)*, term := factor ('&' factor)*,
/// factor := '!' factor | '(' expr ')' | name. "&&", "||", "and", "or" and
/// "not" are accepted as spellings of the same operators.
class PredicateExpr {
 public:
  /// Throws InputError on syntax errors or unknown names.
  static PredicateExpr parse(const std::string& text);

  bool evaluate(const Structure& s) const;
  /// Fully parenthesized rendering, stable across equivalent spellings.
  std::string to_string() const;

  struct Node {
    enum class Kind { Name, Not, And, Or } kind;
    std::string name;
    std::vector<Node> kids;
  };

 private:
  explicit PredicateExpr(Node root) : root_(std::move(root)) {}
  Node root_;
};

}  // namespace gpw
