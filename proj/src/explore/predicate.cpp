#include "gpw/predicate.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <optional>

#include "gpw/analysis.hpp"

namespace gpw {

namespace {

bool every_ideal(const Structure& s, bool (*pred)(const Structure&, const Subset&)) {
  for (const auto& t : all_ideals(s, IdealKind::TwoSided))
    if (!pred(s, t)) return false;
  return true;
}

using Check = std::function<bool(const Structure&)>;

const std::vector<std::pair<std::string, Check>>& registry() {
  static const std::vector<std::pair<std::string, Check>> table = {
      {"intra_regular", is_intra_regular},
      {"intra_regular_legacy", is_intra_regular_legacy},
      {"left_regular", is_left_regular},
      {"right_regular", is_right_regular},
      {"left_duo", is_left_duo},
      {"right_duo", is_right_duo},
      {"ideals_chain", [](const Structure& s) { return ideals_form_chain(s, IdealKind::TwoSided); }},
      {"ideals_prime", [](const Structure& s) { return every_ideal(s, is_prime); }},
      {"ideals_semiprime", [](const Structure& s) { return every_ideal(s, is_semiprime); }},
      {"ideals_weakly_prime", [](const Structure& s) { return every_ideal(s, is_weakly_prime); }},
      {"semilattice_of_simple", [](const Structure& s) { return decompose(s).is_semilattice_of_simple; }},
      {"chain_of_simple", [](const Structure& s) { return decompose(s).is_chain_of_simple; }},
      {"simple", [](const Structure& s) { return is_simple(s, s.full()); }},
      {"left_simple", [](const Structure& s) { return is_left_simple(s, s.full()); }},
  };
  return table;
}

const Check* lookup(const std::string& name) {
  for (const auto& [n, f] : registry())
    if (n == name) return &f;
  return nullptr;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) { advance(); }

  PredicateExpr::Node parse() {
    auto node = parse_or();
    if (!tok_.empty()) fail("unexpected '" + tok_ + "'");
    return node;
  }

 private:
  using Node = PredicateExpr::Node;

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("predicate expression: " + msg + " in \"" + text_ + "\"");
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) {
      tok_.clear();
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      tok_ = text_.substr(start, pos_ - start);
      if (tok_ == "and") tok_ = "&";
      else if (tok_ == "or") tok_ = "|";
      else if (tok_ == "not") tok_ = "!";
      return;
    }
    if ((c == '&' || c == '|') && pos_ + 1 < text_.size() && text_[pos_ + 1] == c) {
      tok_ = std::string(1, c);
      pos_ += 2;
      return;
    }
    if (c == '&' || c == '|' || c == '!' || c == '(' || c == ')') {
      tok_ = std::string(1, c);
      ++pos_;
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Node parse_or() {
    Node left = parse_and();
    while (tok_ == "|") {
      advance();
      left = Node{Node::Kind::Or, {}, {std::move(left), parse_and()}};
    }
    return left;
  }

  Node parse_and() {
    Node left = parse_not();
    while (tok_ == "&") {
      advance();
      left = Node{Node::Kind::And, {}, {std::move(left), parse_not()}};
    }
    return left;
  }

  Node parse_not() {
    if (tok_ == "!") {
      advance();
      return Node{Node::Kind::Not, {}, {parse_not()}};
    }
    if (tok_ == "(") {
      advance();
      Node inner = parse_or();
      if (tok_ != ")") fail("missing ')'");
      advance();
      return inner;
    }
    if (tok_.empty()) fail("unexpected end of input");
    if (lookup(tok_) == nullptr) fail("unknown predicate '" + tok_ + "'");
    Node leaf{Node::Kind::Name, tok_, {}};
    advance();
    return leaf;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::string tok_;
};

class Evaluator {
 public:
  explicit Evaluator(const Structure& s) : s_(s) {}

  bool eval(const PredicateExpr::Node& node) {
    using Kind = PredicateExpr::Node::Kind;
    switch (node.kind) {
      case Kind::Name: {
        auto it = cache_.find(node.name);
        if (it == cache_.end()) it = cache_.emplace(node.name, (*lookup(node.name))(s_)).first;
        return it->second;
      }
      case Kind::Not: return !eval(node.kids[0]);
      case Kind::And: return eval(node.kids[0]) && eval(node.kids[1]);
      case Kind::Or: return eval(node.kids[0]) || eval(node.kids[1]);
    }
    return false;
  }

 private:
  const Structure& s_;
  std::map<std::string, bool> cache_;
};

std::string render(const PredicateExpr::Node& node) {
  using Kind = PredicateExpr::Node::Kind;
  switch (node.kind) {
    case Kind::Name: return node.name;
    case Kind::Not: return "!" + render(node.kids[0]);
    case Kind::And: return "(" + render(node.kids[0]) + " & " + render(node.kids[1]) + ")";
    case Kind::Or: return "(" + render(node.kids[0]) + " | " + render(node.kids[1]) + ")";
  }
  return {};
}

}  // namespace

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

bool evaluate_predicate(const Structure& s, const std::string& name) {
  const Check* f = lookup(name);
  if (f == nullptr) throw InputError("unknown predicate '" + name + "'");
  return (*f)(s);
}

std::vector<std::pair<std::string, bool>> evaluate_all_predicates(const Structure& s) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& [name, f] : registry()) out.emplace_back(name, f(s));
  return out;
}

PredicateExpr PredicateExpr::parse(const std::string& text) { return PredicateExpr(Parser(text).parse()); }

bool PredicateExpr::evaluate(const Structure& s) const { return Evaluator(s).eval(root_); }

std::string PredicateExpr::to_string() const { return render(root_); }

}  // namespace gpw
