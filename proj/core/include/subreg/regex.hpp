#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "subreg/dfa.hpp"

namespace subreg {

/// Expression tree over {empty, epsilon, symbol, concat, union, star}.
/// Nodes are shared and immutable.
class RegexAst {
 public:
  enum class Kind { empty, epsilon, symbol, concat, alt, star };

  static RegexAst empty();
  static RegexAst epsilon();
  static RegexAst symbol(char c);
  static RegexAst concat(RegexAst l, RegexAst r);
  static RegexAst alt(RegexAst l, RegexAst r);
  static RegexAst star(RegexAst x);

  Kind kind() const { return node_->kind; }
  char sym() const { return node_->sym; }
  const RegexAst& left() const { return *node_->left; }
  const RegexAst& right() const { return *node_->right; }

  /// Symbols in first-occurrence order.
  Alphabet symbols() const;

  /// Fully parenthesised-where-needed surface syntax; re-parses to an
  /// equal tree.
  std::string to_string() const;

  /// Structural equality.
  friend bool operator==(const RegexAst& a, const RegexAst& b);

 private:
  struct Node {
    Kind kind;
    char sym = 0;
    std::shared_ptr<const RegexAst> left, right;
  };
  explicit RegexAst(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Surface syntax: juxtaposition concatenates, `|` unions, postfix `*` and
/// `+` (x+ = x x*), parentheses group, `_` is λ, `~` is the empty language.
/// Whitespace is ignored.  Throws InputError with the offending offset.
RegexAst parse_regex(std::string_view text);

/// Minimal automaton for the expression.  Throws InputError if the
/// expression mentions a symbol outside `alphabet`.
Dfa compile_regex(const RegexAst& ast, const Alphabet& alphabet);
/// Convenience: parse and compile over the given alphabet, or over the
/// expression's own symbols when `alphabet` is empty.
Dfa compile_regex(std::string_view text, std::string_view alphabet = {});

/// True iff no union node occurs.  A certificate check on this expression
/// only, not a decision for the language.
bool is_union_free_syntactic(const RegexAst& ast);

}  // namespace subreg
