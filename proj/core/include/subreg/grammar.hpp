#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subreg/families.hpp"
#include "subreg/regex.hpp"
#include "subreg/slt.hpp"

namespace subreg {

/// Selection language over its own alphabet U.  Keeps the source object
/// and a compiled minimal automaton over U.
class LanguageHandle {
 public:
  /// `alphabet` empty means the expression's own symbols.
  static LanguageHandle from_regex(const RegexAst& ast, const Alphabet& alphabet = {});
  static LanguageHandle from_regex(std::string_view text, std::string_view alphabet = {});
  static LanguageHandle from_dfa(Dfa dfa);
  static LanguageHandle from_slt(SltRep rep);

  const Alphabet& alphabet() const { return dfa_.alphabet(); }
  const Dfa& dfa() const { return dfa_; }
  const std::optional<RegexAst>& regex() const { return regex_; }
  const std::optional<SltRep>& slt() const { return slt_; }

  /// False for any word with a symbol outside U.
  bool contains(std::string_view w) const;

 private:
  explicit LanguageHandle(Dfa dfa);
  Dfa dfa_;
  std::optional<RegexAst> regex_;
  std::optional<SltRep> slt_;
  std::vector<int> index_;  // symbol -> alphabet index, -1 if foreign
};

struct Context {
  Word u, v;
  friend bool operator==(const Context&, const Context&) = default;
};

struct SelectionPair {
  LanguageHandle selector;
  std::vector<Context> contexts;
  std::optional<Family> declared_family;
};

struct ContextualGrammar {
  Alphabet alphabet;
  std::vector<SelectionPair> pairs;
  std::vector<Word> axioms;
};

enum class Mode { external, internal };
/// "ex" / "in" (also "external" / "internal").
Mode parse_mode(std::string_view text);
std::string mode_name(Mode m);

struct Diagnostic {
  enum class Severity { warning, error };
  Severity severity;
  std::string message;
};
std::vector<Diagnostic> validate_grammar(const ContextualGrammar& g);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// One derivation step.  External steps have x1_len = 0 and x2_len = |x|.
struct Step {
  std::size_t pair = 0;
  std::size_t context = 0;
  std::size_t x1_len = 0;
  std::size_t x2_len = 0;
  Word result;
};

/// Every applicable step on `w`, self-loops included, in order of split
/// (x1 length, then x2 length), then pair, then context.
std::vector<Step> successor_steps(const ContextualGrammar& g, Mode mode, std::string_view w);
/// Same, restricted to one pair.
std::vector<Step> successor_steps(const ContextualGrammar& g, Mode mode, std::string_view w,
                                  std::size_t pair);

/// Successor words, sorted by (length, alphabet order), without duplicates.
std::vector<Word> external_successors(const ContextualGrammar& g, std::string_view w);
std::vector<Word> internal_successors(const ContextualGrammar& g, std::string_view w);

/// Thrown when the step cap runs out; carries the words found so far.
class BoundedResultError : public std::runtime_error {
 public:
  BoundedResultError(std::string what, std::vector<Word> partial)
      : std::runtime_error(std::move(what)), partial(std::move(partial)) {}
  std::vector<Word> partial;
};

struct GenerateOptions {
  /// Maximum number of words expanded.
  std::optional<std::size_t> step_cap;
  /// Called for every step taken from an expanded word, before length
  /// filtering.
  std::function<void(const Word& from, const Step& step)> observer;
};

/// L_mode(G) ∩ V^{<=max_len}, sorted by (length, alphabet order).
std::vector<Word> generate_bounded(const ContextualGrammar& g, Mode mode, std::size_t max_len,
                                   const GenerateOptions& options = {});

struct DerivationTrace {
  Word axiom;
  std::vector<Step> steps;
};

/// Thrown when the target has no derivation within the length bound.
class NotDerivable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fewest-step derivation of `target`, canonical among equals.
DerivationTrace derivation_trace(const ContextualGrammar& g, Mode mode, std::string_view target,
                                 std::size_t max_len);
/// Re-applies the steps; throws InputError if a step does not apply.
Word replay_trace(const ContextualGrammar& g, Mode mode, const DerivationTrace& trace);
/// `ab => a[c]b[d]` style, one step per line.
std::string render_trace(const ContextualGrammar& g, Mode mode, const DerivationTrace& trace);

struct BoundedComparison {
  std::vector<Word> only_left;
  std::vector<Word> only_right;
  bool equal() const { return only_left.empty() && only_right.empty(); }
};
/// Symmetric difference of two word sets; outputs sorted over `alphabet`.
BoundedComparison compare_bounded(std::vector<Word> left, std::vector<Word> right,
                                  const Alphabet& alphabet);

}  // namespace subreg
