#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subreg/dfa.hpp"

namespace subreg {

/// Subregular family tag.  SLT_k carries its window length in `k`; the
/// unparameterised SLT family has k == 0.
struct Family {
  enum class Kind { FIN, MON, NIL, COMB, DEF, SUF, ORD, COMM, CIRC, NC, PS, UF, SLTk, SLT };
  Kind kind;
  std::size_t k = 0;

  std::string name() const;
  /// Accepts the names produced by name(), e.g. "NC", "SLT3", "SLT".
  static Family parse(std::string_view text);

  friend bool operator==(const Family&, const Family&) = default;
};

/// Tri-state verdict with evidence.  `unknown_up_to` carries the bound that
/// was searched; `unknown` means the tool has no decision (e.g. UF without
/// a union-free expression).
struct Verdict {
  enum class Status { yes, no, unknown, unknown_up_to };
  Status status = Status::unknown;
  std::size_t bound = 0;
  std::string evidence;

  static Verdict yes_(std::string evidence = {}) { return {Status::yes, 0, std::move(evidence)}; }
  static Verdict no_(std::string evidence) { return {Status::no, 0, std::move(evidence)}; }
  static Verdict unknown_(std::string evidence = {}) {
    return {Status::unknown, 0, std::move(evidence)};
  }

  bool yes() const { return status == Status::yes; }
  bool no() const { return status == Status::no; }
  std::string status_text() const;
};

Verdict is_finite(const Dfa& l);
Verdict is_monoidal(const Dfa& l);
Verdict is_nilpotent(const Dfa& l);

struct CombinationalResult {
  Verdict verdict;
  /// X = L ∩ V, the only candidate for L = V* X.
  std::string symbols;
};
CombinationalResult is_combinational(const Dfa& l);

/// Pair-graph criterion on the minimal automaton: every long enough word
/// must merge every pair of states.
Verdict is_definite(const Dfa& l);
Verdict is_suffix_closed(const Dfa& l);

/// Total order over automaton states, least first.
struct StateOrder {
  std::vector<State> sequence;
  friend bool operator==(const StateOrder&, const StateOrder&) = default;
};

/// True iff every letter maps the order monotonically.  Throws InputError
/// if `order` is not a permutation of the automaton's states.
bool verify_order(const Dfa& d, const StateOrder& order);

struct OrderResult {
  Verdict verdict;
  /// On yes: an automaton for the language and a monotone order on it.
  /// This is the minimal automaton when it can be ordered, otherwise an
  /// automaton with some minimal states copied.
  std::optional<Dfa> automaton;
  std::optional<StateOrder> order;
};

struct OrderOptions {
  /// Largest automaton tried, as extra copies beyond the minimal states.
  /// Default: minimal states + 2.
  std::optional<std::size_t> max_extra_states;
  /// Search nodes for the copy search.
  std::size_t node_budget = 1000000;
};

/// Orderability by some automaton.  First the minimal automaton (exact
/// backtracking), then a refutation when the language counts (ordered
/// automata have aperiodic monoids), then a bounded search over automata
/// that copy minimal states.  The last stage alone ends in unknown_up_to.
OrderResult is_orderable(const Dfa& l, const OrderOptions& options = {});

Verdict is_commutative(const Dfa& l);
Verdict is_circular(const Dfa& l);
Verdict is_noncounting(const Dfa& l);
Verdict is_power_separating(const Dfa& l);

}  // namespace subreg
