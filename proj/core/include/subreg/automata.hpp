#pragma once

#include <optional>
#include <vector>

#include "subreg/dfa.hpp"

namespace subreg {

Dfa determinize(const Nfa& nfa);

/// Minimal complete automaton, states renumbered breadth-first from the
/// start state (symbols in alphabet order).  Equal languages therefore give
/// structurally equal results.
Dfa minimize(const Dfa& d);

enum class BoolOp { complement, intersect, unite, difference };

/// Set-theoretic combination; complement is relative to the operand's own V*.
/// Throws InputError on alphabet mismatch or a missing second operand.
Dfa bool_op(BoolOp kind, const Dfa& l1, const Dfa* l2 = nullptr);
Dfa complement(const Dfa& l);
Dfa intersect(const Dfa& l1, const Dfa& l2);
Dfa unite(const Dfa& l1, const Dfa& l2);
Dfa difference(const Dfa& l1, const Dfa& l2);

/// Shortest, then symbol-order-least word in exactly one of the languages;
/// nullopt iff equivalent.  Throws InputError on alphabet mismatch.
std::optional<Word> distinguishing_word(const Dfa& l1, const Dfa& l2);
bool are_equivalent(const Dfa& l1, const Dfa& l2);

/// Shortest (then least) word of L1 \ L2; nullopt iff L1 ⊆ L2.
std::optional<Word> inclusion_counterexample(const Dfa& l1, const Dfa& l2);

/// Words containing symbols outside the automaton's alphabet are rejected.
bool accepts(const Dfa& l, std::string_view w);

/// {w : |w| <= n, w in L} sorted by (length, alphabet order).
std::vector<Word> enumerate_upto(const Dfa& l, std::size_t n);

std::optional<Word> shortest_member(const Dfa& l);
bool is_empty(const Dfa& l);

/// Canonical length-k windows of L: prefixes (B*), interior windows with at
/// least one symbol on each side (I*), suffixes (E*).  Each sorted.
struct FactorSets {
  std::vector<Word> prefixes;
  std::vector<Word> interiors;
  std::vector<Word> suffixes;
};
FactorSets factor_sets(const Dfa& l, std::size_t k);

// State-set helpers; each returns a membership vector indexed by state.
std::vector<bool> reachable_states(const Dfa& d);
/// States reachable from the start by a nonempty word.
std::vector<bool> reachable_by_nonempty(const Dfa& d);
/// States from which some (possibly empty) word leads to acceptance.
std::vector<bool> live_states(const Dfa& d);
/// States from which some nonempty word leads to acceptance.
std::vector<bool> live_by_nonempty(const Dfa& d);

/// Shortest, least word driving `from` into a state satisfying `target`.
std::optional<Word> shortest_path(const Dfa& d, State from,
                                  const std::vector<bool>& target);

// Building blocks.
Dfa finite_language(const Alphabet& alphabet, const std::vector<Word>& words);
/// V* W for a finite W.
Dfa ends_with_any(const Alphabet& alphabet, const std::vector<Word>& words);
/// Same language over a larger alphabet (new symbols lead to rejection).
Dfa widen_alphabet(const Dfa& d, const Alphabet& wider);

}  // namespace subreg
