#pragma once

#include <cstddef>
#include <vector>

#include "subreg/alphabet.hpp"

namespace subreg {

using State = std::size_t;

/// Complete deterministic finite automaton.  Immutable once built; the
/// transition map is total over states x alphabet.
class Dfa {
 public:
  /// `transitions[q * |alphabet| + i]` is the successor of q on symbol i.
  /// Throws InputError if the table is not total or references bad states.
  Dfa(Alphabet alphabet, std::size_t num_states, State start,
      std::vector<bool> accepting, std::vector<State> transitions,
      bool minimal = false);

  /// One-state automaton for V* (accept = true) or the empty language.
  static Dfa universal(const Alphabet& alphabet);
  static Dfa empty_language(const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return num_states_; }
  State start() const { return start_; }
  bool is_accepting(State q) const { return accepting_[q]; }
  const std::vector<bool>& accepting() const { return accepting_; }
  State next(State q, std::size_t symbol_index) const {
    return transitions_[q * alphabet_.size() + symbol_index];
  }
  const std::vector<State>& transitions() const { return transitions_; }

  /// Set only by minimize(): all states reachable, pairwise distinguishable,
  /// numbered in breadth-first order from the start state.
  bool minimal() const { return minimal_; }

  /// Runs `w` from q; nullopt-free because callers check the alphabet.
  State run(State q, std::string_view w) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  Alphabet alphabet_;
  std::size_t num_states_;
  State start_;
  std::vector<bool> accepting_;
  std::vector<State> transitions_;
  bool minimal_;
};

/// Nondeterministic automaton with epsilon moves.  Used as an intermediate
/// for closures (suffixes, rotations, transpositions) and regex compilation.
class Nfa {
 public:
  explicit Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return accepting_.size(); }

  State add_state(bool accepting = false);
  void set_accepting(State q, bool accepting = true);
  void add_start(State q);
  void add_transition(State from, std::size_t symbol_index, State to);
  void add_epsilon(State from, State to);

  const std::vector<State>& starts() const { return starts_; }
  bool is_accepting(State q) const { return accepting_[q]; }
  const std::vector<State>& successors(State q, std::size_t symbol_index) const {
    return transitions_[q][symbol_index];
  }
  const std::vector<State>& epsilon_successors(State q) const {
    return epsilon_[q];
  }

 private:
  void check_state(State q) const;

  Alphabet alphabet_;
  std::vector<State> starts_;
  std::vector<bool> accepting_;
  std::vector<std::vector<std::vector<State>>> transitions_;
  std::vector<std::vector<State>> epsilon_;
};

}  // namespace subreg
