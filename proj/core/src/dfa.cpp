#include "subreg/dfa.hpp"

#include <string>

namespace subreg {

Dfa::Dfa(Alphabet alphabet, std::size_t num_states, State start,
         std::vector<bool> accepting, std::vector<State> transitions,
         bool minimal)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      start_(start),
      accepting_(std::move(accepting)),
      transitions_(std::move(transitions)),
      minimal_(minimal) {
  if (num_states_ == 0) throw InputError("automaton needs at least one state");
  if (start_ >= num_states_) throw InputError("start state out of range");
  if (accepting_.size() != num_states_) {
    throw InputError("accepting vector does not match state count");
  }
  if (transitions_.size() != num_states_ * alphabet_.size()) {
    throw InputError("transition table is not total");
  }
  for (State t : transitions_) {
    if (t >= num_states_) throw InputError("transition target out of range");
  }
}

Dfa Dfa::universal(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {true}, std::vector<State>(alphabet.size(), 0), true);
}

Dfa Dfa::empty_language(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {false}, std::vector<State>(alphabet.size(), 0), true);
}

State Dfa::run(State q, std::string_view w) const {
  for (char c : w) q = next(q, *alphabet_.index_of(c));
  return q;
}

State Nfa::add_state(bool accepting) {
  accepting_.push_back(accepting);
  transitions_.emplace_back(alphabet_.size());
  epsilon_.emplace_back();
  return accepting_.size() - 1;
}

void Nfa::check_state(State q) const {
  if (q >= num_states()) throw InputError("nfa state out of range");
}

void Nfa::set_accepting(State q, bool accepting) {
  check_state(q);
  accepting_[q] = accepting;
}

void Nfa::add_start(State q) {
  check_state(q);
  starts_.push_back(q);
}

void Nfa::add_transition(State from, std::size_t symbol_index, State to) {
  check_state(from);
  check_state(to);
  if (symbol_index >= alphabet_.size()) throw InputError("nfa symbol out of range");
  transitions_[from][symbol_index].push_back(to);
}

void Nfa::add_epsilon(State from, State to) {
  check_state(from);
  check_state(to);
  epsilon_[from].push_back(to);
}

}  // namespace subreg
