#pragma once

#include <vector>

#include "subreg/dfa.hpp"

namespace subreg {

/// State transformation q -> t[q].
using Transformation = std::vector<State>;

/// Transition monoid of an automaton: every distinct transformation induced
/// by a word, each with its shortest (then least) representative word.
/// Element 0 is the identity (word λ).
struct TransitionMonoid {
  std::vector<Transformation> elements;
  std::vector<Word> representatives;

  std::size_t size() const { return elements.size(); }
};

/// Thrown when the monoid exceeds the element cap.
class MonoidTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TransitionMonoid transition_monoid(const Dfa& d, std::size_t max_elements = 200000);

/// First t^a == t^(a+p) with a >= 1: returns (a, p).
struct PowerCycle {
  std::size_t index;
  std::size_t period;
  std::vector<Transformation> powers;  // t^1 .. t^(index+period-1)
};
PowerCycle power_cycle(const Transformation& t);

}  // namespace subreg
