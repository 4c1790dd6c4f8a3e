#include "subreg/monoid.hpp"

#include <map>
#include <numeric>

namespace subreg {

TransitionMonoid transition_monoid(const Dfa& d, std::size_t max_elements) {
  TransitionMonoid m;
  std::map<Transformation, std::size_t> index;
  Transformation id(d.num_states());
  std::iota(id.begin(), id.end(), State{0});
  index.emplace(id, 0);
  m.elements.push_back(std::move(id));
  m.representatives.emplace_back();
  for (std::size_t i = 0; i < m.elements.size(); ++i) {
    for (std::size_t s = 0; s < d.alphabet().size(); ++s) {
      Transformation t(d.num_states());
      for (State q = 0; q < d.num_states(); ++q) t[q] = d.next(m.elements[i][q], s);
      if (index.count(t)) continue;
      if (m.elements.size() >= max_elements) {
        throw MonoidTooLarge("transition monoid exceeds " + std::to_string(max_elements) +
                             " elements");
      }
      index.emplace(t, m.elements.size());
      m.elements.push_back(std::move(t));
      m.representatives.push_back(m.representatives[i] + d.alphabet()[s]);
    }
  }
  return m;
}

PowerCycle power_cycle(const Transformation& t) {
  PowerCycle out;
  std::map<Transformation, std::size_t> seen;
  Transformation cur = t;
  for (std::size_t e = 1;; ++e) {
    auto it = seen.find(cur);
    if (it != seen.end()) {
      out.index = it->second;
      out.period = e - it->second;
      return out;
    }
    seen.emplace(cur, e);
    out.powers.push_back(cur);
    Transformation nxt(cur.size());
    for (State q = 0; q < cur.size(); ++q) nxt[q] = t[cur[q]];
    cur = std::move(nxt);
  }
}

}  // namespace subreg
