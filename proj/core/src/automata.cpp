#include "subreg/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace subreg {
namespace {

using StateSet = std::vector<State>;

void epsilon_close(const Nfa& nfa, StateSet& set) {
  std::vector<bool> in(nfa.num_states(), false);
  for (State q : set) in[q] = true;
  std::vector<State> stack(set.begin(), set.end());
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State t : nfa.epsilon_successors(q)) {
      if (!in[t]) {
        in[t] = true;
        set.push_back(t);
        stack.push_back(t);
      }
    }
  }
  std::sort(set.begin(), set.end());
}

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw InputError("alphabet mismatch: {" + a.alphabet().symbols() + "} vs {" +
                     b.alphabet().symbols() + "}");
  }
}

// Breadth-first search over the synchronous product; returns the word leading
// to the first pair satisfying `bad`.  Pairs are discovered in (length, symbol
// order) order, so the first hit carries the least witness.
template <typename Pred>
std::optional<Word> product_search(const Dfa& a, const Dfa& b, Pred bad) {
  require_same_alphabet(a, b);
  const std::size_t nb = b.num_states();
  const std::size_t sigma = a.alphabet().size();
  struct Parent {
    std::size_t prev;
    std::size_t symbol;
  };
  std::vector<std::optional<Parent>> parent(a.num_states() * nb);
  std::vector<bool> seen(a.num_states() * nb, false);
  auto key = [nb](State p, State q) { return p * nb + q; };
  std::size_t root = key(a.start(), b.start());
  seen[root] = true;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    State p = cur / nb, q = cur % nb;
    if (bad(p, q)) {
      Word w;
      for (std::size_t at = cur; parent[at]; at = parent[at]->prev) {
        w.push_back(a.alphabet()[parent[at]->symbol]);
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t i = 0; i < sigma; ++i) {
      std::size_t nxt = key(a.next(p, i), b.next(q, i));
      if (!seen[nxt]) {
        seen[nxt] = true;
        parent[nxt] = Parent{cur, i};
        queue.push_back(nxt);
      }
    }
  }
  return std::nullopt;
}

template <typename Combine>
Dfa product(const Dfa& a, const Dfa& b, Combine combine) {
  require_same_alphabet(a, b);
  const std::size_t nb = b.num_states();
  const std::size_t sigma = a.alphabet().size();
  std::map<std::size_t, State> ids;
  std::vector<std::size_t> order;
  auto intern = [&](State p, State q) {
    auto [it, fresh] = ids.emplace(p * nb + q, order.size());
    if (fresh) order.push_back(p * nb + q);
    return it->second;
  };
  intern(a.start(), b.start());
  std::vector<State> trans;
  std::vector<bool> acc;
  for (std::size_t i = 0; i < order.size(); ++i) {
    State p = order[i] / nb, q = order[i] % nb;
    acc.push_back(combine(a.is_accepting(p), b.is_accepting(q)));
    for (std::size_t s = 0; s < sigma; ++s) {
      trans.push_back(intern(a.next(p, s), b.next(q, s)));
    }
  }
  return minimize(Dfa(a.alphabet(), order.size(), 0, std::move(acc), std::move(trans)));
}

std::vector<bool> backward_closure(const Dfa& d, std::vector<bool> marked) {
  const std::size_t sigma = d.alphabet().size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (State q = 0; q < d.num_states(); ++q) {
      if (marked[q]) continue;
      for (std::size_t s = 0; s < sigma; ++s) {
        if (marked[d.next(q, s)]) {
          marked[q] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return marked;
}

}  // namespace

Dfa determinize(const Nfa& nfa) {
  const std::size_t sigma = nfa.alphabet().size();
  std::map<StateSet, State> ids;
  std::vector<StateSet> sets;
  auto intern = [&](StateSet s) {
    auto [it, fresh] = ids.emplace(s, sets.size());
    if (fresh) sets.push_back(std::move(s));
    return it->second;
  };
  StateSet init(nfa.starts().begin(), nfa.starts().end());
  std::sort(init.begin(), init.end());
  init.erase(std::unique(init.begin(), init.end()), init.end());
  epsilon_close(nfa, init);
  intern(std::move(init));
  std::vector<State> trans;
  std::vector<bool> acc;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool a = std::any_of(sets[i].begin(), sets[i].end(),
                         [&](State q) { return nfa.is_accepting(q); });
    acc.push_back(a);
    for (std::size_t s = 0; s < sigma; ++s) {
      StateSet next;
      for (State q : sets[i]) {
        const auto& succ = nfa.successors(q, s);
        next.insert(next.end(), succ.begin(), succ.end());
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      epsilon_close(nfa, next);
      trans.push_back(intern(std::move(next)));
    }
  }
  return Dfa(nfa.alphabet(), sets.size(), 0, std::move(acc), std::move(trans));
}

Dfa minimize(const Dfa& d) {
  const std::size_t sigma = d.alphabet().size();
  std::vector<bool> reach = reachable_states(d);

  // Moore refinement over reachable states.
  std::vector<std::size_t> cls(d.num_states(), 0);
  for (State q = 0; q < d.num_states(); ++q) cls[q] = d.is_accepting(q) ? 1 : 0;
  std::size_t num_classes = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> sig_ids;
    std::vector<std::size_t> next_cls(d.num_states(), 0);
    for (State q = 0; q < d.num_states(); ++q) {
      if (!reach[q]) continue;
      std::vector<std::size_t> sig{cls[q]};
      for (std::size_t s = 0; s < sigma; ++s) sig.push_back(cls[d.next(q, s)]);
      auto [it, fresh] = sig_ids.emplace(std::move(sig), sig_ids.size());
      next_cls[q] = it->second;
    }
    cls = std::move(next_cls);
    if (sig_ids.size() == num_classes) break;
    num_classes = sig_ids.size();
  }

  // Renumber classes breadth-first from the start.
  std::vector<std::optional<State>> id(num_classes);
  std::vector<State> rep;
  std::deque<State> queue{d.start()};
  id[cls[d.start()]] = 0;
  rep.push_back(d.start());
  std::vector<State> trans;
  std::vector<bool> acc;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    State q = rep[i];
    acc.push_back(d.is_accepting(q));
    for (std::size_t s = 0; s < sigma; ++s) {
      State t = d.next(q, s);
      auto& slot = id[cls[t]];
      if (!slot) {
        slot = rep.size();
        rep.push_back(t);
      }
      trans.push_back(*slot);
    }
  }
  return Dfa(d.alphabet(), rep.size(), 0, std::move(acc), std::move(trans), true);
}

Dfa bool_op(BoolOp kind, const Dfa& l1, const Dfa* l2) {
  if (kind == BoolOp::complement) {
    std::vector<bool> acc(l1.num_states());
    for (State q = 0; q < l1.num_states(); ++q) acc[q] = !l1.is_accepting(q);
    return minimize(Dfa(l1.alphabet(), l1.num_states(), l1.start(), std::move(acc),
                        l1.transitions()));
  }
  if (l2 == nullptr) throw InputError("binary operation needs two operands");
  switch (kind) {
    case BoolOp::intersect:
      return product(l1, *l2, [](bool a, bool b) { return a && b; });
    case BoolOp::unite:
      return product(l1, *l2, [](bool a, bool b) { return a || b; });
    case BoolOp::difference:
      return product(l1, *l2, [](bool a, bool b) { return a && !b; });
    case BoolOp::complement:
      break;
  }
  throw InputError("unknown boolean operation");
}

Dfa complement(const Dfa& l) { return bool_op(BoolOp::complement, l); }
Dfa intersect(const Dfa& l1, const Dfa& l2) { return bool_op(BoolOp::intersect, l1, &l2); }
Dfa unite(const Dfa& l1, const Dfa& l2) { return bool_op(BoolOp::unite, l1, &l2); }
Dfa difference(const Dfa& l1, const Dfa& l2) { return bool_op(BoolOp::difference, l1, &l2); }

std::optional<Word> distinguishing_word(const Dfa& l1, const Dfa& l2) {
  return product_search(l1, l2, [&](State p, State q) {
    return l1.is_accepting(p) != l2.is_accepting(q);
  });
}

bool are_equivalent(const Dfa& l1, const Dfa& l2) {
  return !distinguishing_word(l1, l2).has_value();
}

std::optional<Word> inclusion_counterexample(const Dfa& l1, const Dfa& l2) {
  return product_search(l1, l2, [&](State p, State q) {
    return l1.is_accepting(p) && !l2.is_accepting(q);
  });
}

bool accepts(const Dfa& l, std::string_view w) {
  State q = l.start();
  for (char c : w) {
    auto i = l.alphabet().index_of(c);
    if (!i) return false;
    q = l.next(q, *i);
  }
  return l.is_accepting(q);
}

std::vector<Word> enumerate_upto(const Dfa& l, std::size_t n) {
  const std::size_t sigma = l.alphabet().size();
  // Distance from each state to acceptance, for pruning.
  const std::size_t inf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(l.num_states(), inf);
  for (State q = 0; q < l.num_states(); ++q) {
    if (l.is_accepting(q)) dist[q] = 0;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (State q = 0; q < l.num_states(); ++q) {
      for (std::size_t s = 0; s < sigma; ++s) {
        std::size_t t = dist[l.next(q, s)];
        if (t != inf && t + 1 < dist[q]) {
          dist[q] = t + 1;
          changed = true;
        }
      }
    }
  }
  std::vector<Word> out;
  std::vector<std::pair<Word, State>> layer;
  if (dist[l.start()] <= n) layer.emplace_back(Word{}, l.start());
  for (std::size_t len = 0; !layer.empty(); ++len) {
    std::vector<std::pair<Word, State>> next;
    for (const auto& [w, q] : layer) {
      if (l.is_accepting(q)) out.push_back(w);
      if (len == n) continue;
      for (std::size_t s = 0; s < sigma; ++s) {
        State t = l.next(q, s);
        if (dist[t] != inf && len + 1 + dist[t] <= n) {
          next.emplace_back(w + l.alphabet()[s], t);
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::optional<Word> shortest_member(const Dfa& l) {
  return shortest_path(l, l.start(), l.accepting());
}

bool is_empty(const Dfa& l) { return !shortest_member(l).has_value(); }

std::vector<bool> reachable_states(const Dfa& d) {
  std::vector<bool> seen(d.num_states(), false);
  std::vector<State> stack{d.start()};
  seen[d.start()] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (std::size_t s = 0; s < d.alphabet().size(); ++s) {
      State t = d.next(q, s);
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<bool> reachable_by_nonempty(const Dfa& d) {
  std::vector<bool> reach = reachable_states(d);
  std::vector<bool> out(d.num_states(), false);
  for (State q = 0; q < d.num_states(); ++q) {
    if (!reach[q]) continue;
    for (std::size_t s = 0; s < d.alphabet().size(); ++s) out[d.next(q, s)] = true;
  }
  return out;
}

std::vector<bool> live_states(const Dfa& d) {
  return backward_closure(d, d.accepting());
}

std::vector<bool> live_by_nonempty(const Dfa& d) {
  std::vector<bool> live = live_states(d);
  std::vector<bool> out(d.num_states(), false);
  for (State q = 0; q < d.num_states(); ++q) {
    for (std::size_t s = 0; s < d.alphabet().size(); ++s) {
      if (live[d.next(q, s)]) out[q] = true;
    }
  }
  return out;
}

std::optional<Word> shortest_path(const Dfa& d, State from,
                                  const std::vector<bool>& target) {
  std::vector<std::optional<std::pair<State, std::size_t>>> parent(d.num_states());
  std::vector<bool> seen(d.num_states(), false);
  std::deque<State> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    if (target[q]) {
      Word w;
      for (State at = q; parent[at]; at = parent[at]->first) {
        w.push_back(d.alphabet()[parent[at]->second]);
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t s = 0; s < d.alphabet().size(); ++s) {
      State t = d.next(q, s);
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = std::make_pair(q, s);
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

namespace {

// Depth-first walk over V^k tracking the image of a state set; `keep`
// decides whether a finished window is collected.
void walk_windows(const Dfa& d, std::size_t k, const std::vector<bool>& start,
                  const std::vector<bool>& live,
                  const std::vector<bool>& collect_if_any,
                  std::vector<Word>& out) {
  const std::size_t sigma = d.alphabet().size();
  StateSet init;
  for (State q = 0; q < d.num_states(); ++q) {
    if (start[q]) init.push_back(q);
  }
  Word w;
  auto rec = [&](auto&& self, const StateSet& cur) -> void {
    if (w.size() == k) {
      if (std::any_of(cur.begin(), cur.end(), [&](State q) { return collect_if_any[q]; })) {
        out.push_back(w);
      }
      return;
    }
    for (std::size_t s = 0; s < sigma; ++s) {
      StateSet next;
      for (State q : cur) {
        State t = d.next(q, s);
        if (live[t]) next.push_back(t);
      }
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      w.push_back(d.alphabet()[s]);
      self(self, next);
      w.pop_back();
    }
  };
  StateSet live_init;
  for (State q : init) {
    if (live[q]) live_init.push_back(q);
  }
  if (!live_init.empty()) rec(rec, live_init);
}

}  // namespace

FactorSets factor_sets(const Dfa& l, std::size_t k) {
  if (k == 0) throw InputError("window length must be at least 1");
  std::vector<bool> live = live_states(l);
  std::vector<bool> start_only(l.num_states(), false);
  start_only[l.start()] = true;
  FactorSets out;
  walk_windows(l, k, start_only, live, live, out.prefixes);
  walk_windows(l, k, reachable_by_nonempty(l), live, live_by_nonempty(l), out.interiors);
  walk_windows(l, k, reachable_states(l), live, l.accepting(), out.suffixes);
  return out;
}

Dfa finite_language(const Alphabet& alphabet, const std::vector<Word>& words) {
  Nfa nfa(alphabet);
  State root = nfa.add_state();
  nfa.add_start(root);
  for (const auto& w : words) {
    State q = root;
    for (char c : w) {
      auto i = alphabet.index_of(c);
      if (!i) throw InputError("word '" + w + "' uses a symbol outside the alphabet");
      State t = nfa.add_state();
      nfa.add_transition(q, *i, t);
      q = t;
    }
    nfa.set_accepting(q);
  }
  return minimize(determinize(nfa));
}

Dfa ends_with_any(const Alphabet& alphabet, const std::vector<Word>& words) {
  Nfa nfa(alphabet);
  State root = nfa.add_state();
  nfa.add_start(root);
  for (std::size_t s = 0; s < alphabet.size(); ++s) nfa.add_transition(root, s, root);
  for (const auto& w : words) {
    State q = root;
    for (char c : w) {
      auto i = alphabet.index_of(c);
      if (!i) throw InputError("word '" + w + "' uses a symbol outside the alphabet");
      State t = nfa.add_state();
      nfa.add_transition(q, *i, t);
      q = t;
    }
    nfa.set_accepting(q);
  }
  return minimize(determinize(nfa));
}

Dfa widen_alphabet(const Dfa& d, const Alphabet& wider) {
  if (!d.alphabet().is_subset_of(wider)) {
    throw InputError("target alphabet does not contain {" + d.alphabet().symbols() + "}");
  }
  const std::size_t n = d.num_states();
  const State sink = n;
  std::vector<State> trans;
  for (State q = 0; q <= n; ++q) {
    for (std::size_t s = 0; s < wider.size(); ++s) {
      auto i = d.alphabet().index_of(wider[s]);
      trans.push_back(q == sink || !i ? sink : d.next(q, *i));
    }
  }
  std::vector<bool> acc = d.accepting();
  acc.push_back(false);
  return minimize(Dfa(wider, n + 1, d.start(), std::move(acc), std::move(trans)));
}

}  // namespace subreg
