#include "subreg/families.hpp"

#include <algorithm>
#include <functional>

#include "subreg/automata.hpp"
#include "subreg/monoid.hpp"

namespace subreg {
namespace {

const Dfa& ensure_minimal(const Dfa& l, std::optional<Dfa>& storage) {
  if (l.minimal()) return l;
  storage = minimize(l);
  return *storage;
}

struct Cycle {
  std::size_t node;
  Word word;  // labels of a closed walk from node back to node
};

// Depth-first cycle search over nodes [0, n) restricted to `active`; `next`
// returns the successor of a node on a symbol or nullopt when the edge
// leaves the active subgraph.
std::optional<Cycle> find_cycle(
    std::size_t n, const Alphabet& v, const std::function<bool(std::size_t)>& active,
    const std::function<std::optional<std::size_t>(std::size_t, std::size_t)>& next) {
  enum Color : char { white, gray, black };
  std::vector<Color> color(n, white);
  struct Frame {
    std::size_t node;
    std::size_t symbol;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (!active(root) || color[root] != white) continue;
    std::vector<Frame> stack{{root, 0}};
    color[root] = gray;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.symbol == v.size()) {
        color[f.node] = black;
        stack.pop_back();
        continue;
      }
      std::size_t s = f.symbol++;
      auto t = next(f.node, s);
      if (!t || !active(*t)) continue;
      if (color[*t] == gray) {
        Cycle c{*t, {}};
        auto it = std::find_if(stack.begin(), stack.end(),
                               [&](const Frame& g) { return g.node == *t; });
        for (; it != stack.end(); ++it) c.word.push_back(v[it->symbol - 1]);
        return c;
      }
      if (color[*t] == white) {
        color[*t] = gray;
        stack.push_back({*t, 0});
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> pump_evidence(const Dfa& d) {
  const auto live = live_states(d);
  const auto reach = reachable_states(d);
  auto cycle = find_cycle(
      d.num_states(), d.alphabet(), [&](std::size_t q) { return live[q] && reach[q]; },
      [&](std::size_t q, std::size_t s) { return std::optional<std::size_t>(d.next(q, s)); });
  if (!cycle) return std::nullopt;
  std::vector<bool> target(d.num_states(), false);
  target[cycle->node] = true;
  Word x = *shortest_path(d, d.start(), target);
  Word z = *shortest_path(d, cycle->node, d.accepting());
  return "pump x=" + show_word(x) + " y=" + show_word(cycle->word) + " z=" + show_word(z);
}

Word path_to(const Dfa& d, State q) {
  std::vector<bool> target(d.num_states(), false);
  target[q] = true;
  return *shortest_path(d, d.start(), target);
}

}  // namespace

std::string Family::name() const {
  switch (kind) {
    case Kind::FIN: return "FIN";
    case Kind::MON: return "MON";
    case Kind::NIL: return "NIL";
    case Kind::COMB: return "COMB";
    case Kind::DEF: return "DEF";
    case Kind::SUF: return "SUF";
    case Kind::ORD: return "ORD";
    case Kind::COMM: return "COMM";
    case Kind::CIRC: return "CIRC";
    case Kind::NC: return "NC";
    case Kind::PS: return "PS";
    case Kind::UF: return "UF";
    case Kind::SLTk: return "SLT" + std::to_string(k);
    case Kind::SLT: return "SLT";
  }
  return "?";
}

Family Family::parse(std::string_view text) {
  using K = Kind;
  static const std::pair<std::string_view, K> names[] = {
      {"FIN", K::FIN}, {"MON", K::MON},   {"NIL", K::NIL},   {"COMB", K::COMB},
      {"DEF", K::DEF}, {"SUF", K::SUF},   {"ORD", K::ORD},   {"COMM", K::COMM},
      {"CIRC", K::CIRC}, {"NC", K::NC},   {"PS", K::PS},     {"UF", K::UF},
      {"SLT", K::SLT}};
  for (auto [n, k] : names) {
    if (text == n) return Family{k};
  }
  if (text.size() > 3 && text.substr(0, 3) == "SLT") {
    std::size_t k = 0;
    for (char c : text.substr(3)) {
      if (c < '0' || c > '9') throw InputError("unknown family '" + std::string(text) + "'");
      k = k * 10 + static_cast<std::size_t>(c - '0');
    }
    if (k == 0) throw InputError("SLT window length must be at least 1");
    return Family{K::SLTk, k};
  }
  throw InputError("unknown family '" + std::string(text) + "'");
}

std::string Verdict::status_text() const {
  switch (status) {
    case Status::yes: return "yes";
    case Status::no: return "no";
    case Status::unknown: return "unknown";
    case Status::unknown_up_to: return "unknown_up_to(" + std::to_string(bound) + ")";
  }
  return "?";
}

Verdict is_finite(const Dfa& l) {
  std::optional<Dfa> storage;
  const Dfa& d = ensure_minimal(l, storage);
  if (auto pump = pump_evidence(d)) return Verdict::no_(*pump);
  return Verdict::yes_();
}

Verdict is_monoidal(const Dfa& l) {
  if (auto w = distinguishing_word(l, Dfa::universal(l.alphabet()))) {
    return Verdict::no_("missing " + show_word(*w));
  }
  return Verdict::yes_();
}

Verdict is_nilpotent(const Dfa& l) {
  Verdict fin = is_finite(l);
  if (fin.yes()) return Verdict::yes_("finite");
  Verdict cofin = is_finite(complement(l));
  if (cofin.yes()) return Verdict::yes_("cofinite");
  return Verdict::no_("language " + fin.evidence + "; complement " + cofin.evidence);
}

CombinationalResult is_combinational(const Dfa& l) {
  CombinationalResult out;
  std::vector<Word> xs;
  for (char c : l.alphabet().symbols()) {
    if (accepts(l, std::string(1, c))) {
      out.symbols.push_back(c);
      xs.emplace_back(1, c);
    }
  }
  const std::string x_text = "X={" + out.symbols + "}";
  if (auto w = distinguishing_word(l, ends_with_any(l.alphabet(), xs))) {
    out.verdict = Verdict::no_(x_text + " but " + show_word(*w) + " differs from V*X");
  } else {
    out.verdict = Verdict::yes_(x_text);
  }
  return out;
}

Verdict is_definite(const Dfa& l) {
  std::optional<Dfa> storage;
  const Dfa& d = ensure_minimal(l, storage);
  const std::size_t n = d.num_states();
  auto cycle = find_cycle(
      n * n, d.alphabet(), [n](std::size_t x) { return x / n != x % n; },
      [&](std::size_t x, std::size_t s) -> std::optional<std::size_t> {
        State p = d.next(x / n, s), q = d.next(x % n, s);
        if (p == q) return std::nullopt;
        return p * n + q;
      });
  if (!cycle) return Verdict::yes_();
  State p = cycle->node / n, q = cycle->node % n;
  // p and q are distinct states of a minimal automaton, so some t separates them.
  Dfa from_p(d.alphabet(), n, p, d.accepting(), d.transitions());
  Dfa from_q(d.alphabet(), n, q, d.accepting(), d.transitions());
  Word t = *distinguishing_word(from_p, from_q);
  return Verdict::no_("x1=" + show_word(path_to(d, p)) + " x2=" + show_word(path_to(d, q)) +
                      " y=" + show_word(cycle->word) + " t=" + show_word(t) +
                      ": x1 y^m t and x2 y^m t differ for every m");
}

Verdict is_suffix_closed(const Dfa& l) {
  std::optional<Dfa> storage;
  const Dfa& d = ensure_minimal(l, storage);
  Nfa nfa(d.alphabet());
  for (State q = 0; q < d.num_states(); ++q) nfa.add_state(d.is_accepting(q));
  for (State q = 0; q < d.num_states(); ++q) {
    nfa.add_start(q);  // every state of a minimal automaton is reachable
    for (std::size_t s = 0; s < d.alphabet().size(); ++s) nfa.add_transition(q, s, d.next(q, s));
  }
  if (auto w = inclusion_counterexample(minimize(determinize(nfa)), d)) {
    for (State r = 0; r < d.num_states(); ++r) {
      if (!d.is_accepting(d.run(r, *w))) continue;
      // prefer the shortest nonempty missing suffix of the member
      const Word member = path_to(d, r) + *w;
      Word missing = *w;
      for (std::size_t i = member.size(); i-- > 1;) {
        if (!accepts(d, member.substr(i))) {
          missing = member.substr(i);
          break;
        }
      }
      return Verdict::no_("suffix " + show_word(missing) + " of member " + show_word(member) +
                          " is missing");
    }
  }
  return Verdict::yes_();
}

bool verify_order(const Dfa& d, const StateOrder& order) {
  const std::size_t n = d.num_states();
  std::vector<std::size_t> rank(n, n);
  if (order.sequence.size() != n) throw InputError("order does not cover every state");
  for (std::size_t i = 0; i < n; ++i) {
    State q = order.sequence[i];
    if (q >= n || rank[q] != n) throw InputError("order is not a permutation of the states");
    rank[q] = i;
  }
  for (std::size_t s = 0; s < d.alphabet().size(); ++s) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (rank[d.next(order.sequence[i], s)] > rank[d.next(order.sequence[i + 1], s)]) {
        return false;
      }
    }
  }
  return true;
}

namespace {

class OrderSearch {
 public:
  explicit OrderSearch(const Dfa& d) : d_(d), n_(d.num_states()) {}

  std::optional<StateOrder> run() {
    std::vector<signed char> rel(n_ * n_, 0);
    if (!solve(rel)) return std::nullopt;
    StateOrder order;
    order.sequence.resize(n_);
    for (State q = 0; q < n_; ++q) {
      std::size_t below = 0;
      for (State p = 0; p < n_; ++p) below += rel[p * n_ + q] < 0;
      order.sequence[below] = q;
    }
    return order;
  }

 private:
  // rel[p*n+q] = -1 means p before q.
  bool assume(std::vector<signed char>& rel, State p0, State q0) const {
    std::vector<std::pair<State, State>> work{{p0, q0}};
    while (!work.empty()) {
      auto [p, q] = work.back();
      work.pop_back();
      if (p == q) continue;
      if (rel[p * n_ + q] > 0) return false;
      if (rel[p * n_ + q] < 0) continue;
      rel[p * n_ + q] = -1;
      rel[q * n_ + p] = 1;
      for (std::size_t s = 0; s < d_.alphabet().size(); ++s) {
        work.emplace_back(d_.next(p, s), d_.next(q, s));
      }
      for (State r = 0; r < n_; ++r) {
        if (rel[r * n_ + p] < 0) work.emplace_back(r, q);
        if (rel[q * n_ + r] < 0) work.emplace_back(p, r);
      }
    }
    return true;
  }

  bool solve(std::vector<signed char>& rel) const {
    for (State p = 0; p < n_; ++p) {
      for (State q = p + 1; q < n_; ++q) {
        if (rel[p * n_ + q] != 0) continue;
        auto trial = rel;
        if (assume(trial, p, q) && solve(trial)) {
          rel = std::move(trial);
          return true;
        }
        trial = rel;
        if (assume(trial, q, p) && solve(trial)) {
          rel = std::move(trial);
          return true;
        }
        return false;
      }
    }
    return true;
  }

  const Dfa& d_;
  std::size_t n_;
};

std::string render_order(const StateOrder& order) {
  std::string out;
  for (std::size_t i = 0; i < order.sequence.size(); ++i) {
    if (i) out += "<";
    out += "z" + std::to_string(order.sequence[i]);
  }
  return out;
}

}  // namespace

namespace {

// Ordered automata over copies of minimal states, written as the sequence W
// of their labels from least to greatest.  W works iff for every letter the
// image sequence, with adjacent repeats merged, is a subsequence of W.
class CopySearch {
 public:
  CopySearch(const Dfa& d, std::size_t length, std::size_t& budget)
      : d_(d), w_(length), budget_(budget) {}

  /// Throws BudgetExhausted when the node budget runs out.
  struct BudgetExhausted {};

  std::optional<std::vector<State>> run() {
    if (extend(0)) return w_;
    return std::nullopt;
  }

 private:
  // Leftmost embedding of the merged image of w_[0, i) into w_[0, i); the
  // unmatched rest must still fit into the free positions.
  bool feasible(std::size_t i) const {
    for (std::size_t s = 0; s < d_.alphabet().size(); ++s) {
      std::size_t p = 0, pending = 0;
      State last = d_.num_states();
      for (std::size_t k = 0; k < i; ++k) {
        const State t = d_.next(w_[k], s);
        if (t == last) continue;
        last = t;
        if (pending == 0) {
          while (p < i && w_[p] != t) ++p;
          if (p < i) {
            ++p;
            continue;
          }
        }
        ++pending;
      }
      if (pending > w_.size() - i) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (budget_ == 0) throw BudgetExhausted{};
    --budget_;
    if (!feasible(i)) return false;
    if (i == w_.size()) return std::find(w_.begin(), w_.end(), d_.start()) != w_.end();
    for (State q = 0; q < d_.num_states(); ++q) {
      if (i > 0 && w_[i - 1] == q) continue;
      w_[i] = q;
      if (extend(i + 1)) return true;
    }
    return false;
  }

  const Dfa& d_;
  std::vector<State> w_;
  std::size_t& budget_;
};

// Automaton on positions of W; each letter maps a position to the leftmost
// embedding of its image, which is monotone.
Dfa copy_automaton(const Dfa& d, const std::vector<State>& w) {
  const std::size_t m = w.size();
  const std::size_t k = d.alphabet().size();
  std::vector<bool> acc(m);
  std::vector<State> table(m * k);
  for (std::size_t i = 0; i < m; ++i) acc[i] = d.is_accepting(w[i]);
  for (std::size_t s = 0; s < k; ++s) {
    std::size_t p = 0;
    State last = d.num_states();
    for (std::size_t i = 0; i < m; ++i) {
      const State t = d.next(w[i], s);
      if (t != last) {
        if (i > 0) ++p;
        while (w[p] != t) ++p;
        last = t;
      }
      table[i * k + s] = p;
    }
  }
  const State start = std::find(w.begin(), w.end(), d.start()) - w.begin();
  return Dfa(d.alphabet(), m, start, acc, table);
}

std::string render_labels(const std::vector<State>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "<z" : "z") + std::to_string(w[i]);
  return out;
}

}  // namespace

OrderResult is_orderable(const Dfa& l, const OrderOptions& options) {
  std::optional<Dfa> storage;
  const Dfa& d = ensure_minimal(l, storage);
  const std::size_t n = d.num_states();
  OrderResult out;
  if (auto order = OrderSearch(d).run()) {
    if (!verify_order(d, *order)) throw std::logic_error("order search produced a bad order");
    out.verdict = Verdict::yes_("order " + render_order(*order));
    out.automaton = d;
    out.order = std::move(order);
    return out;
  }
  const Verdict nc = is_noncounting(d);
  if (nc.no()) {
    out.verdict = Verdict::no_("counting (" + nc.evidence +
                               "), and monotone maps of a chain form an aperiodic monoid");
    return out;
  }
  const std::size_t extra = options.max_extra_states.value_or(n + 2);
  std::size_t budget = options.node_budget;
  std::size_t searched = n;
  try {
    for (std::size_t m = n + 1; m <= n + extra; ++m) {
      if (auto w = CopySearch(d, m, budget).run()) {
        Dfa a = copy_automaton(d, *w);
        StateOrder identity;
        for (State q = 0; q < m; ++q) identity.sequence.push_back(q);
        if (!verify_order(a, identity) || !are_equivalent(a, d)) {
          throw std::logic_error("copy search produced a bad automaton");
        }
        out.verdict = Verdict::yes_("order " + render_labels(*w) + " on " + std::to_string(m) +
                                    " states copying the " + std::to_string(n) +
                                    " minimal states");
        out.automaton = std::move(a);
        out.order = std::move(identity);
        return out;
      }
      searched = m;
    }
  } catch (const CopySearch::BudgetExhausted&) {
  }
  out.verdict = Verdict{Verdict::Status::unknown_up_to, searched,
                        "no ordered automaton with at most " + std::to_string(searched) +
                            " states; the minimal automaton has no monotone order"};
  return out;
}

Verdict is_commutative(const Dfa& l) {
  std::optional<Dfa> storage;
  const Dfa& d = ensure_minimal(l, storage);
  const Alphabet& v = d.alphabet();
  const std::size_t n = d.num_states();
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (a == b) continue;
      // {u·ba·v : u·ab·v ∈ L}: copy 0 reads u, a pending state after b,
      // copy 2 resumes at δ(q, ab).
      Nfa nfa(v);
      for (std::size_t i = 0; i < 3 * n; ++i) nfa.add_state(i >= 2 * n && d.is_accepting(i - 2 * n));
      nfa.add_start(d.start());
      for (State q = 0; q < n; ++q) {
        for (std::size_t s = 0; s < v.size(); ++s) {
          nfa.add_transition(q, s, d.next(q, s));
          nfa.add_transition(2 * n + q, s, 2 * n + d.next(q, s));
        }
        nfa.add_transition(q, b, n + q);
        nfa.add_transition(n + q, a, 2 * n + d.next(d.next(q, a), b));
      }
      if (auto w = inclusion_counterexample(minimize(determinize(nfa)), d)) {
        std::string from;
        for (std::size_t i = 0; i + 1 < w->size(); ++i) {
          if ((*w)[i] != v[b] || (*w)[i + 1] != v[a]) continue;
          Word orig = *w;
          std::swap(orig[i], orig[i + 1]);
          if (accepts(d, orig)) {
            from = orig;
            break;
          }
        }
        return Verdict::no_(show_word(*w) + " is a permutation of member " + show_word(from));
      }
    }
  }
  return Verdict::yes_();
}

Verdict is_circular(const Dfa& l) {
  std::optional<Dfa> storage;
  const Dfa& d = ensure_minimal(l, storage);
  const Alphabet& v = d.alphabet();
  const std::size_t n = d.num_states();
  // rot(L) = {w·a : a·w ∈ L}; state (a, q) remembers the moved symbol.
  Nfa nfa(v);
  State init = nfa.add_state();
  nfa.add_start(init);
  std::vector<State> base(v.size());
  for (std::size_t a = 0; a < v.size(); ++a) {
    base[a] = nfa.num_states();
    for (State q = 0; q < n; ++q) nfa.add_state();
  }
  State done = nfa.add_state(true);
  for (std::size_t a = 0; a < v.size(); ++a) {
    nfa.add_epsilon(init, base[a] + d.next(d.start(), a));
    for (State q = 0; q < n; ++q) {
      for (std::size_t s = 0; s < v.size(); ++s) nfa.add_transition(base[a] + q, s, base[a] + d.next(q, s));
      if (d.is_accepting(q)) nfa.add_transition(base[a] + q, a, done);
    }
  }
  if (auto w = inclusion_counterexample(minimize(determinize(nfa)), d)) {
    Word orig = w->back() + w->substr(0, w->size() - 1);
    return Verdict::no_(show_word(*w) + " is a circular shift of member " + show_word(orig));
  }
  return Verdict::yes_();
}

Verdict is_noncounting(const Dfa& l) {
  std::optional<Dfa> storage;
  const Dfa& d = ensure_minimal(l, storage);
  try {
    TransitionMonoid m = transition_monoid(d);
    for (std::size_t i = 0; i < m.size(); ++i) {
      PowerCycle pc = power_cycle(m.elements[i]);
      if (pc.period > 1) {
        return Verdict::no_("x=" + show_word(m.representatives[i]) + " has period " +
                            std::to_string(pc.period) + " from index " +
                            std::to_string(pc.index));
      }
    }
    return Verdict::yes_("aperiodic monoid of " + std::to_string(m.size()) + " elements");
  } catch (const MonoidTooLarge& e) {
    return Verdict::unknown_(e.what());
  }
}

Verdict is_power_separating(const Dfa& l) {
  std::optional<Dfa> storage;
  const Dfa& d = ensure_minimal(l, storage);
  try {
    TransitionMonoid m = transition_monoid(d);
    for (std::size_t i = 0; i < m.size(); ++i) {
      PowerCycle pc = power_cycle(m.elements[i]);
      const bool first = d.is_accepting(pc.powers[pc.index - 1][d.start()]);
      for (std::size_t e = pc.index; e < pc.index + pc.period; ++e) {
        if (d.is_accepting(pc.powers[e - 1][d.start()]) != first) {
          return Verdict::no_("x=" + show_word(m.representatives[i]) + ": powers from " +
                              std::to_string(pc.index) + " cycle with period " +
                              std::to_string(pc.period) + " through members and non-members");
        }
      }
    }
    return Verdict::yes_();
  } catch (const MonoidTooLarge& e) {
    return Verdict::unknown_(e.what());
  }
}

}  // namespace subreg
