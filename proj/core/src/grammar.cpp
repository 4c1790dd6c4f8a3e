#include "subreg/grammar.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "subreg/automata.hpp"
#include "subreg/classify.hpp"

namespace subreg {

LanguageHandle::LanguageHandle(Dfa dfa) : dfa_(std::move(dfa)), index_(256, -1) {
  for (std::size_t i = 0; i < dfa_.alphabet().size(); ++i) {
    index_[static_cast<unsigned char>(dfa_.alphabet()[i])] = static_cast<int>(i);
  }
}

LanguageHandle LanguageHandle::from_regex(const RegexAst& ast, const Alphabet& alphabet) {
  LanguageHandle h(compile_regex(ast, alphabet.empty() ? ast.symbols() : alphabet));
  h.regex_ = ast;
  return h;
}

LanguageHandle LanguageHandle::from_regex(std::string_view text, std::string_view alphabet) {
  return from_regex(parse_regex(text), Alphabet(alphabet));
}

LanguageHandle LanguageHandle::from_dfa(Dfa dfa) { return LanguageHandle(minimize(dfa)); }

LanguageHandle LanguageHandle::from_slt(SltRep rep) {
  rep.normalize();
  LanguageHandle h(minimize(slt_to_dfa(rep)));
  h.slt_ = std::move(rep);
  return h;
}

bool LanguageHandle::contains(std::string_view w) const {
  State q = dfa_.start();
  for (char c : w) {
    int i = index_[static_cast<unsigned char>(c)];
    if (i < 0) return false;
    q = dfa_.next(q, static_cast<std::size_t>(i));
  }
  return dfa_.is_accepting(q);
}

Mode parse_mode(std::string_view text) {
  if (text == "ex" || text == "external") return Mode::external;
  if (text == "in" || text == "internal") return Mode::internal;
  throw InputError("unknown derivation mode '" + std::string(text) + "' (expected ex or in)");
}

std::string mode_name(Mode m) { return m == Mode::external ? "ex" : "in"; }

std::vector<Diagnostic> validate_grammar(const ContextualGrammar& g) {
  using S = Diagnostic::Severity;
  std::vector<Diagnostic> out;
  for (const auto& a : g.axioms) {
    if (!g.alphabet.contains_word(a)) {
      out.push_back({S::error, "axiom " + show_word(a) + " is not over the alphabet"});
    }
  }
  if (g.axioms.empty()) out.push_back({S::warning, "grammar has no axioms"});
  for (std::size_t p = 0; p < g.pairs.size(); ++p) {
    const auto& pair = g.pairs[p];
    const std::string where = "pair " + std::to_string(p + 1) + ": ";
    if (!pair.selector.alphabet().is_subset_of(g.alphabet)) {
      out.push_back({S::error, where + "selection alphabet {" + pair.selector.alphabet().symbols() +
                                   "} is not contained in {" + g.alphabet.symbols() + "}"});
    }
    if (pair.contexts.empty()) out.push_back({S::error, where + "no contexts"});
    for (const auto& c : pair.contexts) {
      if (!g.alphabet.contains_word(c.u) || !g.alphabet.contains_word(c.v)) {
        out.push_back({S::error, where + "context (" + show_word(c.u) + "," + show_word(c.v) +
                                     ") is not over the alphabet"});
      } else if (c.u.empty() && c.v.empty()) {
        out.push_back({S::warning, where + "context (_,_) only yields self-loops"});
      }
    }
    if (pair.declared_family && !pair.selector.alphabet().empty()) {
      Verdict v = decide_family(pair.selector.dfa(), *pair.declared_family, pair.selector.regex());
      const std::string fam = pair.declared_family->name();
      if (v.no()) {
        out.push_back({S::error, where + "selector is not " + fam + " (" + v.evidence + ")"});
      } else if (!v.yes()) {
        out.push_back({S::warning, where + "membership in " + fam + " is " + v.status_text()});
      }
    }
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.severity == Diagnostic::Severity::error;
  });
}

namespace {

void collect_steps(const ContextualGrammar& g, Mode mode, std::string_view w, std::size_t first,
                   std::size_t last, std::vector<Step>& out) {
  auto emit = [&](std::size_t p, std::size_t i, std::size_t len) {
    const auto& ctx = g.pairs[p].contexts;
    for (std::size_t c = 0; c < ctx.size(); ++c) {
      Word y;
      y.reserve(w.size() + ctx[c].u.size() + ctx[c].v.size());
      y.append(w.substr(0, i)).append(ctx[c].u).append(w.substr(i, len)).append(ctx[c].v)
          .append(w.substr(i + len));
      out.push_back({p, c, i, len, std::move(y)});
    }
  };
  if (mode == Mode::external) {
    for (std::size_t p = first; p < last; ++p) {
      if (g.pairs[p].selector.contains(w)) emit(p, 0, w.size());
    }
    return;
  }
  const std::size_t n = w.size();
  std::vector<std::vector<bool>> hit(last - first);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t p = first; p < last; ++p) {
      auto& h = hit[p - first];
      h.assign(n - i + 1, false);
      const Dfa& d = g.pairs[p].selector.dfa();
      State q = d.start();
      h[0] = d.is_accepting(q);
      for (std::size_t j = i; j < n; ++j) {
        auto idx = d.alphabet().index_of(w[j]);
        if (!idx) break;
        q = d.next(q, *idx);
        h[j + 1 - i] = d.is_accepting(q);
      }
    }
    for (std::size_t len = 0; len <= n - i; ++len) {
      for (std::size_t p = first; p < last; ++p) {
        if (hit[p - first][len]) emit(p, i, len);
      }
    }
  }
}

std::vector<Word> distinct_results(const ContextualGrammar& g, std::vector<Step> steps) {
  std::vector<Word> out;
  out.reserve(steps.size());
  for (auto& s : steps) out.push_back(std::move(s.result));
  g.alphabet.sort_words(out);
  return out;
}

}  // namespace

std::vector<Step> successor_steps(const ContextualGrammar& g, Mode mode, std::string_view w) {
  std::vector<Step> out;
  collect_steps(g, mode, w, 0, g.pairs.size(), out);
  return out;
}

std::vector<Step> successor_steps(const ContextualGrammar& g, Mode mode, std::string_view w,
                                  std::size_t pair) {
  if (pair >= g.pairs.size()) throw InputError("no pair " + std::to_string(pair + 1));
  std::vector<Step> out;
  collect_steps(g, mode, w, pair, pair + 1, out);
  return out;
}

std::vector<Word> external_successors(const ContextualGrammar& g, std::string_view w) {
  return distinct_results(g, successor_steps(g, Mode::external, w));
}

std::vector<Word> internal_successors(const ContextualGrammar& g, std::string_view w) {
  return distinct_results(g, successor_steps(g, Mode::internal, w));
}

std::vector<Word> generate_bounded(const ContextualGrammar& g, Mode mode, std::size_t max_len,
                                   const GenerateOptions& options) {
  std::unordered_set<Word> seen;
  std::deque<Word> queue;
  std::vector<Word> axioms = g.axioms;
  g.alphabet.sort_words(axioms);
  for (const auto& a : axioms) {
    if (a.size() <= max_len && seen.insert(a).second) queue.push_back(a);
  }
  std::size_t expanded = 0;
  auto sorted_seen = [&] {
    std::vector<Word> out(seen.begin(), seen.end());
    g.alphabet.sort_words(out);
    return out;
  };
  while (!queue.empty()) {
    if (options.step_cap && expanded >= *options.step_cap) {
      throw BoundedResultError("step cap of " + std::to_string(*options.step_cap) +
                                   " expansions reached",
                               sorted_seen());
    }
    Word x = std::move(queue.front());
    queue.pop_front();
    ++expanded;
    for (auto& step : successor_steps(g, mode, x)) {
      if (options.observer) options.observer(x, step);
      if (step.result.size() > max_len || step.result == x) continue;
      if (seen.insert(step.result).second) queue.push_back(std::move(step.result));
    }
  }
  return sorted_seen();
}

DerivationTrace derivation_trace(const ContextualGrammar& g, Mode mode, std::string_view target,
                                 std::size_t max_len) {
  const Word goal(target);
  auto fail = [&] {
    return NotDerivable(show_word(goal) + " is not derivable within length " +
                        std::to_string(max_len));
  };
  if (goal.size() > max_len) throw fail();
  struct Origin {
    Word parent;
    Step step;
  };
  std::unordered_map<Word, std::optional<Origin>> origin;
  std::deque<Word> queue;
  std::vector<Word> axioms = g.axioms;
  g.alphabet.sort_words(axioms);
  for (const auto& a : axioms) {
    if (a.size() <= max_len && origin.emplace(a, std::nullopt).second) queue.push_back(a);
  }
  auto build = [&] {
    DerivationTrace t;
    Word cur = goal;
    while (const auto& o = origin.at(cur)) {
      t.steps.push_back(o->step);
      cur = o->parent;
    }
    t.axiom = cur;
    std::reverse(t.steps.begin(), t.steps.end());
    return t;
  };
  if (origin.count(goal)) return build();
  while (!queue.empty()) {
    Word x = std::move(queue.front());
    queue.pop_front();
    for (auto& step : successor_steps(g, mode, x)) {
      if (step.result.size() > max_len || origin.count(step.result)) continue;
      Word y = step.result;
      origin.emplace(y, Origin{x, std::move(step)});
      if (y == goal) return build();
      queue.push_back(std::move(y));
    }
  }
  throw fail();
}

Word replay_trace(const ContextualGrammar& g, Mode mode, const DerivationTrace& trace) {
  Word cur = trace.axiom;
  if (std::find(g.axioms.begin(), g.axioms.end(), cur) == g.axioms.end()) {
    throw InputError(show_word(cur) + " is not an axiom");
  }
  for (const auto& s : trace.steps) {
    if (s.pair >= g.pairs.size() || s.context >= g.pairs[s.pair].contexts.size() ||
        s.x1_len + s.x2_len > cur.size() ||
        (mode == Mode::external && (s.x1_len != 0 || s.x2_len != cur.size())) ||
        !g.pairs[s.pair].selector.contains(std::string_view(cur).substr(s.x1_len, s.x2_len))) {
      throw InputError("step does not apply to " + show_word(cur));
    }
    const Context& c = g.pairs[s.pair].contexts[s.context];
    cur = cur.substr(0, s.x1_len) + c.u + cur.substr(s.x1_len, s.x2_len) + c.v +
          cur.substr(s.x1_len + s.x2_len);
  }
  return cur;
}

std::string render_trace(const ContextualGrammar& g, Mode mode, const DerivationTrace& trace) {
  std::string out = show_word(trace.axiom) + "\n";
  Word cur = trace.axiom;
  for (const auto& s : trace.steps) {
    const Context& c = g.pairs[s.pair].contexts[s.context];
    out += "=> " + cur.substr(0, s.x1_len) + "[" + show_word(c.u) + "]" +
           cur.substr(s.x1_len, s.x2_len) + "[" + show_word(c.v) + "]" +
           cur.substr(s.x1_len + s.x2_len) + " = " + show_word(s.result) + "  (pair " +
           std::to_string(s.pair + 1) + ", " + mode_name(mode) + ")\n";
    cur = s.result;
  }
  return out;
}

BoundedComparison compare_bounded(std::vector<Word> left, std::vector<Word> right,
                                  const Alphabet& alphabet) {
  alphabet.sort_words(left);
  alphabet.sort_words(right);
  auto less = [&](const Word& a, const Word& b) { return alphabet.word_less(a, b); };
  BoundedComparison out;
  std::set_difference(left.begin(), left.end(), right.begin(), right.end(),
                      std::back_inserter(out.only_left), less);
  std::set_difference(right.begin(), right.end(), left.begin(), left.end(),
                      std::back_inserter(out.only_right), less);
  return out;
}

}  // namespace subreg
