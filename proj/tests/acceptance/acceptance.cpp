// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// limit.  Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../support/implications.hpp"
#include "subreg/automata.hpp"
#include "subreg/classify.hpp"
#include "subreg/regex.hpp"
#include "subreg/slt.hpp"
#include "subreg/witness.hpp"

using namespace subreg;
using Words = std::vector<Word>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.clear();
    if (!detail.empty()) detail += "; ";
    detail += what;
    pass = false;
  }
};

// Every generation in the suite goes through here so that criterion 11 sees
// each expansion step.
struct AuditTotals {
  std::size_t runs = 0, steps = 0, violations = 0;
  std::string first;
} totals;

Words generate(const ContextualGrammar& g, Mode mode, std::size_t max_len) {
  ExpansionAudit audit(g, mode);
  Words out = generate_bounded(g, mode, max_len, audit.options());
  ++totals.runs;
  totals.steps += audit.steps();
  totals.violations += audit.violations();
  if (totals.first.empty()) totals.first = audit.first_violation();
  return out;
}

Words all_words_upto(const Alphabet& v, std::size_t max_len) {
  Words out{""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (char c : v.symbols()) out.push_back(out[i] + c);
  }
  return out;
}

std::string show(const Words& w, std::size_t limit = 6) {
  std::string s;
  for (std::size_t i = 0; i < w.size() && i < limit; ++i) s += (i ? " " : "") + show_word(w[i]);
  if (w.size() > limit) s += " ...";
  return s;
}

std::string diff(const Words& got, const Words& want, const Alphabet& v) {
  auto c = compare_bounded(got, want, v);
  return "extra {" + show(c.only_left) + "} missing {" + show(c.only_right) + "}";
}

Outcome c1_separation() {
  Outcome o;
  auto r = classify(compile_regex("a|ab*a", "ab"));
  const Verdict* s1 = r.find(Family{Family::Kind::SLTk, 1});
  const Verdict* def = r.find(Family{Family::Kind::DEF});
  o.require(s1 && s1->yes(), "SLT1 not yes");
  o.require(def && def->no(), "DEF not no");
  const SltRep expected{1, Alphabet("ab"), {"a"}, {"b"}, {"a"}, {}};
  o.require(r.slt && *r.slt == expected, "certificate differs from <{a},{b},{a},{}>");
  o.require(r.slt && are_equivalent(slt_to_dfa(*r.slt), compile_regex("a|ab*a", "ab")),
            "certificate not equivalent");
  if (o.pass) o.detail = "SLT1 " + describe_slt(*r.slt) + ", DEF no";
  return o;
}

Outcome c2_hierarchy() {
  Outcome o;
  for (std::size_t h = 1; h <= 3; ++h) {
    const Dfa l = compile_regex("(a" + std::string(h, 'b') + ")(a" + std::string(h, 'b') + ")*", "ab");
    auto up = is_slt_k(l, h + 1);
    auto at = is_slt_k(l, h);
    o.require(up.yes && up.rep && are_equivalent(slt_to_dfa(*up.rep), l),
              "h=" + std::to_string(h) + ": SLT" + std::to_string(h + 1) + " not yes");
    o.require(!at.yes && at.counterexample && !accepts(l, *at.counterexample) &&
                  slt_membership(canonical_slt(l, h), *at.counterexample),
              "h=" + std::to_string(h) + ": SLT" + std::to_string(h) + " not refuted");
  }
  if (o.pass) o.detail = "{ab^h}+ in SLT_h+1 minus SLT_h for h=1,2,3";
  return o;
}

Outcome c3_finite() {
  Outcome o;
  for (std::size_t k = 1; k <= 4; ++k) {
    const Dfa l = compile_regex(std::string(k + 1, 'a'), "a");
    auto r = classify(l);
    const Verdict* fin = r.find(Family{Family::Kind::FIN});
    const Verdict* sk = r.find(Family{Family::Kind::SLTk, k});
    o.require(fin && fin->yes(), "k=" + std::to_string(k) + ": FIN not yes");
    o.require(sk && sk->no(), "k=" + std::to_string(k) + ": SLT_k not no");
    auto dec = is_slt_k(l, k);
    o.require(dec.counterexample == std::string(k, 'a'),
              "k=" + std::to_string(k) + ": canonical test does not admit a^k");
  }
  if (o.pass) o.detail = "{a^k+1} finite, canonical SLT_k test admits a^k, k=1..4";
  return o;
}

Outcome c4_definite() {
  Outcome o;
  std::mt19937 rng(2024);
  const Alphabet v("ab");
  auto pick = [&] {
    std::uniform_int_distribution<int> count(0, 3), len(0, 3), bit(0, 1);
    std::set<Word> s;
    const int c = count(rng);
    for (int i = 0; i < c; ++i) {
      Word w;
      for (int j = len(rng); j > 0; --j) w += v[bit(rng)];
      s.insert(w);
    }
    return Words(s.begin(), s.end());
  };
  for (int round = 0; round < 50; ++round) {
    const Words ds = pick(), de = pick();
    // reference built from an expression, not from the library's own builder
    std::string expr;
    for (const auto& w : ds) expr += (expr.empty() ? "" : "|") + (w.empty() ? "_" : w);
    for (const auto& w : de) expr += (expr.empty() ? "" : "|") + ("(a|b)*" + (w.empty() ? "" : w));
    const Dfa reference = compile_regex(expr.empty() ? "~" : expr, "ab");
    const SltRep rep = definite_to_slt(ds, de, v);
    o.require(are_equivalent(slt_to_dfa(rep), reference), "Ds={" + show(ds) + "} De={" + show(de) + "}");
    for (const auto& w : all_words_upto(v, 7)) {
      bool member = std::find(ds.begin(), ds.end(), w) != ds.end();
      for (const auto& e : de) member = member || (w.size() >= e.size() && w.ends_with(e));
      if (member != slt_membership(rep, w)) {
        o.require(false, "membership of " + show_word(w));
        break;
      }
    }
  }
  if (o.pass) o.detail = "50 samples equivalent";
  return o;
}

Outcome c5_implications() {
  Outcome o;
  std::vector<std::pair<std::string, Dfa>> langs;
  std::mt19937 rng(5);
  const Alphabet v("ab");
  std::uniform_int_distribution<std::size_t> states(1, 5);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = states(rng);
    std::uniform_int_distribution<State> pick(0, n - 1);
    std::bernoulli_distribution coin(0.4);
    std::vector<bool> acc(n);
    for (std::size_t q = 0; q < n; ++q) acc[q] = coin(rng);
    std::vector<State> t(2 * n);
    for (auto& x : t) x = pick(rng);
    langs.emplace_back("random " + std::to_string(i), minimize(Dfa(v, n, 0, acc, t)));
  }
  for (const auto& id : all_witness_ids()) {
    const Witness w = build_witness(id);
    if (w.language) langs.emplace_back(id.to_string(), w.language->dfa());
    for (std::size_t g = 0; g < w.grammars.size(); ++g) {
      for (std::size_t p = 0; p < w.grammars[g].pairs.size(); ++p) {
        langs.emplace_back(id.to_string() + " selector " + std::to_string(p + 1),
                           w.grammars[g].pairs[p].selector.dfa());
      }
    }
  }
  std::size_t matrix = 0, chain = 0;
  std::string first_matrix, chains;
  for (const auto& [name, d] : langs) {
    const auto report = classify(d);
    for (const auto& v : testing::implication_violations(d, report, false)) {
      if (first_matrix.empty()) first_matrix = name + ": " + v;
      ++matrix;
    }
    for (const auto& c : testing::window_chain_violations(d, report.k_max)) {
      ++chain;
      if (chains.size() < 160) {
        chains += (chains.empty() ? "" : ", ") + name + " SLT" + std::to_string(c.k) + "=>SLT" +
                  std::to_string(c.k + 1) + " fails on " + show_word(c.counterexample);
      }
    }
  }
  o.require(matrix == 0, std::to_string(matrix) + " matrix violations, first " + first_matrix);
  o.require(chain == 0, std::to_string(chain) + " SLT_k=>SLT_k+1 violations under interior-window "
                        "semantics (" + chains + ")");
  if (o.pass) {
    o.detail = std::to_string(langs.size()) + " languages, no violations";
  } else if (matrix == 0) {
    o.detail = std::to_string(langs.size()) + " languages; other implications hold; " + o.detail;
  }
  return o;
}

Outcome c6_external() {
  Outcome o;
  const Witness w = build_witness(WitnessId::parse("l-ec-35"));
  const auto& g = w.grammars[0];
  // {a}* u {a}*{b}{a}* u {c}{a}*{b}{a}*{c}, built directly
  Words want;
  for (std::size_t n = 0; n <= 12; ++n) want.push_back(std::string(n, 'a'));
  for (std::size_t i = 0; i + 1 <= 12; ++i) {
    for (std::size_t j = 0; i + j + 1 <= 12; ++j) {
      want.push_back(std::string(i, 'a') + "b" + std::string(j, 'a'));
      if (i + j + 3 <= 12) want.push_back("c" + std::string(i, 'a') + "b" + std::string(j, 'a') + "c");
    }
  }
  g.alphabet.sort_words(want);
  const Words got = generate(g, Mode::external, 12);
  o.require(got == want, diff(got, want, g.alphabet));
  for (std::size_t p = 0; p < g.pairs.size(); ++p) {
    const Dfa& s = g.pairs[p].selector.dfa();
    const OrderResult r = is_orderable(s);
    o.require(r.verdict.yes() && r.automaton && r.order && verify_order(*r.automaton, *r.order) &&
                  are_equivalent(*r.automaton, s),
              "selector " + std::to_string(p + 1) + " has no verified order");
  }
  if (o.pass) o.detail = std::to_string(got.size()) + " words equal at 12; both selectors ordered";
  return o;
}

Outcome c7_internal() {
  Outcome o;
  std::size_t words = 0;
  for (const char* name : {"l-ic-32", "l-ic-33(2)", "l-ic-33(3)", "l-ic-34", "l-ic-35"}) {
    const WitnessId id = WitnessId::parse(name);
    const Witness w = build_witness(id);
    const std::size_t max_len = id.name == "l-ic-35" ? 14 : 12;
    const Words want = witness_oracle_upto(id, max_len);
    std::vector<Words> outputs;
    for (const auto& g : w.grammars) {
      outputs.push_back(generate(g, Mode::internal, max_len));
      o.require(outputs.back() == want, std::string(name) + ": " + diff(outputs.back(), want, g.alphabet));
    }
    if (outputs.size() == 2) o.require(outputs[0] == outputs[1], std::string(name) + ": grammars disagree");
    words += want.size();
  }
  if (o.pass) o.detail = std::to_string(words) + " oracle words matched, l-ic-33 grammars agree";
  return o;
}

Outcome c8_dyck() {
  Outcome o;
  const Witness w = build_witness(WitnessId::parse("dyck"));
  Words want;
  for (const auto& s : all_words_upto(Alphabet("cd"), 12)) {
    long depth = 0;
    bool ok = true;
    for (char ch : s) {
      depth += ch == 'c' ? 1 : -1;
      ok = ok && depth >= 0;
    }
    if (ok && depth == 0) want.push_back(s);
  }
  Alphabet("cd").sort_words(want);
  const Words got = generate(w.grammars[0], Mode::internal, 12);
  o.require(got == want, diff(got, want, Alphabet("cd")));
  if (o.pass) o.detail = std::to_string(got.size()) + " balanced words up to 12";
  return o;
}

Outcome c9_kk() {
  Outcome o;
  std::size_t words = 0;
  for (std::size_t k = 1; k <= 2; ++k) {
    const WitnessId id{"kk", k};
    const Witness w = build_witness(id);
    const Words want = kk_oracle_upto(k, 12);
    const Words got = generate(w.grammars[0], Mode::internal, 12);
    o.require(got == want, "k=" + std::to_string(k) + ": " + diff(got, want, w.grammars[0].alphabet));
    words += got.size();
    std::string expr = "_";
    for (std::size_t r = 0; r <= k + 1; ++r) expr += "|" + std::string(r, 'a') + "b";
    const Dfa selector = compile_regex(expr, "ab");
    o.require(are_equivalent(selector, w.grammars[0].pairs[0].selector.dfa()),
              "k=" + std::to_string(k) + ": selector differs");
    o.require(is_suffix_closed(selector).yes(), "k=" + std::to_string(k) + ": selector not suffix closed");
  }
  if (o.pass) o.detail = std::to_string(words) + " words for k=1,2; selectors suffix closed";
  return o;
}

Outcome c10_monotone() {
  Outcome o;
  std::mt19937 rng(7);
  const Alphabet v("ab");
  auto random_dfa = [&](std::size_t max_states) {
    std::uniform_int_distribution<std::size_t> count(1, max_states);
    const std::size_t n = count(rng);
    std::uniform_int_distribution<State> pick(0, n - 1);
    std::bernoulli_distribution coin(0.5);
    std::vector<bool> acc(n);
    for (std::size_t q = 0; q < n; ++q) acc[q] = coin(rng);
    std::vector<State> t(2 * n);
    for (auto& x : t) x = pick(rng);
    return minimize(Dfa(v, n, 0, acc, t));
  };
  auto word = [&](std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    Word w;
    for (std::size_t i = len(rng); i > 0; --i) w += v[rng() % 2];
    return w;
  };
  std::size_t grew = 0;
  for (int round = 0; round < 50; ++round) {
    std::vector<SelectionPair> pairs;
    for (int p = 0; p < 2; ++p) {
      std::vector<Context> ctx;
      for (int c = 0; c < 2; ++c) ctx.push_back({word(2), word(1)});
      pairs.push_back(SelectionPair{LanguageHandle::from_dfa(random_dfa(4)), ctx, {}});
    }
    ContextualGrammar g{v, pairs, {word(2), word(3)}};
    ContextualGrammar h = g;
    const std::size_t which = rng() % 2;
    const Dfa bigger = unite(g.pairs[which].selector.dfa(), random_dfa(4));
    o.require(is_empty(difference(g.pairs[which].selector.dfa(), bigger)), "enlarged selector not a superset");
    h.pairs[which].selector = LanguageHandle::from_dfa(bigger);
    for (Mode mode : {Mode::external, Mode::internal}) {
      const Words small = generate(g, mode, 8);
      const Words large = generate(h, mode, 8);
      const auto c = compare_bounded(small, large, v);
      o.require(c.only_left.empty(), "round " + std::to_string(round) + " " + mode_name(mode) +
                                         ": lost {" + show(c.only_left) + "}");
      grew += !c.only_right.empty();
    }
  }
  if (o.pass) o.detail = "100 supersets, " + std::to_string(grew) + " strictly larger";
  return o;
}

Outcome c11_engine() {
  Outcome o;
  // determinism on every witness grammar
  std::size_t grammars = 0;
  for (const auto& id : all_witness_ids()) {
    const Witness w = build_witness(id);
    for (const auto& g : w.grammars) {
      const std::size_t max_len = id.name == "kk" && *id.param > 2 ? 10 : 12;
      const Words first = generate(g, w.mode, max_len);
      for (int run = 1; run < 5; ++run) {
        o.require(generate(g, w.mode, max_len) == first, id.to_string() + " differs on run " + std::to_string(run));
      }
      ++grammars;
    }
  }
  o.require(totals.violations == 0, std::to_string(totals.violations) + " audit violations, first: " + totals.first);
  o.require(totals.steps > 0, "no steps audited");
  if (o.pass) {
    o.detail = std::to_string(totals.steps) + " steps audited over " + std::to_string(totals.runs) +
               " runs; " + std::to_string(grammars) + " grammars identical over 5 runs";
  }
  return o;
}

struct Criterion {
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"a|ab*a is SLT1 and not DEF", 1, c1_separation},
      {"{ab^h}+ separates SLT_h+1 from SLT_h", 5, c2_hierarchy},
      {"{a^k+1} is finite and not SLT_k", 5, c3_finite},
      {"definite to SLT conversion", 30, c4_definite},
      {"implication matrix", 120, c5_implications},
      {"external grammar with ordered selectors", 30, c6_external},
      {"internal grammars against oracles", 120, c7_internal},
      {"Dyck language", 10, c8_dyck},
      {"K_k languages", 120, c9_kk},
      {"bounded monotonicity in the selector", 60, c10_monotone},
      {"engine invariants and determinism", 0, c11_engine},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    failed += !o.pass;
    std::printf("[%s] %2zu %s (%s; %.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, c.title,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
