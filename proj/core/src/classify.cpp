#include "subreg/classify.hpp"

#include <sstream>

#include "subreg/automata.hpp"

namespace subreg {
namespace {

std::string word_set(const std::vector<Word>& words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ",";
    out += show_word(words[i]);
  }
  return out + "}";
}

Verdict slt_k_verdict(const Dfa& d, std::size_t k, std::optional<SltRep>* rep = nullptr) {
  SltDecision dec = is_slt_k(d, k);
  if (dec.yes) {
    std::string ev = describe_slt(*dec.rep);
    if (rep) *rep = std::move(dec.rep);
    return Verdict::yes_(ev);
  }
  return Verdict::no_("canonical windows admit " + show_word(*dec.counterexample));
}

Verdict union_free_verdict(const std::optional<RegexAst>& expression) {
  if (expression && is_union_free_syntactic(*expression)) {
    return Verdict::yes_("expression " + expression->to_string());
  }
  return Verdict::unknown_("no union-free expression supplied");
}

}  // namespace

std::string describe_slt(const SltRep& rep) {
  return "k=" + std::to_string(rep.k) + " B=" + word_set(rep.prefixes) +
         " I=" + word_set(rep.interiors) + " E=" + word_set(rep.suffixes) +
         " F=" + word_set(rep.short_words);
}

const Verdict* ClassificationReport::find(const Family& f) const {
  for (const auto& line : lines) {
    if (line.family == f) return &line.verdict;
  }
  return nullptr;
}

ClassificationReport classify(const Dfa& l, const ClassifyOptions& options) {
  using K = Family::Kind;
  if (l.alphabet().empty()) throw InputError("cannot classify over an empty alphabet");
  const Dfa d = l.minimal() ? l : minimize(l);
  ClassificationReport r;
  r.states = d.num_states();
  r.k_max = options.k_max.value_or(default_slt_bound(d));
  if (r.k_max == 0) throw InputError("k_max must be at least 1");

  auto add = [&](K kind, Verdict v, std::size_t k = 0) {
    r.lines.push_back({Family{kind, k}, std::move(v)});
  };
  add(K::FIN, is_finite(d));
  add(K::MON, is_monoidal(d));
  add(K::NIL, is_nilpotent(d));
  CombinationalResult comb = is_combinational(d);
  r.combinational_symbols = comb.symbols;
  add(K::COMB, comb.verdict);
  add(K::DEF, is_definite(d));
  add(K::SUF, is_suffix_closed(d));
  OrderResult ord = is_orderable(d);
  r.order_automaton = ord.automaton;
  r.order = ord.order;
  const std::size_t ord_index = r.lines.size();
  add(K::ORD, ord.verdict);
  add(K::COMM, is_commutative(d));
  add(K::CIRC, is_circular(d));
  add(K::NC, is_noncounting(d));
  add(K::PS, is_power_separating(d));
  add(K::UF, union_free_verdict(options.expression));

  std::optional<std::size_t> found;
  for (std::size_t k = 1; k <= r.k_max && !found; ++k) {
    Verdict v = slt_k_verdict(d, k, &r.slt);
    if (v.yes()) found = k;
    add(K::SLTk, std::move(v), k);
  }
  if (found) {
    add(K::SLT, Verdict::yes_("k=" + std::to_string(*found)));
  } else {
    Verdict v{Verdict::Status::unknown_up_to, r.k_max, "no window length up to the bound"};
    add(K::SLT, v);
  }
  if (found == 1) {
    r.lines[ord_index].verdict.evidence += "; SLT1 => ORD is not proven, checked here";
  }
  return r;
}

Verdict decide_family(const Dfa& l, const Family& f, const std::optional<RegexAst>& expression) {
  using K = Family::Kind;
  const Dfa d = l.minimal() ? l : minimize(l);
  switch (f.kind) {
    case K::FIN: return is_finite(d);
    case K::MON: return is_monoidal(d);
    case K::NIL: return is_nilpotent(d);
    case K::COMB: return is_combinational(d).verdict;
    case K::DEF: return is_definite(d);
    case K::SUF: return is_suffix_closed(d);
    case K::ORD: return is_orderable(d).verdict;
    case K::COMM: return is_commutative(d);
    case K::CIRC: return is_circular(d);
    case K::NC: return is_noncounting(d);
    case K::PS: return is_power_separating(d);
    case K::UF: return union_free_verdict(expression);
    case K::SLTk: return slt_k_verdict(d, f.k);
    case K::SLT: {
      SltInference inf = infer_slt(d);
      if (inf.k) return Verdict::yes_(describe_slt(*inf.rep));
      return Verdict{Verdict::Status::unknown_up_to, inf.k_max, "no window length up to the bound"};
    }
  }
  return Verdict::unknown_();
}

std::string render_report(const ClassificationReport& report, bool porcelain) {
  std::ostringstream out;
  if (porcelain) {
    out << "states=" << report.states << "\n";
    out << "k_max=" << report.k_max << "\n";
  }
  for (const auto& line : report.lines) {
    const std::string name = line.family.name();
    if (porcelain) {
      out << name << ".status=" << line.verdict.status_text() << "\n";
      if (!line.verdict.evidence.empty()) {
        out << name << ".evidence=" << line.verdict.evidence << "\n";
      }
    } else {
      out << name << " " << line.verdict.status_text();
      if (!line.verdict.evidence.empty()) out << " [" << line.verdict.evidence << "]";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace subreg
