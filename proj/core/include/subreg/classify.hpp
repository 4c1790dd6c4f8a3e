#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subreg/families.hpp"
#include "subreg/regex.hpp"
#include "subreg/slt.hpp"

namespace subreg {

struct ClassifyOptions {
  /// Largest window length tried for SLT; default is (states)^2 + 1.
  std::optional<std::size_t> k_max;
  /// Expression the language came from, if any.  Only used for UF.
  std::optional<RegexAst> expression;
};

struct ReportLine {
  Family family;
  Verdict verdict;
};

/// One line per family in the order FIN MON NIL COMB DEF SUF ORD COMM CIRC
/// NC PS UF SLT1..SLTk SLT, where k is the first yes or k_max.
struct ClassificationReport {
  std::vector<ReportLine> lines;
  std::size_t k_max = 0;
  std::size_t states = 0;  // of the minimal automaton
  std::optional<SltRep> slt;
  /// ORD certificate: an automaton for the language and its monotone order.
  std::optional<Dfa> order_automaton;
  std::optional<StateOrder> order;
  std::string combinational_symbols;

  /// nullptr if the family has no line (e.g. SLT5 when SLT2 was yes).
  const Verdict* find(const Family& f) const;
};

ClassificationReport classify(const Dfa& l, const ClassifyOptions& options = {});

/// Single-family decision, as used for declared families of selectors.
/// SLT without a bound uses the default bound; UF needs an expression.
Verdict decide_family(const Dfa& l, const Family& f,
                      const std::optional<RegexAst>& expression = std::nullopt);

/// `FAMILY verdict [evidence]` lines, or `key=value` lines when porcelain.
std::string render_report(const ClassificationReport& report, bool porcelain = false);

/// `k=2 B={ab} I={ba} E={ab} F={}`.
std::string describe_slt(const SltRep& rep);

}  // namespace subreg
