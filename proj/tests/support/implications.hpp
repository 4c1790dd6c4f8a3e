#pragma once

#include <string>
#include <vector>

#include "subreg/classify.hpp"
#include "subreg/slt.hpp"

namespace subreg::testing {

struct ChainViolation {
  std::size_t k;
  Word counterexample;  // admitted by the canonical SLT_k+1 test, not in L
};

/// Every k < k_max with SLT_k yes and SLT_k+1 no.
inline std::vector<ChainViolation> window_chain_violations(const Dfa& l, std::size_t k_max) {
  std::vector<ChainViolation> out;
  bool previous = false;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const SltDecision d = is_slt_k(l, k, false);
    if (previous && !d.yes) out.push_back({k - 1, d.counterexample.value_or(Word{})});
    previous = d.yes;
  }
  return out;
}

/// Implications between families checked on one report.  SLT_k => SLT_k+1 is
/// checked on the full verdict vector up to the report's k_max, since the
/// report itself stops at the first yes.
inline std::vector<std::string> implication_violations(const Dfa& l,
                                                       const ClassificationReport& r,
                                                       bool include_chain = true) {
  using K = Family::Kind;
  std::vector<std::string> out;
  auto yes = [&](Family f) {
    const Verdict* v = r.find(f);
    return v != nullptr && v->yes();
  };
  auto slt1 = [&] {
    const Verdict* v = r.find(Family{K::SLTk, 1});
    return v != nullptr && v->yes();
  };
  auto need = [&](bool premise, bool conclusion, const char* name) {
    if (premise && !conclusion) out.emplace_back(name);
  };
  const bool slt = yes(Family{K::SLT});
  need(yes(Family{K::MON}), slt1(), "MON => SLT1");
  need(yes(Family{K::COMB}), slt1(), "COMB => SLT1");
  need(yes(Family{K::DEF}), slt, "DEF => SLT");
  need(slt1(), yes(Family{K::ORD}), "SLT1 => ORD");
  need(yes(Family{K::ORD}), yes(Family{K::NC}), "ORD => NC");
  need(slt, yes(Family{K::NC}), "SLT => NC");
  need(yes(Family{K::NC}), yes(Family{K::PS}), "NC => PS");
  need(yes(Family{K::FIN}), yes(Family{K::NIL}), "FIN => NIL");
  need(yes(Family{K::NIL}), yes(Family{K::DEF}), "NIL => DEF");
  need(yes(Family{K::MON}), yes(Family{K::NIL}), "MON => NIL");
  need(yes(Family{K::COMB}), yes(Family{K::DEF}), "COMB => DEF");

  bool any_line = false;
  for (const auto& line : r.lines) {
    if (line.family.kind == K::SLTk && line.verdict.yes()) any_line = true;
  }
  need(slt != any_line, false, "SLT line matches the SLTk lines");

  if (!include_chain) return out;
  for (const auto& c : window_chain_violations(l, r.k_max)) {
    out.push_back("SLT" + std::to_string(c.k) + " => SLT" + std::to_string(c.k + 1) + " (" +
                  show_word(c.counterexample) + ")");
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

}  // namespace subreg::testing
