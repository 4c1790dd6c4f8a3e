#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subreg/grammar.hpp"

namespace subreg {

/// Name plus optional parameter: l-abna, slt-hierarchy(h), lk-fin(k),
/// mon-to-slt1, comb-to-slt1, def-to-slt, l-ec-35, l-ic-32, l-ic-33(n),
/// l-ic-34, l-ic-35, dyck, kk(k).
struct WitnessId {
  std::string name;
  std::optional<std::size_t> param;

  /// Accepts `name`, `name(p)` and `name:p`.  Checks the parameter ranges
  /// (h, k in 1..4; n in 2..3).
  static WitnessId parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const WitnessId&, const WitnessId&) = default;
};

/// Every id, parameterised ones at each supported value.
std::vector<WitnessId> all_witness_ids();

struct Witness {
  WitnessId id;
  std::string description;
  std::optional<LanguageHandle> language;
  /// Usually one; l-ic-33 carries the SLT and the finite-selection grammar.
  std::vector<ContextualGrammar> grammars;
  Mode mode = Mode::internal;
};

Witness build_witness(const WitnessId& id);

// Direct enumerations, independent of the grammar engine.  All sorted by
// (length, alphabet order).
std::vector<Word> dyck_oracle_upto(std::size_t max_len);
/// K_k'' closed under inserting cd anywhere, up to max_len.
std::vector<Word> kk_oracle_upto(std::size_t k, std::size_t max_len);
/// Oracle for the language generated by the id's grammar.
std::vector<Word> witness_oracle_upto(const WitnessId& id, std::size_t max_len);

/// Checks length monotonicity and internal re-applicability on every step
/// it observes.
class ExpansionAudit {
 public:
  ExpansionAudit(const ContextualGrammar& g, Mode mode) : g_(g), mode_(mode) {}
  void observe(const Word& from, const Step& step);
  GenerateOptions options();

  std::size_t steps() const { return steps_; }
  std::size_t violations() const { return violations_; }
  const std::string& first_violation() const { return first_violation_; }

 private:
  void violation(std::string what);
  const ContextualGrammar& g_;
  Mode mode_;
  std::size_t steps_ = 0;
  std::size_t violations_ = 0;
  std::string first_violation_;
};

struct LemmaBounds {
  /// Default 12, 14 for l-ic-35; at most 20.
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> k_max;
};

struct SubCheck {
  enum class Status { pass, fail, out_of_scope };
  std::string claim;
  Status status;
  std::string evidence;
};

struct LemmaReport {
  WitnessId id;
  std::vector<SubCheck> checks;
  /// Every executed check passed; out-of-scope lines do not count.
  bool passed() const;
};

LemmaReport verify_lemma(const WitnessId& id, const LemmaBounds& bounds = {});

/// `[PASS] claim (evidence)` per check, then `<id>: PASS|FAIL`.  Porcelain:
/// `<id>.check.<i>=pass|fail|out-of-scope claim` and `<id>.result=...`.
std::string render_lemma_report(const LemmaReport& report, bool porcelain = false);

}  // namespace subreg
