#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "subreg/automata.hpp"
#include "subreg/text_format.hpp"
#include "subreg/witness.hpp"

using namespace subreg;

namespace {

bool has(const std::vector<Word>& words, const Word& w) {
  return std::find(words.begin(), words.end(), w) != words.end();
}

// balanced over (c, d) by a running counter
bool balanced(const Word& w) {
  long depth = 0;
  for (char ch : w) {
    depth += ch == 'c' ? 1 : -1;
    if (depth < 0) return false;
  }
  return depth == 0;
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("ids") {
  CHECK(WitnessId::parse("kk(2)") == WitnessId{"kk", 2});
  CHECK(WitnessId::parse("kk:2") == WitnessId{"kk", 2});
  CHECK(WitnessId::parse("l-ic-33(3)").to_string() == "l-ic-33(3)");
  CHECK_THROWS_AS(WitnessId::parse("kk(5)"), InputError);
  CHECK_THROWS_AS(WitnessId::parse("l-ic-33(4)"), InputError);
  CHECK_THROWS_AS(WitnessId::parse("kk"), InputError);
  CHECK_THROWS_AS(WitnessId::parse("dyck(1)"), InputError);
  CHECK_THROWS_AS(WitnessId::parse("nothing"), InputError);
  CHECK(all_witness_ids().size() == 23);
}

TEST_CASE("encodings") {
  auto abna = build_witness(WitnessId::parse("l-abna"));
  REQUIRE(abna.language);
  CHECK(are_equivalent(abna.language->dfa(), compile_regex("a|ab*a", "ab")));

  auto d = build_witness(WitnessId::parse("dyck"));
  REQUIRE(d.grammars.size() == 1);
  const auto& g = d.grammars[0];
  CHECK(g.alphabet.symbols() == "cd");
  CHECK(g.axioms == std::vector<Word>{""});
  REQUIRE(g.pairs.size() == 1);
  CHECK(g.pairs[0].contexts == std::vector<Context>{{"c", "d"}});
  CHECK(are_equivalent(g.pairs[0].selector.dfa(), compile_regex("(c|d)*", "cd")));

  auto k1 = build_witness(WitnessId::parse("kk(1)"));
  const auto& kg = k1.grammars[0];
  CHECK(kg.alphabet.symbols() == "abcd");
  CHECK(kg.axioms == std::vector<Word>{"aab", "caaabd"});
  CHECK(kg.pairs[0].contexts == std::vector<Context>{{"c", "d"}});
  CHECK(are_equivalent(kg.pairs[0].selector.dfa(), compile_regex("_|b|ab|aab", "ab")));

  auto ic35 = build_witness(WitnessId::parse("l-ic-35"));
  CHECK(ic35.grammars[0].axioms == std::vector<Word>{"ababaababa"});

  auto ic33 = build_witness(WitnessId::parse("l-ic-33(2)"));
  CHECK(ic33.grammars.size() == 2);
}

TEST_CASE("Dyck oracle against a counter") {
  auto words = dyck_oracle_upto(10);
  std::vector<Word> expected;
  for (const auto& w : oracle::all_words_upto(Alphabet("cd"), 10)) {
    if (balanced(w)) expected.push_back(w);
  }
  CHECK(words == expected);
}

TEST_CASE("K_k oracle members") {
  auto k1 = kk_oracle_upto(1, 8);
  CHECK(has(k1, "aab"));
  CHECK(has(k1, "caabd"));
  CHECK(has(k1, "caaabd"));
  CHECK(has(k1, "cdaab"));
  CHECK_FALSE(has(k1, "ab"));
  for (const auto& w : k1) CHECK(w.size() <= 8);
}

TEST_CASE("grammars match their oracles") {
  for (const auto& id : all_witness_ids()) {
    auto w = build_witness(id);
    for (const auto& g : w.grammars) {
      for (std::size_t max_len : {8u, 12u}) {
        if (id.name == "kk" && *id.param > 2 && max_len == 12) continue;
        CHECK_MESSAGE(generate_bounded(g, w.mode, max_len) == witness_oracle_upto(id, max_len),
                      id.to_string(), " at ", max_len);
      }
    }
  }
}

TEST_CASE("l-ic-33 grammars agree on its language") {
  // {a^m b^2n c^m : m >= n} u {a^(n-1) b^n c^(n-1)} style oracle for n = 2
  auto w = build_witness(WitnessId::parse("l-ic-33(2)"));
  std::vector<Word> expected{"abbc"};
  for (std::size_t m = 2; 2 * m + 4 <= 16; ++m) {
    expected.push_back(std::string(m, 'a') + "bbbb" + std::string(m, 'c'));
  }
  Alphabet("abc").sort_words(expected);
  CHECK(generate_bounded(w.grammars[0], w.mode, 16) == expected);
  CHECK(generate_bounded(w.grammars[1], w.mode, 16) == expected);
}

TEST_CASE("lemma reports") {
  auto abna = verify_lemma(WitnessId::parse("l-abna"));
  CHECK(abna.passed());
  CHECK_FALSE(abna.checks.empty());
  auto h2 = verify_lemma(WitnessId::parse("slt-hierarchy(2)"));
  CHECK(h2.passed());
  auto ic33 = verify_lemma(WitnessId::parse("l-ic-33(2)"), LemmaBounds{16, std::nullopt});
  CHECK(ic33.passed());
  for (const auto& c : ic33.checks) CHECK(c.status != SubCheck::Status::fail);

  const std::string text = render_lemma_report(abna);
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("l-abna: PASS") != std::string::npos);
  const std::string porcelain = render_lemma_report(abna, true);
  CHECK(porcelain.find("l-abna.result=pass") != std::string::npos);

  CHECK_THROWS_AS(verify_lemma(WitnessId::parse("dyck"), LemmaBounds{21, std::nullopt}), InputError);
}

TEST_CASE("passed() ignores out-of-scope lines") {
  LemmaReport r{WitnessId{"dyck", std::nullopt}, {}};
  r.checks.push_back({"a", SubCheck::Status::pass, ""});
  r.checks.push_back({"b", SubCheck::Status::out_of_scope, ""});
  CHECK(r.passed());
  r.checks.push_back({"c", SubCheck::Status::fail, ""});
  CHECK_FALSE(r.passed());
}

TEST_CASE("expansion audit flags a shrinking step") {
  auto g = build_witness(WitnessId::parse("dyck")).grammars[0];
  ExpansionAudit audit(g, Mode::internal);
  audit.observe("cd", Step{0, 0, 0, 0, "c"});
  CHECK(audit.violations() >= 1);
}

}  // TEST_SUITE
