#include <doctest.h>

#include "oracles.hpp"
#include "subreg/automata.hpp"
#include "subreg/regex.hpp"
#include "subreg/slt.hpp"

using namespace subreg;

namespace {

SltRep rep(std::size_t k, std::string_view v, std::vector<Word> b, std::vector<Word> i,
           std::vector<Word> e, std::vector<Word> f) {
  SltRep r{k, Alphabet(v), std::move(b), std::move(i), std::move(e), std::move(f)};
  r.normalize();
  return r;
}

// Explicit route: the canonical representation is exact iff L is SLT_k.
bool explicit_slt(const Dfa& l, std::size_t k) {
  return are_equivalent(slt_to_dfa(canonical_slt(l, k)), l);
}

}  // namespace

TEST_SUITE("slt") {

TEST_CASE("membership") {
  const SltRep abna = rep(1, "ab", {"a"}, {"b"}, {"a"}, {});
  CHECK(slt_membership(abna, "abba"));
  CHECK_FALSE(slt_membership(abna, "ba"));
  CHECK(slt_membership(abna, "a"));
  CHECK(slt_membership(rep(2, "a", {"aa"}, {}, {"aa"}, {}), "aaa"));
  CHECK_FALSE(slt_membership(rep(2, "a", {"aa"}, {}, {"aa"}, {}), "aaaa"));
}

TEST_CASE("normalize rejects bad lengths") {
  SltRep r{2, Alphabet("ab"), {"a"}, {}, {}, {}};
  CHECK_THROWS_AS(r.normalize(), InputError);
  SltRep s{2, Alphabet("ab"), {}, {}, {}, {"ab"}};
  CHECK_THROWS_AS(s.normalize(), InputError);
  SltRep t{1, Alphabet("ab"), {"c"}, {}, {}, {}};
  CHECK_THROWS_AS(t.normalize(), InputError);
}

TEST_CASE("slt_to_dfa") {
  CHECK(are_equivalent(slt_to_dfa(rep(1, "ab", {"a"}, {"b"}, {"a"}, {})),
                       compile_regex("a|ab*a", "ab")));
  CHECK(are_equivalent(slt_to_dfa(rep(1, "ab", {"a", "b"}, {"a", "b"}, {"a", "b"}, {""})),
                       Dfa::universal(Alphabet("ab"))));
  CHECK(enumerate_upto(slt_to_dfa(rep(3, "a", {}, {}, {}, {"aa"})), 6) == std::vector<Word>{"aa"});
}

TEST_CASE("is_slt_k") {
  Dfa abp = compile_regex("(ab)+", "ab");
  auto yes = is_slt_k(abp, 2);
  CHECK(yes.yes);
  REQUIRE(yes.rep);
  CHECK(are_equivalent(slt_to_dfa(*yes.rep), abp));
  auto no = is_slt_k(abp, 1);
  CHECK_FALSE(no.yes);
  REQUIRE(no.counterexample);
  CHECK(slt_membership(canonical_slt(abp, 1), *no.counterexample));
  CHECK_FALSE(accepts(abp, *no.counterexample));

  for (std::size_t k = 1; k <= 4; ++k) {
    auto d = is_slt_k(compile_regex(std::string(k + 1, 'a'), "a"), k);
    CHECK_FALSE(d.yes);
    CHECK(d.counterexample == std::string(k, 'a'));
  }

  auto all = is_slt_k(Dfa::universal(Alphabet("ab")), 1);
  CHECK(all.yes);
  CHECK(*all.rep == rep(1, "ab", {"a", "b"}, {"a", "b"}, {"a", "b"}, {""}));
}

TEST_CASE("infer_slt") {
  auto a = infer_slt(compile_regex("a|ab*a", "ab"));
  CHECK(a.k == std::size_t{1});
  auto aa = infer_slt(compile_regex("aa", "a"));
  CHECK(aa.k == std::size_t{3});
  CHECK(*aa.rep == rep(3, "a", {}, {}, {}, {"aa"}));
  auto one_b = infer_slt(compile_regex("a*ba*", "ab"), 4);
  CHECK_FALSE(one_b.k);
  CHECK(one_b.k_max == 4);
  CHECK(default_slt_bound(compile_regex("a*ba*", "ab")) == 10);
  CHECK_THROWS_AS(infer_slt(compile_regex("a", "a"), 0), InputError);
}

TEST_CASE("definite_to_slt") {
  const Alphabet v("ab");
  auto r = definite_to_slt({}, {"b"}, v);
  CHECK(r == rep(2, "ab", {"aa", "ab", "ba", "bb"}, {"aa", "ab", "ba", "bb"}, {"ab", "bb"}, {"b"}));
  CHECK(oracle::members_upto(slt_to_dfa(r), 5) == oracle::members_upto(compile_regex("(a|b)*b", "ab"), 5));

  auto lambda = definite_to_slt({""}, {}, v);
  CHECK(lambda == rep(1, "ab", {"a", "b"}, {"a", "b"}, {}, {""}));
  CHECK(enumerate_upto(slt_to_dfa(lambda), 4) == std::vector<Word>{""});

  auto all = definite_to_slt({}, {""}, v);
  CHECK(all == rep(1, "ab", {"a", "b"}, {"a", "b"}, {"a", "b"}, {""}));
}

TEST_CASE("decision agrees with the explicit canonical route") {
  std::mt19937 rng(11);
  for (const auto& [expr, v] : oracle::corpus()) {
    Dfa d = compile_regex(expr, v);
    for (std::size_t k = 1; k <= 4; ++k) {
      INFO(expr << " k=" << k);
      auto dec = is_slt_k(d, k);
      CHECK(dec.yes == explicit_slt(d, k));
      if (dec.yes) {
        CHECK(are_equivalent(slt_to_dfa(*dec.rep), d));
        CHECK(*dec.rep == canonical_slt(d, k));
      }
    }
  }
  for (const char* v : {"ab", "abc"}) {
    for (int round = 0; round < 120; ++round) {
      Dfa d = minimize(oracle::random_dfa(rng, 5, Alphabet(v)));
      for (std::size_t k = 1; k <= 3; ++k) {
        auto dec = is_slt_k(d, k);
        CHECK(dec.yes == explicit_slt(d, k));
        if (!dec.yes) {
          REQUIRE(dec.counterexample);
          CHECK(slt_membership(canonical_slt(d, k), *dec.counterexample));
          CHECK_FALSE(accepts(d, *dec.counterexample));
        }
      }
    }
  }
}

TEST_CASE("membership agrees with the automaton") {
  std::mt19937 rng(5);
  for (const char* v : {"ab", "abc"}) {
    const Alphabet alpha(v);
    for (int round = 0; round < 40; ++round) {
      std::uniform_int_distribution<std::size_t> kd(1, 3);
      const std::size_t k = kd(rng);
      std::bernoulli_distribution coin(0.5);
      SltRep r{k, alpha, {}, {}, {}, {}};
      for (const auto& w : alpha.words_of_length(k)) {
        if (coin(rng)) r.prefixes.push_back(w);
        if (coin(rng)) r.interiors.push_back(w);
        if (coin(rng)) r.suffixes.push_back(w);
      }
      for (const auto& w : oracle::all_words_upto(alpha, k - 1)) {
        if (coin(rng)) r.short_words.push_back(w);
      }
      r.normalize();
      Dfa d = slt_to_dfa(r);
      for (const auto& w : oracle::all_words_upto(alpha, std::string(v) == "ab" ? 8 : 6)) {
        CHECK(slt_membership(r, w) == accepts(d, w));
      }
      // any SLT_k language is decided yes at k
      CHECK(is_slt_k(d, k).yes);
    }
  }
}

TEST_CASE("window semantics at the k, k+1 boundary") {
  // words of length k and k+1 have no interior window, so {a, aa} is SLT1
  // but not SLT2: B = E = {aa} forces aaa
  Dfa d = compile_regex("a|aa", "a");
  CHECK(is_slt_k(d, 1).yes);
  auto two = is_slt_k(d, 2);
  CHECK_FALSE(two.yes);
  REQUIRE(two.counterexample);
  CHECK(*two.counterexample == "aaa");
  CHECK(is_slt_k(d, 3).yes);
}

TEST_CASE("definite conversion on random samples") {
  std::mt19937 rng(3);
  const Alphabet v("ab");
  for (int round = 0; round < 40; ++round) {
    auto pick_set = [&] {
      std::vector<Word> out;
      std::uniform_int_distribution<int> count(0, 3), len(0, 3);
      const int c = count(rng);
      for (int i = 0; i < c; ++i) {
        auto layer = v.words_of_length(len(rng));
        std::uniform_int_distribution<std::size_t> at(0, layer.size() - 1);
        out.push_back(layer[at(rng)]);
      }
      return out;
    };
    auto ds = pick_set(), de = pick_set();
    SltRep r = definite_to_slt(ds, de, v);
    Dfa l = definite_language(ds, de, v);
    CHECK(are_equivalent(slt_to_dfa(r), l));
    CHECK(oracle::members_upto(slt_to_dfa(r), 7) == oracle::members_upto(l, 7));
  }
}

}  // TEST_SUITE
