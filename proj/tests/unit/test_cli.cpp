#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "subreg/automata.hpp"
#include "subreg/slt.hpp"
#include "subreg/text_format.hpp"

using namespace subreg;

namespace {

const std::string data = SUBREG_TEST_DATA;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify") {
  auto r = run({"verify", "--lemma", "l-abna"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("l-abna: PASS") != std::string::npos);
  CHECK(run({"verify", "--lemma", "kk(9)"}).code == cli::input_error);
  auto p = run({"--porcelain", "verify", "--lemma", "dyck"});
  CHECK(p.out.find("dyck.result=pass") != std::string::npos);
}

TEST_CASE("generate") {
  auto r = run({"generate", "--grammar", data + "/dyck.cg", "--mode", "in", "--max-len", "4"});
  CHECK(r.code == cli::ok);
  CHECK(r.out == "_\ncd\nccdd\ncdcd\n");
  auto w = run({"generate", "--grammar", "witness:l-ic-32", "--mode", "in", "--max-len", "6"});
  CHECK(w.out == "ab\nacbd\naccbdd\n");
  auto t = run({"generate", "--grammar", data + "/dyck.cg", "--mode", "in", "--max-len", "4",
                "--trace", "ccdd"});
  CHECK(t.code == cli::ok);
  CHECK(t.out.find("ccdd") != std::string::npos);
  auto none = run({"generate", "--grammar", data + "/l-ic-32.cg", "--mode", "in", "--max-len",
                   "3", "--trace", "abc"});
  CHECK(none.code == cli::check_failed);
  CHECK(run({"generate", "--grammar", data + "/dyck.cg", "--mode", "sideways", "--max-len", "4"})
            .code == cli::input_error);
  CHECK(run({"generate", "--grammar", data + "/missing.cg", "--mode", "in", "--max-len", "4"})
            .code == cli::input_error);
  auto capped = run({"generate", "--grammar", data + "/dyck.cg", "--mode", "in", "--max-len", "8",
                     "--step-cap", "2"});
  CHECK(capped.code == cli::check_failed);
}

TEST_CASE("compare") {
  auto eq = run({"compare", "--left", "grammar-in:" + data + "/l-ic-34.cg", "--right",
                 "oracle:l-ic-34", "--max-len", "12"});
  CHECK(eq.code == cli::ok);
  auto ne = run({"compare", "--left", "regex:a*", "--right", "regex:aa*", "--alphabet", "a",
                 "--max-len", "3"});
  CHECK(ne.code == cli::check_failed);
  CHECK(ne.out.find("only left: _") != std::string::npos);
}

TEST_CASE("classify") {
  auto r = run({"classify", "--input", "a|ab*a"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("SLT1 yes") != std::string::npos);
  CHECK(r.out.find("DEF no") != std::string::npos);
  auto file = run({"classify", "--input", data + "/abab.dfa", "--k-max", "2"});
  CHECK(file.out.find("SLT unknown_up_to(2)") != std::string::npos);
  auto slt = run({"--porcelain", "classify", "--input", data + "/abna.slt"});
  CHECK(slt.out.find("SLT1.status=yes\n") != std::string::npos);
  CHECK(run({"classify", "--input", "a("}).code == cli::input_error);
  CHECK(run({"classify", "--input", "a", "--k-max", "0"}).code == cli::input_error);
  CHECK(run({"classify"}).code == cli::input_error);
}

TEST_CASE("convert") {
  auto r = run({"convert", "--definite", "a", "b,ab", "--alphabet", "ab"});
  REQUIRE(r.code == cli::ok);
  SltRep rep = parse_slt(r.out);
  CHECK(are_equivalent(slt_to_dfa(rep), compile_regex("a|(a|b)*(b|ab)", "ab")));
  auto to_slt = run({"convert", "--input", "ab(ab)*", "--to", "slt"});
  CHECK(parse_slt(to_slt.out).k == 2);
  auto to_dfa = run({"convert", "--input", data + "/abna.slt", "--to", "dfa"});
  CHECK(are_equivalent(parse_dfa(to_dfa.out), compile_regex("a|ab*a", "ab")));
  CHECK(run({"convert", "--input", "a*ba*", "--to", "slt"}).code == cli::check_failed);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--input", "a|ab*a", "--max-len", "4"});
  CHECK(r.out == "a\naa\naba\nabba\n");
}

TEST_CASE("help and unknown commands") {
  CHECK(run({"--help"}).code == cli::ok);
  CHECK(run({"frobnicate"}).code == cli::input_error);
  CHECK(run({}).code == cli::input_error);
}

TEST_CASE("output is identical across runs") {
  std::vector<std::string> args{"classify", "--input", "ab(ab)*"};
  CHECK(run(args).out == run(args).out);
}

}  // TEST_SUITE
