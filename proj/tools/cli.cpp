#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <sstream>

#include "subreg/automata.hpp"
#include "subreg/classify.hpp"
#include "subreg/text_format.hpp"
#include "subreg/witness.hpp"

namespace subreg::cli {
namespace {

namespace fs = std::filesystem;

// Source spec: regex:<expr> | dfa:<path> | slt:<path> | grammar-in:<g> |
// grammar-ex:<g> | oracle:<witness>, where <g> is a path or witness:<id>.
// A bare argument is a DFA or SLT file if it exists, otherwise a regex.
struct Source {
  std::string kind;
  std::string body;
};

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

Source parse_source(const std::string& spec) {
  for (std::string_view kind : {"regex", "dfa", "slt", "grammar-in", "grammar-ex", "oracle"}) {
    std::string prefix = std::string(kind) + ":";
    if (starts_with(spec, prefix)) return {std::string(kind), spec.substr(prefix.size())};
  }
  std::error_code ec;
  if (fs::is_regular_file(spec, ec)) {
    std::istringstream in(read_text_file(spec));
    std::string first;
    for (std::string line; std::getline(in, line);) {
      line = line.substr(0, line.find('#'));
      std::istringstream tokens(line);
      if (tokens >> first) break;
    }
    return {first == "slt" ? "slt" : "dfa", spec};
  }
  return {"regex", spec};
}

LanguageHandle load_language(const Source& s, const std::string& alphabet) {
  if (s.kind == "regex") return LanguageHandle::from_regex(s.body, alphabet);
  Dfa d = s.kind == "dfa"   ? parse_dfa_file(s.body)
          : s.kind == "slt" ? slt_to_dfa(parse_slt_file(s.body))
                            : throw InputError("'" + s.kind + "' source is not a language");
  if (!alphabet.empty()) d = widen_alphabet(d, Alphabet(alphabet));
  return LanguageHandle::from_dfa(std::move(d));
}

struct GrammarSource {
  ContextualGrammar grammar;
  std::optional<Mode> mode;  // set for built-in witnesses
};

GrammarSource load_grammar(const std::string& spec) {
  if (starts_with(spec, "witness:")) {
    Witness w = build_witness(WitnessId::parse(spec.substr(8)));
    if (w.grammars.empty()) throw InputError(w.id.to_string() + " has no grammar");
    return {std::move(w.grammars.front()), w.mode};
  }
  return {parse_grammar_file(spec), std::nullopt};
}

struct WordSet {
  std::vector<Word> words;
  Alphabet alphabet;
};

WordSet load_words(const std::string& spec, std::size_t max_len, const std::string& alphabet) {
  Source s = parse_source(spec);
  if (s.kind == "grammar-in" || s.kind == "grammar-ex") {
    GrammarSource g = load_grammar(s.body);
    Mode m = s.kind == "grammar-in" ? Mode::internal : Mode::external;
    return {generate_bounded(g.grammar, m, max_len), g.grammar.alphabet};
  }
  if (s.kind == "oracle") {
    WitnessId id = WitnessId::parse(s.body);
    Witness w = build_witness(id);
    Alphabet a = w.grammars.empty() ? w.language->alphabet() : w.grammars.front().alphabet;
    if (w.grammars.empty()) return {enumerate_upto(w.language->dfa(), max_len), a};
    return {witness_oracle_upto(id, max_len), a};
  }
  LanguageHandle h = load_language(s, alphabet);
  return {enumerate_upto(h.dfa(), max_len), h.alphabet()};
}

Alphabet merged(const Alphabet& a, const Alphabet& b) {
  std::string symbols = a.symbols();
  for (char c : b.symbols()) {
    if (!a.contains(c)) symbols += c;
  }
  return Alphabet(symbols);
}

std::vector<Word> parse_word_list(const std::string& text) {
  std::vector<Word> out;
  if (text.empty() || text == "~") return out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? std::string() : item.substr(first, last - first + 1);
    out.push_back(parse_word_token(item));
  }
  return out;
}

void write_words(std::ostream& out, const std::vector<Word>& words, bool porcelain) {
  if (porcelain) {
    for (const auto& w : words) out << "word=" << show_word(w) << "\n";
    out << "count=" << words.size() << "\n";
  } else {
    out << render_words(words);
  }
}

std::string joined_words(const std::vector<Word>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + show_word(w);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subregular language classifier and contextual grammar toolkit", "subreg"};
  app.require_subcommand(1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "Machine-readable key=value output");

  std::string input, alphabet, left, right, grammar_path, mode_text = "", lemma, trace_target, to;
  std::optional<std::size_t> k_max, step_cap, lemma_max_len;
  std::size_t max_len = 8;
  std::vector<std::string> definite;

  auto* classify_cmd = app.add_subcommand("classify", "Report family membership of a regular language");
  classify_cmd->add_option("--input,input", input, "regex:<expr>, dfa:<path>, slt:<path>")->required();
  classify_cmd->add_option("--k-max", k_max, "Largest SLT window length tried");
  classify_cmd->add_option("--alphabet", alphabet, "Alphabet (default: symbols of the input)");

  auto* generate_cmd = app.add_subcommand("generate", "Bounded generation from a contextual grammar");
  generate_cmd->add_option("--grammar,grammar", grammar_path, "Grammar file or witness:<id>")->required();
  generate_cmd->add_option("--mode", mode_text, "ex or in");
  generate_cmd->add_option("--max-len", max_len, "Length bound")->required();
  generate_cmd->add_option("--step-cap", step_cap, "Maximum number of expanded words");
  generate_cmd->add_option("--trace", trace_target, "Print a derivation of this word instead");

  auto* compare_cmd = app.add_subcommand("compare", "Bounded comparison of two sources");
  compare_cmd->add_option("--left", left, "Source")->required();
  compare_cmd->add_option("--right", right, "Source")->required();
  compare_cmd->add_option("--max-len", max_len, "Length bound")->required();
  compare_cmd->add_option("--alphabet", alphabet, "Alphabet for regex sources");

  auto* convert_cmd = app.add_subcommand("convert", "Conversions between representations");
  convert_cmd->add_option("--definite", definite, "D_s D_e as comma lists ('~' for none)")->expected(2);
  convert_cmd->add_option("--input", input, "Language to convert with --to");
  convert_cmd->add_option("--to", to, "dfa or slt")->check(CLI::IsMember({"dfa", "slt"}));
  convert_cmd->add_option("--k-max", k_max, "Largest SLT window length tried");
  convert_cmd->add_option("--alphabet", alphabet, "Alphabet");

  auto* verify_cmd = app.add_subcommand("verify", "Replay the checkable content of a witness");
  verify_cmd->add_option("--lemma", lemma, "Witness id or 'all'")->required();
  verify_cmd->add_option("--max-len", lemma_max_len, "Length bound (at most 20)");
  verify_cmd->add_option("--k-max", k_max, "Largest SLT window length tried");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the words of a source up to a length");
  enumerate_cmd->add_option("--input,input", input, "Source")->required();
  enumerate_cmd->add_option("--max-len", max_len, "Length bound")->required();
  enumerate_cmd->add_option("--alphabet", alphabet, "Alphabet for regex sources");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  try {
    if (classify_cmd->parsed()) {
      Source s = parse_source(input);
      LanguageHandle h = load_language(s, alphabet);
      ClassifyOptions opts;
      opts.k_max = k_max;
      opts.expression = h.regex();
      out << render_report(classify(h.dfa(), opts), porcelain);
      return ok;
    }
    if (generate_cmd->parsed()) {
      GrammarSource g = load_grammar(grammar_path);
      if (mode_text.empty() && !g.mode) throw InputError("--mode is required for grammar files");
      Mode mode = mode_text.empty() ? *g.mode : parse_mode(mode_text);
      auto diags = validate_grammar(g.grammar);
      for (const auto& d : diags) {
        err << (d.severity == Diagnostic::Severity::error ? "error: " : "warning: ") << d.message << "\n";
      }
      if (has_errors(diags)) return input_error;
      if (!trace_target.empty()) {
        Word target = parse_word_token(trace_target);
        try {
          DerivationTrace t = derivation_trace(g.grammar, mode, target, std::max(max_len, target.size()));
          out << render_trace(g.grammar, mode, t);
          return ok;
        } catch (const NotDerivable& e) {
          out << e.what() << "\n";
          return check_failed;
        }
      }
      GenerateOptions opts;
      opts.step_cap = step_cap;
      try {
        write_words(out, generate_bounded(g.grammar, mode, max_len, opts), porcelain);
      } catch (const BoundedResultError& e) {
        write_words(out, e.partial, porcelain);
        err << "error: " << e.what() << "; output is partial\n";
        return check_failed;
      }
      return ok;
    }
    if (compare_cmd->parsed()) {
      WordSet l = load_words(left, max_len, alphabet);
      WordSet r = load_words(right, max_len, alphabet);
      BoundedComparison cmp = compare_bounded(l.words, r.words, merged(l.alphabet, r.alphabet));
      if (porcelain) {
        out << "equal=" << (cmp.equal() ? "true" : "false") << "\n";
        out << "left_count=" << l.words.size() << "\nright_count=" << r.words.size() << "\n";
        for (const auto& w : cmp.only_left) out << "only_left=" << show_word(w) << "\n";
        for (const auto& w : cmp.only_right) out << "only_right=" << show_word(w) << "\n";
      } else if (cmp.equal()) {
        out << "equal up to length " << max_len << " (" << l.words.size() << " words)\n";
      } else {
        out << "differ up to length " << max_len << "\n";
        out << "only left: " << joined_words(cmp.only_left) << "\n";
        out << "only right: " << joined_words(cmp.only_right) << "\n";
      }
      return cmp.equal() ? ok : check_failed;
    }
    if (convert_cmd->parsed()) {
      if (!definite.empty()) {
        if (alphabet.empty()) throw InputError("--definite needs --alphabet");
        out << render_slt(definite_to_slt(parse_word_list(definite[0]), parse_word_list(definite[1]),
                                          Alphabet(alphabet)));
        return ok;
      }
      if (input.empty() || to.empty()) throw InputError("convert needs --definite or --input with --to");
      LanguageHandle h = load_language(parse_source(input), alphabet);
      if (to == "dfa") {
        out << render_dfa(h.dfa());
        return ok;
      }
      SltInference inf = infer_slt(h.dfa(), k_max);
      if (!inf.k) {
        out << "no SLT representation with k <= " << inf.k_max << "\n";
        return check_failed;
      }
      out << render_slt(*inf.rep);
      return ok;
    }
    if (verify_cmd->parsed()) {
      std::vector<WitnessId> ids;
      if (lemma == "all") {
        ids = all_witness_ids();
      } else {
        ids.push_back(WitnessId::parse(lemma));
      }
      LemmaBounds bounds{lemma_max_len, k_max};
      bool all_pass = true;
      for (const auto& id : ids) {
        LemmaReport r = verify_lemma(id, bounds);
        all_pass = all_pass && r.passed();
        out << render_lemma_report(r, porcelain);
      }
      if (ids.size() > 1) {
        out << (porcelain ? "result=" : "") << (all_pass ? (porcelain ? "pass" : "PASS") : (porcelain ? "fail" : "FAIL"))
            << "\n";
      }
      return all_pass ? ok : check_failed;
    }
    if (enumerate_cmd->parsed()) {
      write_words(out, load_words(input, max_len, alphabet).words, porcelain);
      return ok;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace subreg::cli
