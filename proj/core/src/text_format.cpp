#include "subreg/text_format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "subreg/automata.hpp"

namespace subreg {
namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
  std::vector<std::string> tokens;
};

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = split_ws(raw);
    if (!tokens.empty()) out.push_back({number, std::string(raw), std::move(tokens)});
    pos = end + 1;
  }
  return out;
}

class Reporter {
 public:
  explicit Reporter(std::string_view origin) : origin_(origin) {}
  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw InputError(origin_ + ":" + std::to_string(line) + ": " + message);
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw InputError(origin_ + ": " + message);
  }

 private:
  std::string origin_;
};

std::size_t parse_number(const Reporter& r, const Line& line, const std::string& token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    r.fail(line.number, "expected a number, got '" + token + "'");
  }
  return value;
}

std::string joined(const std::vector<std::string>& tokens, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < tokens.size(); ++i) out += tokens[i];
  return out;
}

// Text after the first `skip` tokens of a line, trimmed.
std::string rest_of_line(const Line& line, std::size_t skip) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < skip; ++i) {
    pos = line.text.find(line.tokens[i], pos) + line.tokens[i].size();
  }
  std::string rest = line.text.substr(pos);
  auto first = rest.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto last = rest.find_last_not_of(" \t\r");
  return rest.substr(first, last - first + 1);
}

Alphabet parse_alphabet(const Reporter& r, const Line& line) {
  try {
    return Alphabet(joined(line.tokens, 1));
  } catch (const InputError& e) {
    r.fail(line.number, e.what());
  }
}

Dfa parse_dfa_lines(const std::vector<Line>& lines, const Reporter& r) {
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> states, start;
  std::vector<std::size_t> accept;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> trans;
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    const std::string& key = t[0];
    if (key == "alphabet") {
      alphabet = parse_alphabet(r, line);
    } else if (key == "states") {
      if (t.size() != 2) r.fail(line.number, "expected 'states N'");
      states = parse_number(r, line, t[1]);
    } else if (key == "start") {
      if (t.size() != 2) r.fail(line.number, "expected 'start Q'");
      start = parse_number(r, line, t[1]);
    } else if (key == "accept") {
      for (std::size_t i = 1; i < t.size(); ++i) accept.push_back(parse_number(r, line, t[i]));
    } else if (key == "trans") {
      if (t.size() != 4 || t[2].size() != 1) r.fail(line.number, "expected 'trans Q symbol Q'");
      if (!alphabet || !states) r.fail(line.number, "'trans' before 'alphabet' and 'states'");
      auto sym = alphabet->index_of(t[2][0]);
      if (!sym) r.fail(line.number, "symbol '" + t[2] + "' is not in the alphabet");
      std::size_t from = parse_number(r, line, t[1]), to = parse_number(r, line, t[3]);
      if (from >= *states || to >= *states) r.fail(line.number, "state out of range");
      if (!trans.emplace(std::make_pair(from, *sym), to).second) {
        r.fail(line.number, "duplicate transition from state " + t[1] + " on '" + t[2] + "'");
      }
    } else {
      r.fail(line.number, "unknown directive '" + key + "'");
    }
  }
  if (!alphabet) r.fail("missing 'alphabet'");
  if (!states || *states == 0) r.fail("missing or zero 'states'");
  if (!start) r.fail("missing 'start'");
  if (*start >= *states) r.fail("start state out of range");
  std::vector<bool> acc(*states, false);
  for (auto q : accept) {
    if (q >= *states) r.fail("accepting state " + std::to_string(q) + " out of range");
    acc[q] = true;
  }
  std::vector<State> table(*states * alphabet->size());
  for (std::size_t q = 0; q < *states; ++q) {
    for (std::size_t s = 0; s < alphabet->size(); ++s) {
      auto it = trans.find({q, s});
      if (it == trans.end()) {
        r.fail("missing transition from state " + std::to_string(q) + " on '" +
               std::string(1, (*alphabet)[s]) + "'");
      }
      table[q * alphabet->size() + s] = it->second;
    }
  }
  return Dfa(*alphabet, *states, *start, std::move(acc), std::move(table));
}

SltRep parse_slt_lines(const std::vector<Line>& lines, const Reporter& r) {
  SltRep rep;
  bool header = false;
  std::optional<Alphabet> alphabet;
  std::string used;
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (!header) {
      if (t[0] != "slt" || t.size() != 2 || t[1].rfind("k=", 0) != 0) {
        r.fail(line.number, "expected 'slt k=K' header");
      }
      rep.k = parse_number(r, line, t[1].substr(2));
      if (rep.k == 0) r.fail(line.number, "k must be at least 1");
      header = true;
      continue;
    }
    std::vector<Word>* target = nullptr;
    if (t[0] == "alphabet") {
      alphabet = parse_alphabet(r, line);
      continue;
    } else if (t[0] == "B") {
      target = &rep.prefixes;
    } else if (t[0] == "I") {
      target = &rep.interiors;
    } else if (t[0] == "E") {
      target = &rep.suffixes;
    } else if (t[0] == "F") {
      target = &rep.short_words;
    } else {
      r.fail(line.number, "unknown directive '" + t[0] + "'");
    }
    for (std::size_t i = 1; i < t.size(); ++i) {
      Word w = parse_word_token(t[i]);
      bool short_set = target == &rep.short_words;
      if (short_set ? w.size() >= rep.k : w.size() != rep.k) {
        r.fail(line.number, "word " + t[i] + (short_set ? " in F must be shorter than k"
                                                          : " must have length k"));
      }
      for (char c : w) {
        if (used.find(c) == std::string::npos) used += c;
      }
      target->push_back(std::move(w));
    }
  }
  if (!header) r.fail("missing 'slt k=K' header");
  try {
    rep.alphabet = alphabet ? *alphabet : Alphabet(used);
    rep.normalize();
  } catch (const InputError& e) {
    r.fail(e.what());
  }
  return rep;
}

std::string word_line(char tag, const std::vector<Word>& words) {
  std::string out(1, tag);
  for (const auto& w : words) out += " " + show_word(w);
  return out + "\n";
}

std::string symbols_spaced(const Alphabet& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += " ";
    out += a[i];
  }
  return out;
}

std::string indent(const std::string& block, const std::string& pad) {
  std::string out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out += pad + line + "\n";
  return out;
}

}  // namespace

Dfa parse_dfa(std::string_view text, std::string_view origin) {
  return parse_dfa_lines(split_lines(text), Reporter(origin));
}

std::string render_dfa(const Dfa& d) {
  std::ostringstream out;
  out << "alphabet " << symbols_spaced(d.alphabet()) << "\n";
  out << "states " << d.num_states() << "\n";
  out << "start " << d.start() << "\n";
  out << "accept";
  for (State q = 0; q < d.num_states(); ++q) {
    if (d.is_accepting(q)) out << " " << q;
  }
  out << "\n";
  for (State q = 0; q < d.num_states(); ++q) {
    for (std::size_t s = 0; s < d.alphabet().size(); ++s) {
      out << "trans " << q << " " << d.alphabet()[s] << " " << d.next(q, s) << "\n";
    }
  }
  return out.str();
}

SltRep parse_slt(std::string_view text, std::string_view origin) {
  return parse_slt_lines(split_lines(text), Reporter(origin));
}

std::string render_slt(const SltRep& rep) {
  std::string out = "slt k=" + std::to_string(rep.k) + "\n";
  out += "alphabet " + symbols_spaced(rep.alphabet) + "\n";
  out += word_line('B', rep.prefixes);
  out += word_line('I', rep.interiors);
  out += word_line('E', rep.suffixes);
  out += word_line('F', rep.short_words);
  return out;
}

ContextualGrammar parse_grammar(std::string_view text, std::string_view origin,
                                const std::filesystem::path& base_dir) {
  const Reporter r(origin);
  const auto lines = split_lines(text);
  ContextualGrammar g;
  bool have_alphabet = false;

  struct PendingPair {
    std::size_t line;
    std::string kind;  // regex | dfa | slt
    std::string regex;
    std::optional<Dfa> dfa;
    std::optional<SltRep> slt;
    std::optional<std::string> select_alphabet;
    std::optional<Family> family;
    std::vector<Context> contexts;
  };
  std::optional<PendingPair> pending;

  auto finish = [&](std::size_t end_line) {
    PendingPair& p = *pending;
    if (p.kind.empty()) r.fail(end_line, "pair without a 'select' line");
    try {
      std::optional<LanguageHandle> h;
      if (p.kind == "regex") {
        h = LanguageHandle::from_regex(p.regex, p.select_alphabet.value_or(""));
      } else if (p.kind == "dfa") {
        Dfa d = *p.dfa;
        if (p.select_alphabet) d = widen_alphabet(d, Alphabet(*p.select_alphabet));
        h = LanguageHandle::from_dfa(std::move(d));
      } else {
        SltRep s = *p.slt;
        if (p.select_alphabet) s.alphabet = Alphabet(*p.select_alphabet);
        h = LanguageHandle::from_slt(std::move(s));
      }
      g.pairs.push_back({std::move(*h), std::move(p.contexts), p.family});
    } catch (const InputError& e) {
      r.fail(p.line, e.what());
    }
    pending.reset();
  };

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto& t = line.tokens;
    const std::string& key = t[0];
    if (!pending) {
      if (key == "alphabet") {
        g.alphabet = parse_alphabet(r, line);
        have_alphabet = true;
      } else if (key == "axiom") {
        if (t.size() < 2) r.fail(line.number, "'axiom' needs a word");
        for (std::size_t j = 1; j < t.size(); ++j) g.axioms.push_back(parse_word_token(t[j]));
      } else if (key == "pair") {
        if (t.size() != 1) r.fail(line.number, "unexpected text after 'pair'");
        pending = PendingPair{line.number, {}, {}, {}, {}, {}, {}, {}};
      } else {
        r.fail(line.number, "unknown directive '" + key + "'");
      }
      continue;
    }
    PendingPair& p = *pending;
    if (key == "end") {
      finish(line.number);
    } else if (key == "select") {
      if (!p.kind.empty()) r.fail(line.number, "pair has more than one 'select'");
      if (t.size() < 3) r.fail(line.number, "expected 'select regex|dfa|slt ...'");
      p.kind = t[1];
      if (p.kind == "regex") {
        p.regex = rest_of_line(line, 2);
        continue;
      }
      if (p.kind != "dfa" && p.kind != "slt") {
        r.fail(line.number, "unknown selector kind '" + p.kind + "'");
      }
      if (t.size() != 3) r.fail(line.number, "expected a single path or '{'");
      std::vector<Line> body;
      std::string where;
      if (t[2] == "{") {
        std::size_t j = i + 1;
        while (j < lines.size() && !(lines[j].tokens.size() == 1 && lines[j].tokens[0] == "}")) {
          body.push_back(lines[j++]);
        }
        if (j == lines.size()) r.fail(line.number, "unterminated '{' block");
        i = j;
        where = std::string(origin);
      } else {
        auto path = base_dir / t[2];
        std::string content;
        try {
          content = read_text_file(path);
        } catch (const InputError& e) {
          r.fail(line.number, e.what());
        }
        body = split_lines(content);
        where = path.string();
      }
      if (p.kind == "dfa") {
        p.dfa = parse_dfa_lines(body, Reporter(where));
      } else {
        p.slt = parse_slt_lines(body, Reporter(where));
      }
    } else if (key == "select-alphabet") {
      p.select_alphabet = joined(t, 1);
    } else if (key == "family") {
      if (t.size() != 2) r.fail(line.number, "expected 'family NAME'");
      try {
        p.family = Family::parse(t[1]);
      } catch (const InputError& e) {
        r.fail(line.number, e.what());
      }
    } else if (key == "context") {
      std::string rest = rest_of_line(line, 1);
      auto comma = rest.find(',');
      if (comma == std::string::npos || rest.find(',', comma + 1) != std::string::npos) {
        r.fail(line.number, "expected 'context u , v'");
      }
      auto side = [&](std::string_view s) {
        auto tokens = split_ws(s);
        if (tokens.size() > 1) r.fail(line.number, "context side has more than one word");
        return tokens.empty() ? Word{} : parse_word_token(tokens[0]);
      };
      p.contexts.push_back({side(std::string_view(rest).substr(0, comma)),
                            side(std::string_view(rest).substr(comma + 1))});
    } else {
      r.fail(line.number, "unknown directive '" + key + "' inside pair");
    }
  }
  if (pending) r.fail(pending->line, "pair is missing 'end'");
  if (!have_alphabet) r.fail("missing 'alphabet'");
  return g;
}

std::string render_grammar(const ContextualGrammar& g) {
  std::string out = "alphabet " + symbols_spaced(g.alphabet) + "\n";
  for (const auto& a : g.axioms) out += "axiom " + show_word(a) + "\n";
  for (const auto& p : g.pairs) {
    out += "pair\n";
    const LanguageHandle& s = p.selector;
    if (s.regex()) {
      out += "  select regex " + s.regex()->to_string() + "\n";
      out += "  select-alphabet " + symbols_spaced(s.alphabet()) + "\n";
    } else if (s.slt()) {
      out += "  select slt {\n" + indent(render_slt(*s.slt()), "    ") + "  }\n";
    } else {
      out += "  select dfa {\n" + indent(render_dfa(s.dfa()), "    ") + "  }\n";
    }
    if (p.declared_family) out += "  family " + p.declared_family->name() + "\n";
    for (const auto& c : p.contexts) {
      out += "  context " + show_word(c.u) + " , " + show_word(c.v) + "\n";
    }
    out += "end\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Dfa parse_dfa_file(const std::filesystem::path& path) {
  return parse_dfa(read_text_file(path), path.string());
}

SltRep parse_slt_file(const std::filesystem::path& path) {
  return parse_slt(read_text_file(path), path.string());
}

ContextualGrammar parse_grammar_file(const std::filesystem::path& path) {
  return parse_grammar(read_text_file(path), path.string(), path.parent_path());
}

std::string render_words(const std::vector<Word>& words) {
  std::string out;
  for (const auto& w : words) out += show_word(w) + "\n";
  return out;
}

}  // namespace subreg
