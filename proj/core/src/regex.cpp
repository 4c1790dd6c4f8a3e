#include "subreg/regex.hpp"

#include <cctype>

#include "subreg/automata.hpp"

namespace subreg {

RegexAst RegexAst::empty() {
  return RegexAst(std::make_shared<const Node>(Node{Kind::empty, 0, nullptr, nullptr}));
}
RegexAst RegexAst::epsilon() {
  return RegexAst(std::make_shared<const Node>(Node{Kind::epsilon, 0, nullptr, nullptr}));
}
RegexAst RegexAst::symbol(char c) {
  return RegexAst(std::make_shared<const Node>(Node{Kind::symbol, c, nullptr, nullptr}));
}
RegexAst RegexAst::concat(RegexAst l, RegexAst r) {
  return RegexAst(std::make_shared<const Node>(
      Node{Kind::concat, 0, std::make_shared<const RegexAst>(std::move(l)),
           std::make_shared<const RegexAst>(std::move(r))}));
}
RegexAst RegexAst::alt(RegexAst l, RegexAst r) {
  return RegexAst(std::make_shared<const Node>(
      Node{Kind::alt, 0, std::make_shared<const RegexAst>(std::move(l)),
           std::make_shared<const RegexAst>(std::move(r))}));
}
RegexAst RegexAst::star(RegexAst x) {
  return RegexAst(std::make_shared<const Node>(
      Node{Kind::star, 0, std::make_shared<const RegexAst>(std::move(x)), nullptr}));
}

namespace {

void collect_symbols(const RegexAst& ast, std::string& out) {
  switch (ast.kind()) {
    case RegexAst::Kind::symbol:
      if (out.find(ast.sym()) == std::string::npos) out.push_back(ast.sym());
      break;
    case RegexAst::Kind::concat:
    case RegexAst::Kind::alt:
      collect_symbols(ast.left(), out);
      collect_symbols(ast.right(), out);
      break;
    case RegexAst::Kind::star:
      collect_symbols(ast.left(), out);
      break;
    default:
      break;
  }
}

// Precedence: alt 0, concat 1, star/atom 2.
void print(const RegexAst& ast, int context, std::string& out) {
  using K = RegexAst::Kind;
  int prec = ast.kind() == K::alt ? 0 : ast.kind() == K::concat ? 1 : 2;
  bool parens = prec < context;
  if (parens) out.push_back('(');
  switch (ast.kind()) {
    case K::empty: out.push_back('~'); break;
    case K::epsilon: out.push_back('_'); break;
    case K::symbol: out.push_back(ast.sym()); break;
    case K::alt:
      print(ast.left(), 0, out);
      out.push_back('|');
      print(ast.right(), 1, out);
      break;
    case K::concat:
      print(ast.left(), 1, out);
      print(ast.right(), 2, out);
      break;
    case K::star:
      print(ast.left(), 2, out);
      out.push_back('*');
      break;
  }
  if (parens) out.push_back(')');
}

bool is_reserved(char c) {
  return c == '(' || c == ')' || c == '|' || c == '*' || c == '+' || c == '_' ||
         c == '~' || c == '#';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RegexAst parse() {
    RegexAst r = parse_alt();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("regex: " + msg + " at offset " + std::to_string(pos_));
  }
  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '_' || c == '~' || !is_reserved(c);
  }

  RegexAst parse_alt() {
    RegexAst r = parse_concat();
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      r = RegexAst::alt(std::move(r), parse_concat());
      skip_ws();
    }
    return r;
  }

  RegexAst parse_concat() {
    if (!at_atom_start()) fail("expected an operand");
    RegexAst r = parse_postfix();
    while (at_atom_start()) r = RegexAst::concat(std::move(r), parse_postfix());
    return r;
  }

  RegexAst parse_postfix() {
    RegexAst r = parse_atom();
    skip_ws();
    while (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '+')) {
      if (text_[pos_] == '*') {
        r = RegexAst::star(std::move(r));
      } else {
        r = RegexAst::concat(r, RegexAst::star(r));
      }
      ++pos_;
      skip_ws();
    }
    return r;
  }

  RegexAst parse_atom() {
    skip_ws();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RegexAst r = parse_alt();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    ++pos_;
    if (c == '_') return RegexAst::epsilon();
    if (c == '~') return RegexAst::empty();
    return RegexAst::symbol(c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Thompson construction; returns (entry, exit).
std::pair<State, State> build(const RegexAst& ast, Nfa& nfa) {
  using K = RegexAst::Kind;
  State in = nfa.add_state(), out = nfa.add_state();
  switch (ast.kind()) {
    case K::empty:
      break;
    case K::epsilon:
      nfa.add_epsilon(in, out);
      break;
    case K::symbol: {
      auto i = nfa.alphabet().index_of(ast.sym());
      if (!i) {
        throw InputError(std::string("regex symbol '") + ast.sym() +
                         "' is not in the alphabet {" + nfa.alphabet().symbols() + "}");
      }
      nfa.add_transition(in, *i, out);
      break;
    }
    case K::concat: {
      auto [l_in, l_out] = build(ast.left(), nfa);
      auto [r_in, r_out] = build(ast.right(), nfa);
      nfa.add_epsilon(in, l_in);
      nfa.add_epsilon(l_out, r_in);
      nfa.add_epsilon(r_out, out);
      break;
    }
    case K::alt: {
      auto [l_in, l_out] = build(ast.left(), nfa);
      auto [r_in, r_out] = build(ast.right(), nfa);
      nfa.add_epsilon(in, l_in);
      nfa.add_epsilon(in, r_in);
      nfa.add_epsilon(l_out, out);
      nfa.add_epsilon(r_out, out);
      break;
    }
    case K::star: {
      auto [x_in, x_out] = build(ast.left(), nfa);
      nfa.add_epsilon(in, out);
      nfa.add_epsilon(in, x_in);
      nfa.add_epsilon(x_out, x_in);
      nfa.add_epsilon(x_out, out);
      break;
    }
  }
  return {in, out};
}

}  // namespace

Alphabet RegexAst::symbols() const {
  std::string out;
  collect_symbols(*this, out);
  return Alphabet(out);
}

std::string RegexAst::to_string() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

bool operator==(const RegexAst& a, const RegexAst& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RegexAst::Kind::symbol:
      return a.sym() == b.sym();
    case RegexAst::Kind::concat:
    case RegexAst::Kind::alt:
      return a.left() == b.left() && a.right() == b.right();
    case RegexAst::Kind::star:
      return a.left() == b.left();
    default:
      return true;
  }
}

RegexAst parse_regex(std::string_view text) { return Parser(text).parse(); }

Dfa compile_regex(const RegexAst& ast, const Alphabet& alphabet) {
  Nfa nfa(alphabet);
  auto [in, out] = build(ast, nfa);
  nfa.add_start(in);
  nfa.set_accepting(out);
  return minimize(determinize(nfa));
}

Dfa compile_regex(std::string_view text, std::string_view alphabet) {
  RegexAst ast = parse_regex(text);
  return compile_regex(ast, alphabet.empty() ? ast.symbols() : Alphabet(alphabet));
}

bool is_union_free_syntactic(const RegexAst& ast) {
  switch (ast.kind()) {
    case RegexAst::Kind::alt:
      return false;
    case RegexAst::Kind::concat:
      return is_union_free_syntactic(ast.left()) && is_union_free_syntactic(ast.right());
    case RegexAst::Kind::star:
      return is_union_free_syntactic(ast.left());
    default:
      return true;
  }
}

}  // namespace subreg
