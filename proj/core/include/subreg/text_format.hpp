#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "subreg/grammar.hpp"
#include "subreg/slt.hpp"

namespace subreg {

// Line-oriented text formats.  `#` starts a comment, `_` is λ.  Parse errors
// are InputError messages of the form "<origin>:<line>: <message>".

/// alphabet a b / states N / start Q / accept Q... / trans Q sym Q (one per
/// state and symbol).
Dfa parse_dfa(std::string_view text, std::string_view origin = "<dfa>");
std::string render_dfa(const Dfa& d);

/// slt k=K / alphabet a b (optional; default is the symbols used) /
/// B w... / I w... / E w... / F w...
SltRep parse_slt(std::string_view text, std::string_view origin = "<slt>");
std::string render_slt(const SltRep& rep);

/// alphabet / axiom / pair ... end blocks.  Within a pair:
///   select regex <expr> | select dfa <path> | select slt <path>
///   select dfa { ... } and select slt { ... } hold the file inline
///   select-alphabet <symbols>, family <name>, context <u> , <v>
/// Relative paths resolve against `base_dir`.
ContextualGrammar parse_grammar(std::string_view text, std::string_view origin = "<grammar>",
                                const std::filesystem::path& base_dir = {});
/// Regex selectors are written as expressions, others inline.
std::string render_grammar(const ContextualGrammar& g);

std::string read_text_file(const std::filesystem::path& path);
Dfa parse_dfa_file(const std::filesystem::path& path);
SltRep parse_slt_file(const std::filesystem::path& path);
ContextualGrammar parse_grammar_file(const std::filesystem::path& path);

/// One word per line, `_` for λ.
std::string render_words(const std::vector<Word>& words);

}  // namespace subreg
