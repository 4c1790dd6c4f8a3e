#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subreg {

/// Malformed or inconsistent user input (bad file line, foreign symbol,
/// alphabet mismatch, out-of-range parameter).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word is a sequence of single-character symbols; the empty string is λ.
using Word = std::string;

/// Token used for λ in every text format.
inline constexpr char kEmptyWordToken = '_';

/// Ordered finite set of single-character symbols.  Declaration order is the
/// tie-break order for every enumeration and sorted output.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  char operator[](std::size_t i) const { return symbols_[i]; }
  const std::string& symbols() const { return symbols_; }

  bool contains(char c) const { return index_of(c).has_value(); }
  std::optional<std::size_t> index_of(char c) const;
  bool contains_word(std::string_view w) const;
  bool is_subset_of(const Alphabet& other) const;

  /// Symbols of `w` in first-occurrence order.
  static Alphabet of_word(std::string_view w);

  /// (length, symbol-order) comparison.
  bool word_less(std::string_view a, std::string_view b) const;
  void sort_words(std::vector<Word>& words) const;

  /// All words of exactly length n in enumeration order.
  std::vector<Word> words_of_length(std::size_t n) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::string symbols_;
  // index_[c] = position + 1, 0 if absent
  std::vector<unsigned char> index_ = std::vector<unsigned char>(256, 0);
};

/// Renders λ as `_`.
std::string show_word(std::string_view w);
/// Parses `_` as λ; any other token is taken literally.
Word parse_word_token(std::string_view token);

}  // namespace subreg
