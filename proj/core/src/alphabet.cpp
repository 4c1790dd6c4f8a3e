#include "subreg/alphabet.hpp"

#include <algorithm>

namespace subreg {

Alphabet::Alphabet(std::string_view symbols) {
  for (char c : symbols) {
    auto& slot = index_[static_cast<unsigned char>(c)];
    if (slot != 0) {
      throw InputError(std::string("duplicate alphabet symbol '") + c + "'");
    }
    if (c == kEmptyWordToken) {
      throw InputError("'_' is reserved for the empty word");
    }
    symbols_.push_back(c);
    slot = static_cast<unsigned char>(symbols_.size());
  }
}

std::optional<std::size_t> Alphabet::index_of(char c) const {
  auto slot = index_[static_cast<unsigned char>(c)];
  if (slot == 0) return std::nullopt;
  return static_cast<std::size_t>(slot - 1);
}

bool Alphabet::contains_word(std::string_view w) const {
  return std::all_of(w.begin(), w.end(), [this](char c) { return contains(c); });
}

bool Alphabet::is_subset_of(const Alphabet& other) const {
  return other.contains_word(symbols_);
}

Alphabet Alphabet::of_word(std::string_view w) {
  std::string seen;
  for (char c : w) {
    if (seen.find(c) == std::string::npos) seen.push_back(c);
  }
  return Alphabet(seen);
}

bool Alphabet::word_less(std::string_view a, std::string_view b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    // Foreign symbols sort after alphabet symbols, then by char value.
    auto ia = index_of(a[i]), ib = index_of(b[i]);
    std::size_t ka = ia ? *ia : 256 + static_cast<unsigned char>(a[i]);
    std::size_t kb = ib ? *ib : 256 + static_cast<unsigned char>(b[i]);
    return ka < kb;
  }
  return false;
}

void Alphabet::sort_words(std::vector<Word>& words) const {
  std::sort(words.begin(), words.end(),
            [this](const Word& a, const Word& b) { return word_less(a, b); });
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

std::vector<Word> Alphabet::words_of_length(std::size_t n) const {
  std::vector<Word> layer{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    next.reserve(layer.size() * size());
    for (const auto& w : layer) {
      for (char c : symbols_) next.push_back(w + c);
    }
    layer = std::move(next);
  }
  return layer;
}

std::string show_word(std::string_view w) {
  return w.empty() ? std::string(1, kEmptyWordToken) : std::string(w);
}

Word parse_word_token(std::string_view token) {
  if (token == std::string_view(&kEmptyWordToken, 1)) return {};
  return Word(token);
}

}  // namespace subreg
