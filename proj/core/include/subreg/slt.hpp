#pragma once

#include <optional>
#include <vector>

#include "subreg/dfa.hpp"

namespace subreg {

/// Strictly locally k-testable representation ⟨B, I, E, F⟩ over an alphabet.
///
/// A word w with |w| >= k is a member iff its length-k prefix is in B, its
/// length-k suffix is in E, and every length-k window with at least one
/// symbol on each side is in I.  For |w| in {k, k+1} there are no such
/// interior windows.  Words shorter than k are members iff they are in F.
struct SltRep {
  std::size_t k = 1;
  Alphabet alphabet;
  std::vector<Word> prefixes;   // B
  std::vector<Word> interiors;  // I
  std::vector<Word> suffixes;   // E
  std::vector<Word> short_words;  // F

  /// Checks lengths and alphabet; sorts and dedups the sets.  Throws
  /// InputError on violation.
  void normalize();

  friend bool operator==(const SltRep&, const SltRep&) = default;
};

bool slt_membership(const SltRep& rep, std::string_view w);
Dfa slt_to_dfa(const SltRep& rep);

/// Canonical representation at window length k: the forced window sets of
/// L plus F = L ∩ V^{<k}.  Its language always contains L; equality holds
/// iff L is strictly locally k-testable.
SltRep canonical_slt(const Dfa& l, std::size_t k);

struct SltDecision {
  bool yes = false;
  /// Exact representation on yes.
  std::optional<SltRep> rep;
  /// On no: a word accepted by the canonical representation but not by L.
  std::optional<Word> counterexample;
};

/// Decides membership in SLT_k without enumerating V^k: a language fails
/// iff some length-k word is a forced prefix and suffix yet rejected, or two
/// members sharing a (k-1)-overlap can be spliced into a non-member whose
/// windows all keep their roles.  The representation on yes lists up to
/// |V|^k windows; `with_rep = false` skips it.
SltDecision is_slt_k(const Dfa& l, std::size_t k, bool with_rep = true);

struct SltInference {
  /// Smallest k <= k_max with a yes, if any.
  std::optional<std::size_t> k;
  std::optional<SltRep> rep;
  std::size_t k_max = 0;
};

/// Default bound: (minimal state count)^2 + 1.
std::size_t default_slt_bound(const Dfa& l);
SltInference infer_slt(const Dfa& l, std::optional<std::size_t> k_max = std::nullopt);

/// Converts D_s ∪ V* D_e into ⟨V^k, V^k, V* D_e ∩ V^k, L ∩ V^{<k}⟩ with
/// k = 1 + the longest word of D_s ∪ D_e.  The result is checked for
/// language equivalence before returning (std::logic_error otherwise).
SltRep definite_to_slt(const std::vector<Word>& ds, const std::vector<Word>& de,
                       const Alphabet& alphabet);

/// D_s ∪ V* D_e as an automaton.
Dfa definite_language(const std::vector<Word>& ds, const std::vector<Word>& de,
                      const Alphabet& alphabet);

}  // namespace subreg
