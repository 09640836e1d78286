#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <variant>

#include "lexdense/alphabet.hpp"
#include "lexdense/grammar.hpp"

namespace lexdense {

/// u < v iff u is a proper prefix of v, or at the first position where they
/// differ u's letter has the smaller rank. Throws InputError for letters
/// outside `alphabet`.
std::strong_ordering lex_compare(const Word& u, const Word& v, const OrderedAlphabet& alphabet);

/// u = common · lower_letter · lower_rest and v = common · upper_letter · upper_rest.
struct FirstDifference {
  Word common;
  std::string lower_letter;
  std::string upper_letter;
  Word lower_rest;
  Word upper_rest;
};

/// u is a proper prefix of v.
struct PrefixRelated {};

/// Requires u < v; throws InputError when the words are equal or out of order.
std::variant<FirstDifference, PrefixRelated> first_difference(const Word& u, const Word& v,
                                                              const OrderedAlphabet& alphabet);

/// Fixed-width, order-preserving code of an alphabet's letters as words over 0 < 1.
class BinaryCoding {
 public:
  explicit BinaryCoding(OrderedAlphabet source);

  const OrderedAlphabet& source() const noexcept { return source_; }
  /// The alphabet {"0", "1"} the codes are written in.
  static const OrderedAlphabet& target();
  std::size_t width() const noexcept { return width_; }

  /// Big-endian binary numeral of the letter's rank, zero-padded to width().
  const Word& code(const std::string& letter) const;
  Word encode(const Word& word) const;

 private:
  OrderedAlphabet source_;
  std::size_t width_;
  std::vector<Word> codes_;
};

BinaryCoding binary_code(const OrderedAlphabet& alphabet);

/// Replaces each terminal occurrence with its code word; nonterminals and
/// rule structure are unchanged.
Grammar encode_grammar(const Grammar& grammar, const BinaryCoding& coding);

struct PrefixFree {};
struct PrefixViolation {
  Word prefix;
  Word extension;
};
using PrefixCheck = std::variant<PrefixFree, PrefixViolation>;

/// Checks only the words of length <= max_length; being prefix-free is
/// undecidable for context-free grammars in general, so PrefixFree here is
/// bounded evidence, not a proof.
PrefixCheck prefix_free_bounded(const Grammar& grammar, std::size_t max_length, const EnumerationLimits& limits = {});
PrefixCheck prefix_free_window(const WordWindow& window);

}  // namespace lexdense
