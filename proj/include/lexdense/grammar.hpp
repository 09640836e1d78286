#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lexdense/alphabet.hpp"

namespace lexdense {

struct Production {
  std::string lhs;
  std::vector<std::string> rhs;

  bool operator==(const Production&) const = default;
};

/// An ε-free context-free grammar over an ordered terminal alphabet.
///
/// A token is a terminal iff it belongs to the alphabet. The nonterminals are
/// the start symbol plus every left-hand side, listed start first and then in
/// order of first appearance; that order is derived, so two grammars with the
/// same alphabet, start and production list compare equal.
class Grammar {
 public:
  /// Throws InputError when a right side is empty, a left side is a
  /// terminal, or a right side mentions a token that is neither a terminal
  /// nor a declared nonterminal.
  Grammar(OrderedAlphabet alphabet, std::string start, std::vector<Production> productions);

  const OrderedAlphabet& alphabet() const noexcept { return alphabet_; }
  const std::string& start() const noexcept { return start_; }
  const std::vector<Production>& productions() const noexcept { return productions_; }
  const std::vector<std::string>& nonterminals() const noexcept { return nonterminals_; }

  bool is_terminal(std::string_view token) const { return alphabet_.contains(token); }
  bool is_nonterminal(std::string_view token) const;

  bool operator==(const Grammar& other) const {
    return alphabet_ == other.alphabet_ && start_ == other.start_ && productions_ == other.productions_;
  }

 private:
  OrderedAlphabet alphabet_;
  std::string start_;
  std::vector<Production> productions_;
  std::vector<std::string> nonterminals_;
};

Grammar parse_grammar(std::string_view text);
std::string serialize(const Grammar& grammar);

/// Removes non-generating and unreachable nonterminals together with every
/// production that mentions them. An empty language yields a grammar with no
/// productions.
Grammar trim(const Grammar& grammar);

/// True iff the grammar generates no word at all.
bool language_is_empty(const Grammar& grammar);

/// Right sides are terminals optionally followed by a single trailing nonterminal.
bool is_right_linear(const Grammar& grammar);

/// Earley chart recognizer. Construct once, query many words.
class Recognizer {
 public:
  explicit Recognizer(const Grammar& grammar);
  ~Recognizer();
  Recognizer(Recognizer&&) noexcept;
  Recognizer& operator=(Recognizer&&) noexcept;

  bool accepts(const PackedWord& word) const;
  /// Throws InputError for letters outside the grammar's alphabet.
  bool accepts(const Word& word) const;

 private:
  struct Impl;
  std::unique_ptr<const Impl> impl_;
};

bool recognize(const Grammar& grammar, const Word& word);

struct EnumerationLimits {
  /// Cap on words held across all (nonterminal, length) tables.
  std::size_t max_words = std::size_t{1} << 24;
};

/// Every word of a language up to some length, sorted ascending in the
/// lexicographic order and free of duplicates.
class WordWindow {
 public:
  WordWindow(OrderedAlphabet alphabet, std::size_t max_length, std::vector<PackedWord> sorted_words)
      : alphabet_(std::move(alphabet)), max_length_(max_length), words_(std::move(sorted_words)) {}

  const OrderedAlphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t max_length() const noexcept { return max_length_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  const std::vector<PackedWord>& packed() const noexcept { return words_; }
  Word word(std::size_t i) const { return alphabet_.unpack(words_.at(i)); }
  std::vector<Word> words() const;
  bool contains(const PackedWord& word) const;

 private:
  OrderedAlphabet alphabet_;
  std::size_t max_length_;
  std::vector<PackedWord> words_;
};

/// All words of L(grammar) of length at most `max_length`. Throws
/// ResourceLimitError rather than truncating when the cap is exceeded.
WordWindow enumerate_up_to_length(const Grammar& grammar, std::size_t max_length,
                                  const EnumerationLimits& limits = {});

}  // namespace lexdense
