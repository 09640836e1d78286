#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexdense {

/// A word as a sequence of letter tokens, e.g. {"1", "a", "cent"}.
using Word = std::vector<std::string>;

/// A word stored one byte per letter, each byte holding the letter's rank.
///
/// std::string compares bytes as unsigned char and treats a proper prefix as
/// smaller, so comparing two packed words over the same alphabet is exactly
/// the lexicographic order on the underlying words.
using PackedWord = std::string;

/// Finite list of distinct letter tokens; a token's position is its rank.
class OrderedAlphabet {
 public:
  static constexpr std::size_t kMaxSize = 256;

  explicit OrderedAlphabet(std::vector<std::string> tokens);

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  const std::string& token(std::size_t rank) const { return tokens_.at(rank); }

  bool contains(std::string_view token) const;
  std::optional<std::size_t> find(std::string_view token) const;
  /// Throws InputError for tokens outside the alphabet.
  std::size_t rank(std::string_view token) const;

  PackedWord pack(const Word& word) const;
  Word unpack(const PackedWord& word) const;

  bool operator==(const OrderedAlphabet& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t> ranks_;
};

/// Letter tokens are nonempty, contain no whitespace, control characters,
/// '#', ',' or '|', and are neither "->" nor "-" (the empty-word spelling).
bool is_valid_token(std::string_view token);

/// Space-separated tokens; the empty word is "-".
std::string format_word(const Word& word);

/// Accepts comma- and/or whitespace-separated tokens; "-" (or blank) is the empty word.
Word parse_word(std::string_view text);

inline char to_letter_byte(std::size_t rank) { return static_cast<char>(static_cast<unsigned char>(rank)); }
inline std::size_t letter_rank(char byte) { return static_cast<unsigned char>(byte); }

}  // namespace lexdense
