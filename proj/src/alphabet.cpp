#include "lexdense/alphabet.hpp"

#include <cctype>

#include "lexdense/errors.hpp"

namespace lexdense {

bool is_valid_token(std::string_view token) {
  if (token.empty() || token == "->" || token == "-") return false;
  for (char ch : token) {
    const auto byte = static_cast<unsigned char>(ch);
    if (byte < 0x80 && (std::isspace(byte) || std::iscntrl(byte))) return false;
    if (ch == '#' || ch == ',' || ch == '|') return false;
  }
  return true;
}

OrderedAlphabet::OrderedAlphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw InputError("alphabet needs at least one letter");
  if (tokens_.size() > kMaxSize)
    throw InputError("alphabet has " + std::to_string(tokens_.size()) + " letters; at most " +
                     std::to_string(kMaxSize) + " are supported");
  ranks_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!is_valid_token(tokens_[i])) throw InputError("invalid letter token '" + tokens_[i] + "'");
    if (!ranks_.emplace(tokens_[i], i).second)
      throw InputError("duplicate alphabet token '" + tokens_[i] + "'");
  }
}

std::optional<std::size_t> OrderedAlphabet::find(std::string_view token) const {
  auto it = ranks_.find(std::string(token));
  if (it == ranks_.end()) return std::nullopt;
  return it->second;
}

bool OrderedAlphabet::contains(std::string_view token) const { return find(token).has_value(); }

std::size_t OrderedAlphabet::rank(std::string_view token) const {
  if (auto r = find(token)) return *r;
  throw InputError("letter '" + std::string(token) + "' is not in the alphabet");
}

PackedWord OrderedAlphabet::pack(const Word& word) const {
  PackedWord packed;
  packed.reserve(word.size());
  for (const auto& letter : word) packed.push_back(to_letter_byte(rank(letter)));
  return packed;
}

Word OrderedAlphabet::unpack(const PackedWord& word) const {
  Word out;
  out.reserve(word.size());
  for (char byte : word) out.push_back(token(letter_rank(byte)));
  return out;
}

std::string format_word(const Word& word) {
  if (word.empty()) return "-";
  std::string out;
  for (const auto& letter : word) {
    if (!out.empty()) out += ' ';
    out += letter;
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word word;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) word.push_back(std::move(current));
    current.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      current.push_back(ch);
    }
  }
  flush();
  if (word.size() == 1 && word.front() == "-") return {};
  for (const auto& letter : word)
    if (!is_valid_token(letter)) throw ParseError(0, "malformed word: bad token '" + letter + "'");
  return word;
}

}  // namespace lexdense
