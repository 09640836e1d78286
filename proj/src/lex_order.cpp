#include "lexdense/lex_order.hpp"

#include <bit>

#include "lexdense/errors.hpp"

namespace lexdense {

std::strong_ordering lex_compare(const Word& u, const Word& v, const OrderedAlphabet& alphabet) {
  return alphabet.pack(u) <=> alphabet.pack(v);
}

std::variant<FirstDifference, PrefixRelated> first_difference(const Word& u, const Word& v,
                                                              const OrderedAlphabet& alphabet) {
  const auto order = lex_compare(u, v, alphabet);
  if (order == std::strong_ordering::equal) throw InputError("first_difference: words are equal");
  if (order == std::strong_ordering::greater) throw InputError("first_difference: words are out of order");

  std::size_t i = 0;
  while (i < u.size() && i < v.size() && u[i] == v[i]) ++i;
  if (i == u.size()) return PrefixRelated{};
  return FirstDifference{Word(u.begin(), u.begin() + i), u[i], v[i], Word(u.begin() + i + 1, u.end()),
                         Word(v.begin() + i + 1, v.end())};
}

BinaryCoding::BinaryCoding(OrderedAlphabet source)
    : source_(std::move(source)),
      width_(std::max<std::size_t>(1, std::bit_width(source_.size() - 1))) {
  codes_.reserve(source_.size());
  for (std::size_t rank = 0; rank < source_.size(); ++rank) {
    Word code(width_);
    for (std::size_t bit = 0; bit < width_; ++bit) code[width_ - 1 - bit] = ((rank >> bit) & 1U) ? "1" : "0";
    codes_.push_back(std::move(code));
  }
}

const OrderedAlphabet& BinaryCoding::target() {
  static const OrderedAlphabet binary({"0", "1"});
  return binary;
}

const Word& BinaryCoding::code(const std::string& letter) const { return codes_[source_.rank(letter)]; }

Word BinaryCoding::encode(const Word& word) const {
  Word out;
  out.reserve(word.size() * width_);
  for (const auto& letter : word) {
    const auto& c = code(letter);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

BinaryCoding binary_code(const OrderedAlphabet& alphabet) { return BinaryCoding(alphabet); }

Grammar encode_grammar(const Grammar& grammar, const BinaryCoding& coding) {
  for (const auto& letter : grammar.alphabet().tokens())
    if (!coding.source().contains(letter)) throw InputError("coding has no code for letter '" + letter + "'");
  for (const auto& nt : grammar.nonterminals())
    if (BinaryCoding::target().contains(nt))
      throw InputError("nonterminal '" + nt + "' collides with a binary letter");

  std::vector<Production> encoded;
  encoded.reserve(grammar.productions().size());
  for (const auto& p : grammar.productions()) {
    Production q{p.lhs, {}};
    for (const auto& token : p.rhs) {
      if (grammar.is_terminal(token)) {
        const auto& c = coding.code(token);
        q.rhs.insert(q.rhs.end(), c.begin(), c.end());
      } else {
        q.rhs.push_back(token);
      }
    }
    encoded.push_back(std::move(q));
  }
  return Grammar(BinaryCoding::target(), grammar.start(), std::move(encoded));
}

// The extensions of a word w form a contiguous block directly after w in the
// sorted window, so checking neighbours suffices.
PrefixCheck prefix_free_window(const WordWindow& window) {
  const auto& words = window.packed();
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    const auto& shorter = words[i];
    const auto& next = words[i + 1];
    if (next.size() > shorter.size() && next.compare(0, shorter.size(), shorter) == 0)
      return PrefixViolation{window.word(i), window.word(i + 1)};
  }
  return PrefixFree{};
}

PrefixCheck prefix_free_bounded(const Grammar& grammar, std::size_t max_length, const EnumerationLimits& limits) {
  return prefix_free_window(enumerate_up_to_length(grammar, max_length, limits));
}

}  // namespace lexdense
