#include "lexdense/reduction.hpp"

#include <algorithm>

#include "lexdense/errors.hpp"
#include "lexdense/lex_order.hpp"

namespace lexdense {
namespace {

std::vector<std::string> c_tokens(std::size_t n) {
  std::vector<std::string> c;
  for (std::size_t i = 1; i <= n; ++i) c.push_back(std::to_string(i));
  for (const char* t : {"a", "b", "cent", "dollar"}) c.emplace_back(t);
  return c;
}

std::string d_token(std::size_t j, std::size_t k) { return "d" + std::to_string(j) + "." + std::to_string(k); }

Word reversed_letters(const std::string& ab) {
  Word out;
  for (auto it = ab.rbegin(); it != ab.rend(); ++it) out.emplace_back(1, *it);
  return out;
}

Word concat(Word left, const Word& right) {
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace

OrderedAlphabet build_delta_alphabet(std::size_t n) {
  if (n == 0) throw InputError("the reduction alphabet needs n >= 1");
  const auto c = c_tokens(n);
  std::vector<std::string> tokens;
  for (std::size_t j = 1; j <= n + 2; ++j) {
    tokens.push_back(c[j - 1]);
    for (std::size_t k = 0; k < 3; ++k) tokens.push_back(d_token(j, k));
  }
  tokens.push_back(c[n + 2]);
  tokens.push_back(c[n + 3]);
  return OrderedAlphabet(std::move(tokens));
}

std::optional<std::size_t> ReductionArtifacts::c_index(const std::string& letter) const {
  auto it = std::find(c_letters.begin(), c_letters.end(), letter);
  if (it == c_letters.end()) return std::nullopt;
  return static_cast<std::size_t>(it - c_letters.begin()) + 1;
}

std::optional<std::size_t> ReductionArtifacts::d_block(const std::string& letter) const {
  for (std::size_t j = 0; j < d_letters.size(); ++j)
    if (std::find(d_letters[j].begin(), d_letters[j].end(), letter) != d_letters[j].end()) return j + 1;
  return std::nullopt;
}

ReductionArtifacts build_reduction_grammar(const PcpInstance& instance) {
  const std::size_t n = instance.size();
  auto delta = build_delta_alphabet(n);
  auto c = c_tokens(n);
  std::vector<std::array<std::string, 3>> d;
  for (std::size_t j = 1; j <= n + 2; ++j) d.push_back({d_token(j, 0), d_token(j, 1), d_token(j, 2)});
  const auto& cent = c[n + 2];
  const auto& dollar = c[n + 3];
  auto block = [](std::size_t j) { return "D" + std::to_string(j); };

  std::vector<Production> p;
  p.push_back({"S", {"A", cent}});
  p.push_back({"S", {"B", dollar}});
  p.push_back({"S", {"C"}});
  for (const char* side : {"A", "B"}) {
    const bool is_alpha = side[0] == 'A';
    for (std::size_t i = 1; i <= n; ++i) {
      const auto rev = reversed_letters(is_alpha ? instance.alpha(i) : instance.beta(i));
      p.push_back({side, concat({c[i - 1], side}, rev)});
      p.push_back({side, concat({c[i - 1]}, rev)});
    }
  }
  for (std::size_t i = 1; i <= n + 2; ++i) p.push_back({"C", {c[i - 1], "C"}});
  for (std::size_t j = 1; j <= n + 2; ++j) p.push_back({"C", {block(j)}});
  for (std::size_t j = 1; j <= n + 2; ++j) {
    p.push_back({block(j), {d[j - 1][0], block(j)}});
    p.push_back({block(j), {d[j - 1][2], block(j)}});
    p.push_back({block(j), {d[j - 1][1]}});
  }

  Grammar grammar(delta, "S", std::move(p));
  return ReductionArtifacts{instance, std::move(delta), std::move(grammar), std::move(c), std::move(d)};
}

GapWitness gap_witness(const ReductionArtifacts& r, const Solution& solution) {
  if (!verify_solution(r.instance, solution)) throw InputError("index sequence is not a solution of the instance");
  Word indices;
  std::string alpha_concat;
  for (auto i : solution.indices) {
    indices.push_back(r.index_letter(i));
    alpha_concat += r.instance.alpha(i);
  }
  const Word stem = concat(indices, reversed_letters(alpha_concat));
  return {concat(stem, {r.cent()}), concat(stem, {r.dollar()})};
}

AdjacencyVerdict certify_adjacent(const Grammar& grammar, const Word& lower, const Word& upper, std::size_t max_length,
                                  const EnumerationLimits& limits) {
  const auto& alphabet = grammar.alphabet();
  if (!alphabet.contains("cent") || !alphabet.contains("dollar"))
    throw InputError("certify_adjacent: alphabet lacks the letters cent and dollar");
  if (lower.empty() || upper.empty() || lower.back() != "cent" || upper.back() != "dollar" ||
      !std::equal(lower.begin(), lower.end() - 1, upper.begin(), upper.end() - 1))
    throw InputError("certify_adjacent: pair must have the shape w·cent, w·dollar");
  const Recognizer recognizer(grammar);
  if (!recognizer.accepts(lower) || !recognizer.accepts(upper))
    throw InputError("certify_adjacent: both words must belong to the language");

  const auto cent = alphabet.rank("cent");
  const auto dollar = alphabet.rank("dollar");
  if (dollar <= cent) throw InputError("certify_adjacent: cent must precede dollar");
  if (dollar != cent + 1) return Refuted{"P1", {Word{alphabet.token(cent + 1)}}};

  const auto window = enumerate_up_to_length(grammar, max_length, limits);
  const auto prefix_check = prefix_free_window(window);
  if (const auto* v = std::get_if<PrefixViolation>(&prefix_check))
    return Refuted{"P2", {v->prefix, v->extension}};

  const auto lo = alphabet.pack(lower);
  const auto hi = alphabet.pack(upper);
  const auto& words = window.packed();
  auto it = std::upper_bound(words.begin(), words.end(), lo);
  if (it != words.end() && *it < hi) return Refuted{"P3", {alphabet.unpack(*it)}};

  const auto bound = std::to_string(max_length);
  return AdjacencyCertificate{
      max_length,
      window.size(),
      {"P1: no letter lies strictly between cent and dollar",
       "P2: the " + std::to_string(window.size()) + " words of length <= " + bound +
           " are prefix-free (bounded check; the grammar is prefix by construction)",
       "P3: no word of length <= " + bound + " lies strictly between the pair"},
      "A word z with w·cent < z < w·dollar either has w·cent as a proper prefix, which a prefix "
      "language excludes, or continues w with a letter strictly between cent and dollar, and there is none."};
}

AdjacencyVerdict certify_adjacent(const ReductionArtifacts& reduction, const Word& lower, const Word& upper,
                                  std::size_t max_length, const EnumerationLimits& limits) {
  return certify_adjacent(reduction.grammar, lower, upper, max_length, limits);
}

Neighbors neighbor_witnesses(const ReductionArtifacts& r, const Word& v) {
  const Recognizer recognizer(r.grammar);
  if (!recognizer.accepts(v)) throw InputError("neighbor_witnesses: word '" + format_word(v) + "' is not in the language");

  Neighbors out;
  const auto& last = v.back();
  if (last == r.cent() || last == r.dollar()) {
    const bool is_alpha = last == r.cent();
    Word indices;
    std::string concat_side;
    std::size_t pos = 0;
    for (; pos + 1 < v.size(); ++pos) {
      auto c = r.c_index(v[pos]);
      if (!c || *c > r.n()) break;
      indices.push_back(v[pos]);
      concat_side += is_alpha ? r.instance.alpha(*c) : r.instance.beta(*c);
    }
    const Word expected = reversed_letters(concat_side);
    if (indices.empty() || !std::equal(v.begin() + pos, v.end() - 1, expected.begin(), expected.end()))
      throw InputError("neighbor_witnesses: word is not of the form i_1..i_m·rev(..)·end");
    concat_side += is_alpha ? r.instance.alpha(1) : r.instance.beta(1);
    Word lower_stem = concat(indices, {r.index_letter(1)});
    out.lower = concat(concat(lower_stem, reversed_letters(concat_side)), {last});
    out.upper = {r.d(*r.c_index(v.front()), 1)};
  } else if (auto j = r.d_block(last); j && last == r.d(*j, 1)) {
    const Word stem(v.begin(), v.end() - 1);
    out.lower = concat(stem, {r.d(*j, 0), r.d(*j, 1)});
    out.upper = concat(stem, {r.d(*j, 2), r.d(*j, 1)});
  } else {
    throw InputError("neighbor_witnesses: word belongs to none of the three families");
  }

  const auto& a = r.delta;
  if (!recognizer.accepts(out.lower) || !recognizer.accepts(out.upper) ||
      lex_compare(out.lower, v, a) != std::strong_ordering::less ||
      lex_compare(v, out.upper, a) != std::strong_ordering::less)
    throw InternalError("neighbor_witnesses: constructed neighbours failed verification for '" + format_word(v) + "'");
  return out;
}

}  // namespace lexdense
