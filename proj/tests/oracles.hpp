#pragma once

// Independent reference implementations used to compute and check expected
// values. None of them goes through packed words, the Earley chart, the
// memoized enumerator or the automaton engine.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lexdense/alphabet.hpp"
#include "lexdense/grammar.hpp"
#include "lexdense/pcp.hpp"

namespace oracle {

using lexdense::Word;

/// Every word over `letters` of length <= max_length, the empty word included.
inline std::vector<Word> all_words(const std::vector<std::string>& letters, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (const auto& l : letters) {
        auto x = w;
        x.push_back(l);
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// The order straight from its definition: u is a proper prefix of v, or
/// u = x a y and v = x b z with a before b in `order`.
inline bool lex_less(const Word& u, const Word& v, const std::vector<std::string>& order) {
  auto rank = [&](const std::string& t) { return std::find(order.begin(), order.end(), t) - order.begin(); };
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i == v.size()) return false;
    if (u[i] != v[i]) return rank(u[i]) < rank(v[i]);
  }
  return u.size() < v.size();
}

/// Terminal words of length <= max_length reachable by leftmost rewriting of
/// sentential forms. Forms never shrink (no ε-rules), so longer forms are pruned.
inline std::set<Word> derivable_words(const lexdense::Grammar& g, std::size_t max_length) {
  std::set<Word> forms{{g.start()}};
  std::vector<Word> frontier{{g.start()}};
  std::set<Word> words;
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& form : frontier) {
      auto it = std::find_if(form.begin(), form.end(), [&](const std::string& t) { return !g.is_terminal(t); });
      if (it == form.end()) {
        words.insert(form);
        continue;
      }
      const auto pos = static_cast<std::size_t>(it - form.begin());
      for (const auto& p : g.productions()) {
        if (p.lhs != *it) continue;
        Word rewritten(form.begin(), form.begin() + pos);
        rewritten.insert(rewritten.end(), p.rhs.begin(), p.rhs.end());
        rewritten.insert(rewritten.end(), form.begin() + pos + 1, form.end());
        if (rewritten.size() > max_length) continue;
        if (forms.insert(rewritten).second) next.push_back(rewritten);
      }
    }
    frontier = std::move(next);
  }
  return words;
}

inline std::vector<Word> sorted_lex(std::set<Word> words, const std::vector<std::string>& order) {
  std::vector<Word> out(words.begin(), words.end());
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return lex_less(a, b, order); });
  return out;
}

/// Shortest, then least, solution by trying every index sequence without pruning.
inline std::optional<std::vector<std::size_t>> exhaustive_pcp(const lexdense::PcpInstance& instance,
                                                              std::size_t max_depth) {
  std::vector<std::vector<std::size_t>> layer{{}};
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& seq : layer)
      for (std::size_t i = 1; i <= instance.size(); ++i) {
        auto s = seq;
        s.push_back(i);
        std::string top, bottom;
        for (auto k : s) {
          top += instance.alpha(k);
          bottom += instance.beta(k);
        }
        if (top == bottom) return s;
        next.push_back(s);
      }
    layer = std::move(next);
  }
  return std::nullopt;
}

/// Strict string reversal over {a,b}, spelled as tokens.
inline Word reversed_tokens(const std::string& ab) {
  Word out;
  for (auto it = ab.rbegin(); it != ab.rend(); ++it) out.emplace_back(1, *it);
  return out;
}

}  // namespace oracle
