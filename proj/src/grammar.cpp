#include <algorithm>
#include <unordered_set>

#include "compiled_grammar.hpp"
#include "lexdense/errors.hpp"
#include "lexdense/grammar.hpp"

namespace lexdense {

Grammar::Grammar(OrderedAlphabet alphabet, std::string start, std::vector<Production> productions)
    : alphabet_(std::move(alphabet)), start_(std::move(start)), productions_(std::move(productions)) {
  if (!is_valid_token(start_)) throw InputError("invalid start symbol '" + start_ + "'");
  if (alphabet_.contains(start_)) throw InputError("start symbol '" + start_ + "' is an alphabet letter");

  std::unordered_set<std::string> declared{start_};
  nonterminals_.push_back(start_);
  for (const auto& p : productions_) {
    if (alphabet_.contains(p.lhs)) throw InputError("left side '" + p.lhs + "' is an alphabet letter");
    if (!is_valid_token(p.lhs)) throw InputError("invalid nonterminal '" + p.lhs + "'");
    if (declared.insert(p.lhs).second) nonterminals_.push_back(p.lhs);
  }
  for (const auto& p : productions_) {
    if (p.rhs.empty()) throw InputError("ε production for '" + p.lhs + "'");
    for (const auto& token : p.rhs) {
      if (!alphabet_.contains(token) && !declared.contains(token))
        throw InputError("undeclared token '" + token + "': neither an alphabet letter nor a nonterminal");
    }
  }
}

bool Grammar::is_nonterminal(std::string_view token) const {
  return std::find(nonterminals_.begin(), nonterminals_.end(), token) != nonterminals_.end();
}

Grammar trim(const Grammar& grammar) {
  const auto compiled = detail::compile(grammar);
  const std::size_t count = compiled.nonterminal_count();

  std::vector<bool> generating(count, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& rule : compiled.rules) {
      if (generating[rule.lhs]) continue;
      bool all = std::all_of(rule.rhs.begin(), rule.rhs.end(), [&](auto s) {
        return compiled.is_terminal(s) || generating[compiled.nonterminal(s)];
      });
      if (all) generating[rule.lhs] = changed = true;
    }
  }

  auto usable = [&](const detail::CompiledGrammar::Rule& rule) {
    if (!generating[rule.lhs]) return false;
    return std::all_of(rule.rhs.begin(), rule.rhs.end(), [&](auto s) {
      return compiled.is_terminal(s) || generating[compiled.nonterminal(s)];
    });
  };

  std::vector<bool> reachable(count, false);
  if (generating[compiled.start]) {
    std::vector<std::size_t> stack{compiled.start};
    reachable[compiled.start] = true;
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      for (auto r : compiled.rules_of[a]) {
        if (!usable(compiled.rules[r])) continue;
        for (auto s : compiled.rules[r].rhs) {
          if (compiled.is_terminal(s)) continue;
          auto b = compiled.nonterminal(s);
          if (!reachable[b]) {
            reachable[b] = true;
            stack.push_back(b);
          }
        }
      }
    }
  }

  std::vector<Production> kept;
  for (std::size_t r = 0; r < compiled.rules.size(); ++r) {
    const auto& rule = compiled.rules[r];
    if (reachable[rule.lhs] && usable(rule)) kept.push_back(grammar.productions()[r]);
  }
  return Grammar(grammar.alphabet(), grammar.start(), std::move(kept));
}

bool language_is_empty(const Grammar& grammar) { return trim(grammar).productions().empty(); }

bool is_right_linear(const Grammar& grammar) {
  for (const auto& p : grammar.productions()) {
    for (std::size_t i = 0; i + 1 < p.rhs.size(); ++i)
      if (!grammar.is_terminal(p.rhs[i])) return false;
  }
  return true;
}

std::vector<Word> WordWindow::words() const {
  std::vector<Word> out;
  out.reserve(words_.size());
  for (const auto& w : words_) out.push_back(alphabet_.unpack(w));
  return out;
}

bool WordWindow::contains(const PackedWord& word) const {
  return std::binary_search(words_.begin(), words_.end(), word);
}

}  // namespace lexdense
