#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexdense/grammar.hpp"

namespace lexdense::detail {

/// Integer view of a grammar. Symbols below `terminal_count` are letter
/// ranks; symbol `terminal_count + k` is nonterminal k.
struct CompiledGrammar {
  using Symbol = std::uint32_t;

  struct Rule {
    std::size_t lhs;
    std::vector<Symbol> rhs;
  };

  std::size_t terminal_count = 0;
  std::size_t start = 0;
  std::vector<std::string> nonterminal_names;
  std::vector<Rule> rules;
  std::vector<std::vector<std::size_t>> rules_of;

  bool is_terminal(Symbol s) const { return s < terminal_count; }
  std::size_t nonterminal(Symbol s) const { return s - terminal_count; }
  Symbol symbol_of_nonterminal(std::size_t k) const { return static_cast<Symbol>(terminal_count + k); }
  std::size_t nonterminal_count() const { return nonterminal_names.size(); }
};

inline CompiledGrammar compile(const Grammar& grammar) {
  CompiledGrammar out;
  out.terminal_count = grammar.alphabet().size();
  out.nonterminal_names = grammar.nonterminals();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < out.nonterminal_names.size(); ++k) index.emplace(out.nonterminal_names[k], k);
  out.start = index.at(grammar.start());
  out.rules_of.resize(out.nonterminal_names.size());
  for (const auto& p : grammar.productions()) {
    CompiledGrammar::Rule rule{index.at(p.lhs), {}};
    for (const auto& token : p.rhs) {
      if (auto r = grammar.alphabet().find(token)) {
        rule.rhs.push_back(static_cast<CompiledGrammar::Symbol>(*r));
      } else {
        rule.rhs.push_back(out.symbol_of_nonterminal(index.at(token)));
      }
    }
    out.rules_of[rule.lhs].push_back(out.rules.size());
    out.rules.push_back(std::move(rule));
  }
  return out;
}

}  // namespace lexdense::detail
