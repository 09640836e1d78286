#include <unordered_set>

#include "compiled_grammar.hpp"
#include "lexdense/grammar.hpp"

namespace lexdense {

struct Recognizer::Impl {
  detail::CompiledGrammar grammar;
  OrderedAlphabet alphabet;
};

Recognizer::Recognizer(const Grammar& grammar)
    : impl_(std::make_unique<const Impl>(Impl{detail::compile(grammar), grammar.alphabet()})) {}
Recognizer::~Recognizer() = default;
Recognizer::Recognizer(Recognizer&&) noexcept = default;
Recognizer& Recognizer::operator=(Recognizer&&) noexcept = default;

bool Recognizer::accepts(const Word& word) const { return accepts(impl_->alphabet.pack(word)); }

// Earley recognition. With no ε-rules every completed item spans at least one
// letter, so completion only consults earlier (already closed) item sets.
bool Recognizer::accepts(const PackedWord& word) const {
  const auto& g = impl_->grammar;
  const std::size_t n = word.size();
  if (n == 0) return false;

  struct Item {
    std::uint32_t rule;
    std::uint32_t dot;
    std::uint32_t origin;
  };
  auto key = [](const Item& it) {
    return (std::uint64_t{it.rule} << 40) | (std::uint64_t{it.dot} << 32) | it.origin;
  };

  std::vector<std::vector<Item>> sets(n + 1);
  std::vector<std::unordered_set<std::uint64_t>> seen(n + 1);
  auto add = [&](std::size_t at, Item it) {
    if (seen[at].insert(key(it)).second) sets[at].push_back(it);
  };

  for (auto r : g.rules_of[g.start]) add(0, {static_cast<std::uint32_t>(r), 0, 0});

  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t idx = 0; idx < sets[i].size(); ++idx) {
      const Item item = sets[i][idx];
      const auto& rule = g.rules[item.rule];
      if (item.dot < rule.rhs.size()) {
        const auto next = rule.rhs[item.dot];
        if (g.is_terminal(next)) {
          if (i < n && letter_rank(word[i]) == next) add(i + 1, {item.rule, item.dot + 1, item.origin});
        } else {
          for (auto r : g.rules_of[g.nonterminal(next)]) add(i, {static_cast<std::uint32_t>(r), 0, static_cast<std::uint32_t>(i)});
        }
      } else {
        const auto done = g.symbol_of_nonterminal(rule.lhs);
        const auto& parents = sets[item.origin];
        for (std::size_t p = 0; p < parents.size(); ++p) {
          const Item parent = parents[p];
          const auto& prule = g.rules[parent.rule];
          if (parent.dot < prule.rhs.size() && prule.rhs[parent.dot] == done)
            add(i, {parent.rule, parent.dot + 1, parent.origin});
        }
      }
    }
  }

  for (const auto& item : sets[n]) {
    const auto& rule = g.rules[item.rule];
    if (item.origin == 0 && rule.lhs == g.start && item.dot == rule.rhs.size()) return true;
  }
  return false;
}

bool recognize(const Grammar& grammar, const Word& word) { return Recognizer(grammar).accepts(word); }

}  // namespace lexdense
