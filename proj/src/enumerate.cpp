#include <algorithm>
#include <functional>

#include "compiled_grammar.hpp"
#include "lexdense/errors.hpp"
#include "lexdense/grammar.hpp"

namespace lexdense {
namespace {

using detail::CompiledGrammar;
using WordSet = std::vector<PackedWord>;  // sorted, unique

void sort_unique(WordSet& words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

// Strongly connected components of the unit-production graph A -> B, listed
// so that every component comes after the components it points to.
std::vector<std::vector<std::size_t>> unit_components(const CompiledGrammar& g) {
  const std::size_t count = g.nonterminal_count();
  std::vector<std::vector<std::size_t>> edges(count);
  for (const auto& rule : g.rules)
    if (rule.rhs.size() == 1 && !g.is_terminal(rule.rhs[0])) edges[rule.lhs].push_back(g.nonterminal(rule.rhs[0]));

  // Tarjan; components are emitted sinks first.
  std::vector<int> index(count, -1), low(count, 0);
  std::vector<bool> on_stack(count, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : edges[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> component;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      components.push_back(std::move(component));
    }
  };
  for (std::size_t v = 0; v < count; ++v)
    if (index[v] < 0) visit(v);
  return components;
}

class Enumerator {
 public:
  Enumerator(const CompiledGrammar& g, std::size_t max_length, std::size_t max_words)
      : g_(g), max_length_(max_length), max_words_(max_words),
        table_(g.nonterminal_count(), std::vector<WordSet>(max_length + 1)),
        components_(unit_components(g)) {}

  void run() {
    for (std::size_t length = 1; length <= max_length_; ++length) fill_length(length);
  }

  WordSet collect(std::size_t nonterminal) const {
    WordSet all;
    for (const auto& words : table_[nonterminal]) all.insert(all.end(), words.begin(), words.end());
    std::sort(all.begin(), all.end());
    return all;
  }

 private:
  void charge(std::size_t words) {
    stored_ += words;
    if (stored_ > max_words_)
      throw ResourceLimitError("enumeration exceeded the cap of " + std::to_string(max_words_) +
                               " words; raise the cap or lower the length bound");
  }

  // Appends every word of exactly `length` letters derivable from rhs[pos..].
  void expand(const std::vector<CompiledGrammar::Symbol>& rhs, std::size_t pos, std::size_t length,
              PackedWord& prefix, WordSet& out) {
    const std::size_t symbols_left = rhs.size() - pos;
    if (symbols_left == 0) {
      if (length == 0) out.push_back(prefix);
      return;
    }
    if (length < symbols_left) return;
    const auto s = rhs[pos];
    if (g_.is_terminal(s)) {
      prefix.push_back(to_letter_byte(s));
      expand(rhs, pos + 1, length - 1, prefix, out);
      prefix.pop_back();
      return;
    }
    const auto& by_length = table_[g_.nonterminal(s)];
    const std::size_t lo = symbols_left == 1 ? length : 1;
    const std::size_t hi = length - (symbols_left - 1);
    for (std::size_t part = lo; part <= hi; ++part) {
      for (const auto& piece : by_length[part]) {
        const auto mark = prefix.size();
        prefix += piece;
        expand(rhs, pos + 1, length - part, prefix, out);
        prefix.resize(mark);
      }
    }
  }

  void fill_length(std::size_t length) {
    std::vector<WordSet> base(g_.nonterminal_count());
    for (const auto& rule : g_.rules) {
      if (rule.rhs.size() == 1 && !g_.is_terminal(rule.rhs[0])) continue;
      PackedWord prefix;
      expand(rule.rhs, 0, length, prefix, base[rule.lhs]);
      if (base[rule.lhs].size() > max_words_) charge(base[rule.lhs].size());
    }

    // Unit productions only move words between nonterminals at the same length.
    std::vector<std::size_t> component_of(g_.nonterminal_count());
    for (std::size_t c = 0; c < components_.size(); ++c)
      for (auto a : components_[c]) component_of[a] = c;

    for (const auto& component : components_) {
      WordSet merged;
      for (auto a : component) {
        merged.insert(merged.end(), base[a].begin(), base[a].end());
        for (auto r : g_.rules_of[a]) {
          const auto& rule = g_.rules[r];
          if (rule.rhs.size() != 1 || g_.is_terminal(rule.rhs[0])) continue;
          const auto b = g_.nonterminal(rule.rhs[0]);
          if (component_of[b] == component_of[a]) continue;
          const auto& words = table_[b][length];
          merged.insert(merged.end(), words.begin(), words.end());
        }
      }
      sort_unique(merged);
      charge(merged.size() * component.size());
      for (std::size_t i = 1; i < component.size(); ++i) table_[component[i]][length] = merged;
      table_[component.front()][length] = std::move(merged);
    }
  }

  const CompiledGrammar& g_;
  std::size_t max_length_;
  std::size_t max_words_;
  std::size_t stored_ = 0;
  std::vector<std::vector<WordSet>> table_;
  std::vector<std::vector<std::size_t>> components_;
};

}  // namespace

WordWindow enumerate_up_to_length(const Grammar& grammar, std::size_t max_length, const EnumerationLimits& limits) {
  const auto compiled = detail::compile(grammar);
  Enumerator enumerator(compiled, max_length, limits.max_words);
  enumerator.run();
  return WordWindow(grammar.alphabet(), max_length, enumerator.collect(compiled.start));
}

}  // namespace lexdense
