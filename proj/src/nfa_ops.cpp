#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <unordered_map>

#include "lexdense/errors.hpp"
#include "lexdense/nfa.hpp"

namespace lexdense {
namespace {

void check_cap(std::size_t states, const StateCap& cap) {
  if (states > cap.max_states)
    throw ResourceLimitError("automaton construction exceeded the cap of " + std::to_string(cap.max_states) +
                             " states");
}

// Folds ε-edges into letter transitions: a state gets every transition and
// the acceptance of each state in its ε-closure.
Nfa remove_epsilon(const Nfa& letters, const std::vector<std::vector<State>>& epsilon) {
  const std::size_t n = letters.state_count();
  Nfa out(letters.alphabet());
  for (State s = 0; s < n; ++s) out.add_state(letters.is_initial(s), false);

  std::vector<State> closure;
  std::vector<bool> in_closure(n, false);
  for (State s = 0; s < n; ++s) {
    closure.assign(1, s);
    in_closure[s] = true;
    for (std::size_t i = 0; i < closure.size(); ++i)
      for (auto t : epsilon[closure[i]])
        if (!in_closure[t]) {
          in_closure[t] = true;
          closure.push_back(t);
        }
    std::vector<Transition> merged;
    for (auto c : closure) {
      if (letters.is_accepting(c)) out.set_accepting(s);
      const auto& ts = letters.transitions(c);
      merged.insert(merged.end(), ts.begin(), ts.end());
      in_closure[c] = false;
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    for (const auto& t : merged) out.add_transition(s, t.letter, t.target);
  }
  return out;
}

std::vector<bool> forward_reachable(const Nfa& x) {
  std::vector<bool> seen(x.state_count(), false);
  std::vector<State> stack = x.initial_states();
  for (auto s : stack) seen[s] = true;
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    for (const auto& t : x.transitions(s))
      if (!seen[t.target]) {
        seen[t.target] = true;
        stack.push_back(t.target);
      }
  }
  return seen;
}

std::vector<bool> backward_reachable(const Nfa& x) {
  std::vector<std::vector<State>> reverse(x.state_count());
  for (State s = 0; s < x.state_count(); ++s)
    for (const auto& t : x.transitions(s)) reverse[t.target].push_back(s);
  std::vector<bool> seen(x.state_count(), false);
  std::vector<State> stack;
  for (State s = 0; s < x.state_count(); ++s)
    if (x.is_accepting(s)) {
      seen[s] = true;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    for (auto p : reverse[s])
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
  }
  return seen;
}

bool has_cycle(const Nfa& x) {
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(x.state_count(), kWhite);
  for (State root = 0; root < x.state_count(); ++root) {
    if (colour[root] != kWhite) continue;
    std::vector<std::pair<State, std::size_t>> stack{{root, 0}};
    colour[root] = kGrey;
    while (!stack.empty()) {
      auto& [s, next] = stack.back();
      const auto& ts = x.transitions(s);
      if (next == ts.size()) {
        colour[s] = kBlack;
        stack.pop_back();
        continue;
      }
      auto target = ts[next++].target;
      if (colour[target] == kGrey) return true;
      if (colour[target] == kWhite) {
        colour[target] = kGrey;
        stack.push_back({target, 0});
      }
    }
  }
  return false;
}

}  // namespace

Nfa nfa_from_right_linear(const Grammar& grammar) {
  if (!is_right_linear(grammar)) throw InputError("grammar is not right-linear");
  Nfa letters{ConvolutionAlphabet(grammar.alphabet())};
  const auto& nts = grammar.nonterminals();
  std::unordered_map<std::string, State> state_of;
  for (const auto& nt : nts) state_of.emplace(nt, letters.add_state(nt == grammar.start(), false));
  const State accept = letters.add_state(false, true);
  std::vector<std::vector<State>> epsilon(letters.state_count());

  for (const auto& p : grammar.productions()) {
    const bool trailing = !grammar.is_terminal(p.rhs.back());
    const std::size_t spelled = p.rhs.size() - (trailing ? 1 : 0);
    const State last = trailing ? state_of.at(p.rhs.back()) : accept;
    State current = state_of.at(p.lhs);
    if (spelled == 0) {
      epsilon[current].push_back(last);
      continue;
    }
    for (std::size_t i = 0; i < spelled; ++i) {
      State target = last;
      if (i + 1 < spelled) {
        target = letters.add_state();
        epsilon.emplace_back();
      }
      letters.add_transition(current, static_cast<Letter>(grammar.alphabet().rank(p.rhs[i])), target);
      current = target;
    }
  }
  return remove_epsilon(letters, epsilon);
}

Nfa well_formed(const OrderedAlphabet& base, std::size_t tracks) {
  ConvolutionAlphabet alphabet(base, tracks);
  Nfa out(alphabet);
  const std::size_t masks = std::size_t{1} << tracks;
  for (std::size_t m = 0; m < masks; ++m) out.add_state(m == 0, true);
  for (std::size_t m = 0; m < masks; ++m) {
    for (Letter l = 0; l < alphabet.size(); ++l) {
      auto comps = alphabet.components(l);
      std::size_t next = m;
      bool ok = true;
      for (std::size_t t = 0; t < tracks; ++t) {
        const bool padded = comps[t] == alphabet.pad();
        if ((m >> t & 1U) && !padded) ok = false;
        if (padded) next |= std::size_t{1} << t;
      }
      if (ok) out.add_transition(static_cast<State>(m), l, static_cast<State>(next));
    }
  }
  return out;
}

Nfa lex_relation_on_tracks(const OrderedAlphabet& base, std::size_t tracks, std::size_t lower, std::size_t upper) {
  if (lower >= tracks || upper >= tracks || lower == upper) throw InputError("malformed track pair");
  ConvolutionAlphabet alphabet(base, tracks);
  Nfa out(alphabet);
  const State equal = out.add_state(true, false);
  const State less = out.add_state(false, true);
  const auto pad = alphabet.pad();
  for (Letter l = 0; l < alphabet.size(); ++l) {
    const auto x = alphabet.component(l, lower);
    const auto y = alphabet.component(l, upper);
    if (x == y && x != pad) {
      out.add_transition(equal, l, equal);
    } else if (y != pad && (x == pad || x < y)) {
      // x == pad: the lower word ended first and is a proper prefix.
      out.add_transition(equal, l, less);
    }
    out.add_transition(less, l, less);
  }
  return out;
}

Nfa lex_relation(const OrderedAlphabet& base) {
  return intersect(lex_relation_on_tracks(base, 2, 0, 1), well_formed(base, 2));
}

Nfa cylinder(const Nfa& plain, std::size_t tracks, std::size_t track) {
  if (plain.alphabet().tracks() != 1) throw InputError("cylinder expects a one-track automaton");
  if (track >= tracks) throw InputError("cylinder track out of range");
  ConvolutionAlphabet alphabet(plain.alphabet().base(), tracks);
  Nfa out(alphabet);
  for (State s = 0; s < plain.state_count(); ++s) out.add_state(plain.is_initial(s), plain.is_accepting(s));
  const State done = out.add_state(false, true);

  // Group the convolution letters by the component they carry on `track`.
  std::vector<std::vector<Letter>> by_component(alphabet.pad() + 1);
  for (Letter l = 0; l < alphabet.size(); ++l) by_component[alphabet.component(l, track)].push_back(l);

  for (State s = 0; s < plain.state_count(); ++s) {
    for (const auto& t : plain.transitions(s))
      for (auto l : by_component[t.letter]) out.add_transition(s, l, t.target);
    if (plain.is_accepting(s))
      for (auto l : by_component[alphabet.pad()]) out.add_transition(s, l, done);
  }
  for (auto l : by_component[alphabet.pad()]) out.add_transition(done, l, done);
  return out;
}

Nfa intersect(const Nfa& x, const Nfa& y, const StateCap& cap) {
  if (!(x.alphabet() == y.alphabet())) throw InputError("intersect: alphabet mismatch");
  Nfa out(x.alphabet());
  std::unordered_map<std::uint64_t, State> index;
  std::deque<std::pair<State, State>> work;
  auto state_for = [&](State a, State b) {
    const auto key = (std::uint64_t{a} << 32) | b;
    auto [it, fresh] = index.try_emplace(key, 0);
    if (fresh) {
      it->second = out.add_state(false, x.is_accepting(a) && y.is_accepting(b));
      check_cap(out.state_count(), cap);
      work.emplace_back(a, b);
    }
    return it->second;
  };
  for (auto a : x.initial_states())
    for (auto b : y.initial_states()) out.set_initial(state_for(a, b));

  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    const State from = index.at((std::uint64_t{a} << 32) | b);
    const auto& ta = x.transitions(a);
    const auto& tb = y.transitions(b);
    std::size_t i = 0, j = 0;
    while (i < ta.size() && j < tb.size()) {
      if (ta[i].letter < tb[j].letter) {
        ++i;
      } else if (tb[j].letter < ta[i].letter) {
        ++j;
      } else {
        const Letter l = ta[i].letter;
        std::size_t i_end = i, j_end = j;
        while (i_end < ta.size() && ta[i_end].letter == l) ++i_end;
        while (j_end < tb.size() && tb[j_end].letter == l) ++j_end;
        for (std::size_t p = i; p < i_end; ++p)
          for (std::size_t q = j; q < j_end; ++q) {
            const State to = state_for(ta[p].target, tb[q].target);
            out.add_transition(from, l, to);
          }
        i = i_end;
        j = j_end;
      }
    }
  }
  return out;
}

Nfa determinize(const Nfa& x, const StateCap& cap) {
  Nfa out(x.alphabet());
  std::map<std::vector<State>, State> index;
  std::deque<std::vector<State>> work;
  auto state_for = [&](std::vector<State> subset) {
    auto it = index.find(subset);
    if (it != index.end()) return it->second;
    const bool accepting = std::any_of(subset.begin(), subset.end(), [&](State s) { return x.is_accepting(s); });
    const State s = out.add_state(false, accepting);
    check_cap(out.state_count(), cap);
    index.emplace(subset, s);
    work.push_back(std::move(subset));
    return s;
  };
  out.set_initial(state_for(x.initial_states()));

  std::vector<Transition> merged;
  while (!work.empty()) {
    auto subset = std::move(work.front());
    work.pop_front();
    const State from = index.at(subset);
    merged.clear();
    for (auto s : subset) {
      const auto& ts = x.transitions(s);
      merged.insert(merged.end(), ts.begin(), ts.end());
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    for (std::size_t i = 0; i < merged.size();) {
      const Letter l = merged[i].letter;
      std::vector<State> targets;
      for (; i < merged.size() && merged[i].letter == l; ++i) targets.push_back(merged[i].target);
      const State to = state_for(std::move(targets));
      out.add_transition(from, l, to);
    }
  }
  return out;
}

Nfa complement(const Nfa& x, const StateCap& cap) {
  const Nfa dfa = determinize(x, cap);
  Nfa out(x.alphabet());
  for (State s = 0; s < dfa.state_count(); ++s) out.add_state(dfa.is_initial(s), !dfa.is_accepting(s));
  const State sink = out.add_state(false, true);
  check_cap(out.state_count(), cap);
  const auto letters = static_cast<Letter>(x.alphabet().size());
  for (State s = 0; s < dfa.state_count(); ++s) {
    const auto& ts = dfa.transitions(s);
    std::size_t i = 0;
    for (Letter l = 0; l < letters; ++l) {
      if (i < ts.size() && ts[i].letter == l) {
        out.add_transition(s, l, ts[i].target);
        ++i;
      } else {
        out.add_transition(s, l, sink);
      }
    }
  }
  for (Letter l = 0; l < letters; ++l) out.add_transition(sink, l, sink);
  if (x.alphabet().tracks() >= 2) return intersect(out, well_formed(x.alphabet().base(), x.alphabet().tracks()), cap);
  return out;
}

Nfa project(const Nfa& x, std::span<const std::size_t> keep, const StateCap& cap) {
  const auto& from_alphabet = x.alphabet();
  if (keep.empty() || keep.size() > from_alphabet.tracks()) throw InputError("project: malformed track list");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= from_alphabet.tracks()) throw InputError("project: track index out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (keep[j] == keep[i]) throw InputError("project: repeated track index");
  }
  ConvolutionAlphabet to_alphabet(from_alphabet.base(), keep.size());

  std::vector<std::int64_t> mapped(from_alphabet.size(), -1);  // -1: all kept tracks are pad
  std::vector<std::size_t> comps(keep.size());
  for (Letter l = 0; l < from_alphabet.size(); ++l) {
    bool all_pad = true;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      comps[i] = from_alphabet.component(l, keep[i]);
      if (comps[i] != to_alphabet.pad()) all_pad = false;
    }
    if (!all_pad) mapped[l] = to_alphabet.letter(comps);
  }

  Nfa letters(to_alphabet);
  for (State s = 0; s < x.state_count(); ++s) letters.add_state(x.is_initial(s), x.is_accepting(s));
  std::vector<std::vector<State>> epsilon(x.state_count());
  for (State s = 0; s < x.state_count(); ++s) {
    std::vector<Transition> moved;
    for (const auto& t : x.transitions(s)) {
      if (mapped[t.letter] < 0) {
        epsilon[s].push_back(t.target);
      } else {
        moved.push_back({static_cast<Letter>(mapped[t.letter]), t.target});
      }
    }
    std::sort(moved.begin(), moved.end());
    moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
    for (const auto& t : moved) letters.add_transition(s, t.letter, t.target);
  }
  Nfa out = trim(remove_epsilon(letters, epsilon));
  if (keep.size() >= 2) return intersect(out, well_formed(to_alphabet.base(), keep.size()), cap);
  return out;
}

Nfa trim(const Nfa& x) {
  const auto forward = forward_reachable(x);
  const auto backward = backward_reachable(x);
  std::vector<State> renumber(x.state_count(), std::numeric_limits<State>::max());
  Nfa out(x.alphabet());
  for (State s = 0; s < x.state_count(); ++s)
    if (forward[s] && backward[s]) renumber[s] = out.add_state(x.is_initial(s), x.is_accepting(s));
  for (State s = 0; s < x.state_count(); ++s) {
    if (renumber[s] == std::numeric_limits<State>::max()) continue;
    for (const auto& t : x.transitions(s))
      if (renumber[t.target] != std::numeric_limits<State>::max())
        out.add_transition(renumber[s], t.letter, renumber[t.target]);
  }
  return out;
}

// Breadth-first search visiting letters in increasing order. States are
// discovered in (length, letter order) order of their first word, so the
// first accepting discovery carries the least shortest word.
std::variant<Empty, Witness> is_empty(const Nfa& x) {
  constexpr auto kNone = std::numeric_limits<State>::max();
  std::vector<State> parent(x.state_count(), kNone);
  std::vector<Letter> via(x.state_count(), 0);
  std::vector<bool> seen(x.state_count(), false);
  std::deque<State> queue;
  for (auto s : x.initial_states()) {
    if (x.is_accepting(s)) return Witness{};
    seen[s] = true;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    for (const auto& t : x.transitions(s)) {
      if (seen[t.target]) continue;
      seen[t.target] = true;
      parent[t.target] = s;
      via[t.target] = t.letter;
      if (x.is_accepting(t.target)) {
        std::vector<Letter> word;
        for (State c = t.target; parent[c] != kNone; c = parent[c]) word.push_back(via[c]);
        std::reverse(word.begin(), word.end());
        return Witness{std::move(word)};
      }
      queue.push_back(t.target);
    }
  }
  return Empty{};
}

bool accepts_infinitely_many(const Nfa& x) { return has_cycle(trim(x)); }

std::uint64_t count_words(const Nfa& x, const StateCap& cap) {
  const Nfa useful = trim(x);
  if (has_cycle(useful)) throw InputError("count_words: the language is infinite");
  if (useful.state_count() == 0) return 0;
  const Nfa dfa = determinize(useful, cap);

  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  // Subsets of useful states are useful and acyclic, so states can be
  // counted in reverse discovery order of a post-order walk.
  std::vector<std::uint64_t> count(dfa.state_count(), 0);
  std::vector<bool> done(dfa.state_count(), false);
  std::vector<std::pair<State, std::size_t>> stack;
  for (auto root : dfa.initial_states()) {
    if (done[root]) continue;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [s, next] = stack.back();
      const auto& ts = dfa.transitions(s);
      if (next < ts.size()) {
        auto target = ts[next++].target;
        if (!done[target]) stack.push_back({target, 0});
        continue;
      }
      std::uint64_t total = dfa.is_accepting(s) ? 1 : 0;
      for (const auto& t : ts) total = add(total, count[t.target]);
      count[s] = total;
      done[s] = true;
      stack.pop_back();
    }
  }
  std::uint64_t total = 0;
  for (auto root : dfa.initial_states()) total = add(total, count[root]);
  return total;
}

}  // namespace lexdense
