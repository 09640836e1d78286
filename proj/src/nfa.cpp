#include <algorithm>

#include "lexdense/errors.hpp"
#include "lexdense/nfa.hpp"

namespace lexdense {

std::size_t Nfa::transition_count() const {
  std::size_t total = 0;
  for (const auto& ts : transitions_) total += ts.size();
  return total;
}

State Nfa::add_state(bool initial, bool accepting) {
  transitions_.emplace_back();
  initial_.push_back(initial);
  accepting_.push_back(accepting);
  return static_cast<State>(transitions_.size() - 1);
}

void Nfa::add_transition(State from, Letter letter, State to) {
  if (from >= state_count() || to >= state_count()) throw InputError("transition endpoint is not a state");
  if (letter >= alphabet_.size()) throw InputError("transition letter outside the alphabet");
  auto& ts = transitions_[from];
  const Transition t{letter, to};
  if (ts.empty() || ts.back() < t) {
    ts.push_back(t);
    return;
  }
  auto it = std::lower_bound(ts.begin(), ts.end(), t);
  if (it == ts.end() || *it != t) ts.insert(it, t);
}

std::vector<State> Nfa::initial_states() const {
  std::vector<State> out;
  for (State s = 0; s < state_count(); ++s)
    if (initial_[s]) out.push_back(s);
  return out;
}

bool Nfa::accepts(std::span<const Letter> word) const {
  std::vector<bool> current(initial_.begin(), initial_.end());
  for (auto letter : word) {
    std::vector<bool> next(state_count(), false);
    bool any = false;
    for (State s = 0; s < state_count(); ++s) {
      if (!current[s]) continue;
      const auto& ts = transitions_[s];
      auto it = std::lower_bound(ts.begin(), ts.end(), Transition{letter, 0});
      for (; it != ts.end() && it->letter == letter; ++it) next[it->target] = any = true;
    }
    if (!any) return false;
    current = std::move(next);
  }
  for (State s = 0; s < state_count(); ++s)
    if (current[s] && accepting_[s]) return true;
  return false;
}

bool Nfa::accepts_words(std::span<const Word> words) const { return accepts(alphabet_.convolve(words)); }

std::string dump(const Nfa& x) {
  std::string out;
  for (State s = 0; s < x.state_count(); ++s) {
    out += "state " + std::to_string(s);
    if (x.is_initial(s)) out += " initial";
    if (x.is_accepting(s)) out += " accepting";
    out += "\n";
  }
  for (State s = 0; s < x.state_count(); ++s)
    for (const auto& t : x.transitions(s))
      out += "trans " + std::to_string(s) + " " + x.alphabet().name(t.letter) + " " + std::to_string(t.target) + "\n";
  return out;
}

}  // namespace lexdense
