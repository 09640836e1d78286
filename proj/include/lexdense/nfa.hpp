#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lexdense/alphabet.hpp"
#include "lexdense/grammar.hpp"

namespace lexdense {

using Letter = std::uint32_t;
using State = std::uint32_t;

/// Letters of a synchronized reading of `tracks` words at once.
///
/// Each letter is a tuple of track components, a component being a base
/// letter rank or the pad value (== base size) once that track's word has
/// ended. The all-pad tuple is not a letter. With one track the letters are
/// exactly the base letters, with the same ranks.
///
/// Letters are numbered so that numeric order is the lexicographic order on
/// tuples (track 0 most significant, pad above every base letter).
class ConvolutionAlphabet {
 public:
  explicit ConvolutionAlphabet(OrderedAlphabet base, std::size_t tracks = 1);

  const OrderedAlphabet& base() const noexcept { return base_; }
  std::size_t tracks() const noexcept { return tracks_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t pad() const noexcept { return base_.size(); }

  std::vector<std::size_t> components(Letter letter) const;
  std::size_t component(Letter letter, std::size_t track) const;
  Letter letter(std::span<const std::size_t> components) const;
  std::string name(Letter letter) const;

  /// Letter-by-letter pairing of `words` (one per track), padding shorter ones.
  std::vector<Letter> convolve(std::span<const Word> words) const;
  /// Inverse of convolve. Throws InputError if a pad is followed by a letter on its track.
  std::vector<Word> split(std::span<const Letter> letters) const;

  bool operator==(const ConvolutionAlphabet& other) const {
    return tracks_ == other.tracks_ && base_ == other.base_;
  }

 private:
  OrderedAlphabet base_;
  std::size_t tracks_;
  std::size_t radix_;
  std::size_t size_;
};

struct Transition {
  Letter letter;
  State target;

  auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic finite automaton without ε-moves. Each state's
/// transitions are kept sorted by (letter, target) and free of duplicates.
class Nfa {
 public:
  explicit Nfa(ConvolutionAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const ConvolutionAlphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return transitions_.size(); }
  std::size_t transition_count() const;

  State add_state(bool initial = false, bool accepting = false);
  void add_transition(State from, Letter letter, State to);
  void set_initial(State s, bool value = true) { initial_.at(s) = value; }
  void set_accepting(State s, bool value = true) { accepting_.at(s) = value; }

  bool is_initial(State s) const { return initial_.at(s); }
  bool is_accepting(State s) const { return accepting_.at(s); }
  std::vector<State> initial_states() const;
  const std::vector<Transition>& transitions(State s) const { return transitions_.at(s); }

  bool accepts(std::span<const Letter> word) const;
  /// Convolves one word per track and runs the automaton on the result.
  bool accepts_words(std::span<const Word> words) const;
  bool accepts_word(const Word& word) const { return accepts_words(std::span<const Word>(&word, 1)); }

 private:
  ConvolutionAlphabet alphabet_;
  std::vector<std::vector<Transition>> transitions_;
  std::vector<bool> initial_;
  std::vector<bool> accepting_;
};

struct StateCap {
  std::size_t max_states = 1'000'000;
};

/// Automaton for L(grammar); states are the nonterminals, the intermediate
/// states spelling out multi-letter rules, and one accepting state. Throws
/// InputError for grammars that are not right-linear.
Nfa nfa_from_right_linear(const Grammar& grammar);

/// Well-formed convolutions over `tracks` tracks: once a track reads pad it keeps reading pad.
Nfa well_formed(const OrderedAlphabet& base, std::size_t tracks);

/// Accepts a convolution (well-formed or not) iff the word on track `lower`
/// is lexicographically below the word on track `upper`; other tracks are ignored.
Nfa lex_relation_on_tracks(const OrderedAlphabet& base, std::size_t tracks, std::size_t lower, std::size_t upper);

/// Well-formed two-track convolutions conv(u, v) with u < v.
Nfa lex_relation(const OrderedAlphabet& base);

/// Lifts a one-track automaton to read track `track` of a `tracks`-track convolution.
Nfa cylinder(const Nfa& plain, std::size_t tracks, std::size_t track);

/// Product construction. Throws InputError on alphabet mismatch.
Nfa intersect(const Nfa& x, const Nfa& y, const StateCap& cap = {});

/// Subset construction; the result has one initial state and at most one
/// transition per (state, letter).
Nfa determinize(const Nfa& x, const StateCap& cap = {});

/// Words (well-formed convolutions, for two or more tracks) not accepted by x.
Nfa complement(const Nfa& x, const StateCap& cap = {});

/// Keeps the listed tracks, existentially quantifying the others. Letters
/// that become all-pad are dropped and the result is re-intersected with
/// well-formedness. Throws InputError for a malformed track list.
Nfa project(const Nfa& x, std::span<const std::size_t> keep, const StateCap& cap = {});

/// Drops states that are unreachable or cannot reach acceptance.
Nfa trim(const Nfa& x);

struct Empty {};
struct Witness {
  std::vector<Letter> letters;
};

/// Empty, or a shortest accepted word, least in letter order among the shortest.
std::variant<Empty, Witness> is_empty(const Nfa& x);

/// True iff the accepted language is infinite.
bool accepts_infinitely_many(const Nfa& x);

/// Number of accepted words, saturating at UINT64_MAX. Throws InputError for infinite languages.
std::uint64_t count_words(const Nfa& x, const StateCap& cap = {});

/// Line-based dump: `state <id> [initial] [accepting]` then `trans <from> <letter> <to>`.
std::string dump(const Nfa& x);

}  // namespace lexdense
