#pragma once

#include <string>
#include <vector>

#include "lexdense/grammar.hpp"
#include "lexdense/pcp.hpp"
#include "lexdense/reduction.hpp"

namespace corpus {

inline lexdense::Grammar grammar(const std::string& text) { return lexdense::parse_grammar(text); }

inline lexdense::Grammar descending() { return grammar("alphabet: a b\nstart: S\nS -> a S | b\n"); }
inline lexdense::Grammar comparison() { return grammar("alphabet: 0 1\nstart: S\nS -> 0 0 S | 1 1 S | 0 1\n"); }
inline lexdense::Grammar nonprefix() { return grammar("alphabet: a b\nstart: S\nS -> a | a b\n"); }
inline lexdense::Grammar one_plus_eta() {
  return grammar("alphabet: 0 1\nstart: S\nS -> 0 | 0 T\nT -> 0 0 T | 1 1 T | 0 1\n");
}
inline lexdense::Grammar q_block() { return grammar("alphabet: d0 d1 d2\nstart: D\nD -> d0 D | d2 D | d1\n"); }
inline lexdense::Grammar two_letters() { return grammar("alphabet: a b\nstart: S\nS -> a | b\n"); }
// Unit cycle S -> T -> S; language b* a.
inline lexdense::Grammar unit_cycle() { return grammar("alphabet: a b\nstart: S\nS -> T | a\nT -> S | b S\n"); }
// a^k c b^k, not regular.
inline lexdense::Grammar balanced() { return grammar("alphabet: a b c\nstart: S\nS -> a S b | c\n"); }
// Useless symbols: X is non-generating, Y unreachable.
inline lexdense::Grammar with_junk() {
  return grammar("alphabet: a b c\nstart: S\nS -> a S | b | X c\nX -> a X\nY -> c\n");
}
inline lexdense::Grammar even_length() { return grammar("alphabet: a b\nstart: S\nS -> a a S | a a\n"); }

inline lexdense::PcpInstance solvable() { return lexdense::parse_pcp("ab a\nb bb\n"); }
inline lexdense::PcpInstance unsolvable() { return lexdense::parse_pcp("ab ba\n"); }

/// Small grammars; every one has an alphabet of at most three letters.
inline std::vector<lexdense::Grammar> small() {
  return {descending(), comparison(), nonprefix(), one_plus_eta(), q_block(),
          two_letters(), unit_cycle(), balanced(), with_junk(), even_length()};
}

inline std::vector<lexdense::Grammar> right_linear() {
  return {descending(), comparison(), nonprefix(), one_plus_eta(), q_block(), two_letters(), unit_cycle(), even_length()};
}

}  // namespace corpus
