#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lexdense/alphabet.hpp"
#include "lexdense/grammar.hpp"
#include "lexdense/pcp.hpp"

namespace lexdense {

/// Letters c_1 < ... < c_{n+4} are "1".."n", "a", "b", "cent", "dollar"; for
/// j = 1..n+2 the block d<j>.0 < d<j>.1 < d<j>.2 sits between c_j and c_{j+1}.
/// Nothing lies between "cent" and "dollar".
OrderedAlphabet build_delta_alphabet(std::size_t n);

/// The prefix grammar compiled from a PCP instance, together with the
/// letter bookkeeping the witness constructions need.
///
/// Its language is the union of
///   L_alpha = { i_1..i_m · rev(alpha_{i_1}..alpha_{i_m}) · cent },
///   L_beta  = { i_1..i_m · rev(beta_{i_1}..beta_{i_m}) · dollar },
///   L_j     = {1..n, a, b}* · Q_j  with  Q_j = {d<j>.0, d<j>.2}* · d<j>.1,
/// and it is densely ordered exactly when the instance has no solution.
struct ReductionArtifacts {
  PcpInstance instance;
  OrderedAlphabet delta;
  Grammar grammar;
  std::vector<std::string> c_letters;                 // c_1..c_{n+4}
  std::vector<std::array<std::string, 3>> d_letters;  // [j-1][k] = d<j>.k

  std::size_t n() const noexcept { return instance.size(); }
  const std::string& cent() const { return c_letters[n() + 2]; }
  const std::string& dollar() const { return c_letters[n() + 3]; }
  const std::string& d(std::size_t j, std::size_t k) const { return d_letters.at(j - 1).at(k); }

  /// j with letter == c_j.
  std::optional<std::size_t> c_index(const std::string& letter) const;
  /// j with letter in {d<j>.0, d<j>.1, d<j>.2}.
  std::optional<std::size_t> d_block(const std::string& letter) const;
  /// Token of pair index i, i.e. c_i for 1 <= i <= n.
  const std::string& index_letter(std::size_t i) const { return c_letters.at(i - 1); }
};

/// S -> A cent | B dollar | C;  A -> i A rev(alpha_i) | i rev(alpha_i);
/// B -> i B rev(beta_i) | i rev(beta_i);  C -> i C | a C | b C | D_1 | .. | D_{n+2};
/// D_j -> d<j>.0 D_j | d<j>.2 D_j | d<j>.1.  9n + 13 productions in all.
ReductionArtifacts build_reduction_grammar(const PcpInstance& instance);

struct GapWitness {
  Word u_alpha;
  Word u_beta;
};

/// For a solution i_1..i_m with u = rev(alpha_{i_1}..alpha_{i_m}), the pair
/// i_1..i_m·u·cent < i_1..i_m·u·dollar of language words. Throws InputError
/// if `solution` does not solve the instance.
GapWitness gap_witness(const ReductionArtifacts& reduction, const Solution& solution);

/// Machine-checked premises for "no language word lies strictly between w·cent and w·dollar".
struct AdjacencyCertificate {
  std::size_t max_length;   // window of the bounded checks
  std::size_t window_size;  // words enumerated
  std::vector<std::string> premises;
  std::string argument;
};

struct Refuted {
  std::string premise;  // "P1", "P2" or "P3"
  std::vector<Word> evidence;
};

using AdjacencyVerdict = std::variant<AdjacencyCertificate, Refuted>;

/// P1: no letter strictly between cent and dollar. P2: the window of words of
/// length <= max_length is prefix-free (bounded evidence only). P3: no window
/// word lies strictly between the pair. Throws InputError unless the pair has
/// the shape w·cent, w·dollar and both words belong to the language.
AdjacencyVerdict certify_adjacent(const Grammar& grammar, const Word& lower, const Word& upper, std::size_t max_length,
                                  const EnumerationLimits& limits = {});
AdjacencyVerdict certify_adjacent(const ReductionArtifacts& reduction, const Word& lower, const Word& upper,
                                  std::size_t max_length, const EnumerationLimits& limits = {});

struct Neighbors {
  Word lower;
  Word upper;
};

/// Language words strictly below and above v, showing v is no endpoint.
/// For v in L_alpha the lower word appends index 1 and the upper word is the
/// single letter d<i_1>.1 (likewise for L_beta); for v = p·d<j>.1 they are
/// p·d<j>.0·d<j>.1 and p·d<j>.2·d<j>.1. Throws InputError if v is not in the language.
Neighbors neighbor_witnesses(const ReductionArtifacts& reduction, const Word& v);

}  // namespace lexdense
