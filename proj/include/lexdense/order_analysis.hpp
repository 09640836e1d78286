#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lexdense/alphabet.hpp"
#include "lexdense/grammar.hpp"
#include "lexdense/nfa.hpp"
#include "lexdense/pcp.hpp"
#include "lexdense/reduction.hpp"

namespace lexdense {

// ---------------------------------------------------------------------------
// Exact decisions for regular languages (right-linear grammars).

struct Dense {};
struct NotDense {
  Word lower;
  Word upper;
};
struct TooFewElements {};
using DensityVerdict = std::variant<Dense, NotDense, TooFewElements>;

struct Endpoints {
  std::optional<Word> least;
  std::optional<Word> greatest;
};

struct Cardinality {
  enum class Kind { empty, finite, infinite };
  Kind kind = Kind::empty;
  std::uint64_t count = 0;  // meaningful for finite
};

enum class OrderTypeKind { finite, eta, one_plus_eta, eta_plus_one, one_plus_eta_plus_one, other };

struct OrderType {
  OrderTypeKind kind = OrderTypeKind::other;
  std::uint64_t count = 0;  // meaningful for finite

  bool operator==(const OrderType&) const = default;
};

struct OrderReport {
  Cardinality cardinality;
  DensityVerdict dense;
  std::optional<Word> least;
  std::optional<Word> greatest;
  OrderType order_type;
};

/// Decides density exactly: builds the relation of language pairs u < v, the
/// projection of the three-track relation u < w < v with w in L, and checks
/// that the pairs with no such w form an empty relation. A non-dense verdict
/// carries the shortest adjacent pair. Throws InputError if the grammar is not
/// right-linear, ResourceLimitError if a construction exceeds the state cap.
DensityVerdict decide_dense_regular(const Grammar& grammar, const StateCap& cap = {});

Endpoints decide_endpoints_regular(const Grammar& grammar, const StateCap& cap = {});

/// Finite orders are classified by size; dense ones by their endpoints into
/// one of the four countable dense order types; everything else is "other".
OrderReport classify_regular_order_type(const Grammar& grammar, const StateCap& cap = {});

std::string to_string(const OrderType& type);
std::string to_string(const Cardinality& cardinality);
/// One `key=value` per line: cardinality, dense, least, greatest, order_type, then witness lines.
std::string format_report(const OrderReport& report);

// ---------------------------------------------------------------------------
// Constructive probes of the reduction grammars.

struct SolutionDetected {
  Solution solution;
};
using MiddleResult = std::variant<Word, SolutionDetected>;

/// Finds a language word strictly between u < v by case analysis on the
/// letters where they first differ, or, when they differ in cent/dollar,
/// extracts the PCP solution that makes them adjacent. Every returned word is
/// verified for membership and order; a failed verification throws
/// InternalError. Throws InputError when u, v are not language words with u < v.
MiddleResult middle_witness(const ReductionArtifacts& reduction, const Word& u, const Word& v);

/// Reusable form of middle_witness that compiles the recognizer once.
class MiddleFinder {
 public:
  explicit MiddleFinder(const ReductionArtifacts& reduction);
  ~MiddleFinder();
  MiddleFinder(MiddleFinder&&) noexcept;

  MiddleResult operator()(const Word& u, const Word& v) const;

 private:
  struct Impl;
  std::unique_ptr<const Impl> impl_;
};

enum class PairOutcome { middle, solution_detected, unresolved };

struct PairProbe {
  std::size_t index;  // the pair is (window word index, window word index + 1)
  PairOutcome outcome;
  Word middle;                      // for PairOutcome::middle
  std::optional<Solution> solution;  // for PairOutcome::solution_detected
};

struct ProbeOptions {
  /// Without a reduction, middles are searched among words up to max_length + search_slack.
  std::size_t search_slack = 2;
  EnumerationLimits limits;
};

struct DensityProbeReport {
  WordWindow window;
  std::size_t search_length;
  bool constructive;
  std::vector<PairProbe> pairs;
  std::size_t middles_found = 0;
  std::size_t solutions_detected = 0;
  std::size_t unresolved = 0;

  bool too_few_elements() const { return window.size() < 2; }
};

/// Walks every consecutive pair of the sorted window of words up to
/// `max_length`. With a reduction, each pair gets middle_witness; without,
/// a middle is searched in a slightly longer window and pairs with none are
/// reported unresolved. Never claims non-density from window evidence.
DensityProbeReport probe_density_cfl(const Grammar& grammar, std::size_t max_length,
                                     const ReductionArtifacts* reduction = nullptr, const ProbeOptions& options = {});

std::string format_probe_report(const DensityProbeReport& report);

}  // namespace lexdense
