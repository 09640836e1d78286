#include <algorithm>

#include "lexdense/errors.hpp"
#include "lexdense/lex_order.hpp"
#include "lexdense/order_analysis.hpp"

namespace lexdense {
namespace {

Word concat(Word left, const Word& right) {
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace

struct MiddleFinder::Impl {
  ReductionArtifacts reduction;
  Recognizer recognizer;

  // Least word of Q_j strictly above `lower` and below `upper`, by iterative
  // deepening over the length bound. Q_j is dense, so some bound succeeds.
  Word middle_in_block(std::size_t j, const Word& lower, const Word& upper) const {
    const auto& delta = reduction.delta;
    const auto lo = delta.pack(lower);
    const auto hi = delta.pack(upper);
    const char d0 = to_letter_byte(delta.rank(reduction.d(j, 0)));
    const char d1 = to_letter_byte(delta.rank(reduction.d(j, 1)));
    const char d2 = to_letter_byte(delta.rank(reduction.d(j, 2)));
    constexpr std::size_t kMaxBound = 24;

    for (std::size_t bound = std::max(lower.size(), upper.size()) + 2; bound <= kMaxBound; bound *= 2) {
      std::optional<PackedWord> best;
      // Words {d0, d2}^k d1 for k < bound, as binary counters over {d0, d2}.
      for (std::size_t k = 0; k < bound; ++k) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
          PackedWord x(k + 1, d1);
          for (std::size_t i = 0; i < k; ++i) x[i] = (bits >> (k - 1 - i) & 1U) ? d2 : d0;
          if (lo < x && x < hi && (!best || x < *best)) best = std::move(x);
        }
      }
      if (best) return delta.unpack(*best);
    }
    throw InternalError("no middle found inside Q_" + std::to_string(j) + " between '" + format_word(lower) +
                        "' and '" + format_word(upper) + "'");
  }

  MiddleResult find(const Word& u, const Word& v) const {
    const auto& r = reduction;
    if (!recognizer.accepts(u) || !recognizer.accepts(v))
      throw InputError("middle_witness: both words must belong to the language");
    if (lex_compare(u, v, r.delta) != std::strong_ordering::less)
      throw InputError("middle_witness: expected u < v");

    auto split = first_difference(u, v, r.delta);
    if (std::holds_alternative<PrefixRelated>(split))
      throw InternalError("middle_witness: '" + format_word(u) + "' is a proper prefix of '" + format_word(v) +
                          "' in a prefix language");
    const auto& diff = std::get<FirstDifference>(split);
    const auto& c = diff.lower_letter;
    const auto& d = diff.upper_letter;

    if (c == r.cent() && d == r.dollar()) {
      Solution s;
      for (const auto& letter : diff.common) {
        auto i = r.c_index(letter);
        if (!i || *i > r.n()) break;
        s.indices.push_back(*i);
      }
      if (s.indices.empty() || !verify_solution(r.instance, s))
        throw InternalError("middle_witness: cent/dollar gap without an extractable solution");
      return SolutionDetected{std::move(s)};
    }

    const Word lower_tail = concat({c}, diff.lower_rest);
    const Word upper_tail = concat({d}, diff.upper_rest);
    const auto c_block = r.d_block(c);
    const auto d_block = r.d_block(d);
    Word tail;
    if (c_block && d_block == c_block) {
      tail = middle_in_block(*c_block, lower_tail, upper_tail);
    } else if (c_block) {
      // lower_tail = y·d<i>.1 in Q_i; y·d<i>.2·d<i>.1 is above it and still below d.
      tail = Word(lower_tail.begin(), lower_tail.end() - 1);
      tail.push_back(r.d(*c_block, 2));
      tail.push_back(r.d(*c_block, 1));
    } else if (d_block) {
      tail = Word(upper_tail.begin(), upper_tail.end() - 1);
      tail.push_back(r.d(*d_block, 0));
      tail.push_back(r.d(*d_block, 1));
    } else {
      const auto i = r.c_index(c);
      if (!i || *i > r.n() + 2) throw InternalError("middle_witness: unexpected first difference at '" + c + "'");
      tail = {r.d(*i, 1)};
    }

    Word z = concat(diff.common, tail);
    if (!recognizer.accepts(z) || lex_compare(u, z, r.delta) != std::strong_ordering::less ||
        lex_compare(z, v, r.delta) != std::strong_ordering::less)
      throw InternalError("middle_witness: constructed word '" + format_word(z) + "' failed verification");
    return z;
  }
};

MiddleFinder::MiddleFinder(const ReductionArtifacts& reduction)
    : impl_(std::make_unique<const Impl>(Impl{reduction, Recognizer(reduction.grammar)})) {}
MiddleFinder::~MiddleFinder() = default;
MiddleFinder::MiddleFinder(MiddleFinder&&) noexcept = default;

MiddleResult MiddleFinder::operator()(const Word& u, const Word& v) const { return impl_->find(u, v); }

MiddleResult middle_witness(const ReductionArtifacts& reduction, const Word& u, const Word& v) {
  return MiddleFinder(reduction)(u, v);
}

DensityProbeReport probe_density_cfl(const Grammar& grammar, std::size_t max_length,
                                     const ReductionArtifacts* reduction, const ProbeOptions& options) {
  if (reduction && !(reduction->grammar == grammar))
    throw InputError("probe_density_cfl: grammar differs from the reduction grammar of the instance");

  DensityProbeReport report{enumerate_up_to_length(grammar, max_length, options.limits),
                            reduction ? max_length : max_length + options.search_slack,
                            reduction != nullptr,
                            {}};
  const auto& window = report.window;
  if (window.size() < 2) return report;

  std::optional<MiddleFinder> finder;
  std::optional<WordWindow> search;
  if (reduction) {
    finder.emplace(*reduction);
  } else {
    search.emplace(enumerate_up_to_length(grammar, report.search_length, options.limits));
  }

  report.pairs.reserve(window.size() - 1);
  for (std::size_t i = 0; i + 1 < window.size(); ++i) {
    PairProbe probe{i, PairOutcome::unresolved, {}, std::nullopt};
    if (finder) {
      auto result = (*finder)(window.word(i), window.word(i + 1));
      if (auto* z = std::get_if<Word>(&result)) {
        probe.outcome = PairOutcome::middle;
        probe.middle = std::move(*z);
      } else {
        probe.outcome = PairOutcome::solution_detected;
        probe.solution = std::get<SolutionDetected>(result).solution;
      }
    } else {
      const auto& words = search->packed();
      auto it = std::upper_bound(words.begin(), words.end(), window.packed()[i]);
      if (it != words.end() && *it < window.packed()[i + 1]) {
        probe.outcome = PairOutcome::middle;
        probe.middle = window.alphabet().unpack(*it);
      }
    }
    switch (probe.outcome) {
      case PairOutcome::middle: ++report.middles_found; break;
      case PairOutcome::solution_detected: ++report.solutions_detected; break;
      case PairOutcome::unresolved: ++report.unresolved; break;
    }
    report.pairs.push_back(std::move(probe));
  }
  return report;
}

std::string format_probe_report(const DensityProbeReport& report) {
  std::string out;
  out += "window_max_length=" + std::to_string(report.window.max_length()) + "\n";
  out += "window_words=" + std::to_string(report.window.size()) + "\n";
  out += std::string("mode=") + (report.constructive ? "constructive" : "bounded_search") + "\n";
  if (!report.constructive) out += "search_max_length=" + std::to_string(report.search_length) + "\n";
  if (report.too_few_elements()) {
    out += "status=too few elements in window\n";
    return out;
  }
  for (const auto& p : report.pairs) {
    out += "pair " + format_word(report.window.word(p.index)) + " | " + format_word(report.window.word(p.index + 1));
    switch (p.outcome) {
      case PairOutcome::middle: out += " => middle " + format_word(p.middle); break;
      case PairOutcome::solution_detected: out += " => solution " + format_solution(*p.solution); break;
      case PairOutcome::unresolved: out += " => inconclusive"; break;
    }
    out += "\n";
  }
  out += "middles_found=" + std::to_string(report.middles_found) + "\n";
  out += "solutions_detected=" + std::to_string(report.solutions_detected) + "\n";
  out += "unresolved=" + std::to_string(report.unresolved) + "\n";
  return out;
}

}  // namespace lexdense
