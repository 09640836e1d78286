#include <doctest.h>

#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "lexdense/errors.hpp"
#include "lexdense/lex_order.hpp"
#include "lexdense/order_analysis.hpp"
#include "oracles.hpp"

using namespace lexdense;

namespace {

Grammar fixture_grammar(const std::string& name) {
  std::ifstream in(std::string(LEXDENSE_FIXTURES) + "/" + name);
  REQUIRE(in);
  std::stringstream text;
  text << in.rdbuf();
  return parse_grammar(text.str());
}

// Single-block grammar Q_j over the n=1 alphabet.
Grammar q_j(std::size_t j) {
  const auto d = "d" + std::to_string(j) + ".";
  return corpus::grammar("alphabet: 1 d1.0 d1.1 d1.2 a d2.0 d2.1 d2.2 b d3.0 d3.1 d3.2 cent dollar\nstart: D\nD -> " + d +
                         "0 D | " + d + "2 D | " + d + "1\n");
}

bool has_middle(const WordWindow& window, const Word& u, const Word& v) {
  const auto& a = window.alphabet();
  const auto lo = a.pack(u);
  const auto hi = a.pack(v);
  auto it = std::upper_bound(window.packed().begin(), window.packed().end(), lo);
  return it != window.packed().end() && *it < hi;
}

OrderType eta() { return {OrderTypeKind::eta, 0}; }

}  // namespace

TEST_SUITE("order_analysis") {

TEST_CASE("decide_dense_regular examples") {
  CHECK(std::holds_alternative<Dense>(decide_dense_regular(corpus::comparison())));
  CHECK(std::holds_alternative<Dense>(decide_dense_regular(corpus::q_block())));
  const auto descending = decide_dense_regular(corpus::descending());
  REQUIRE(std::holds_alternative<NotDense>(descending));
  CHECK(std::get<NotDense>(descending).lower == Word{"a", "b"});
  CHECK(std::get<NotDense>(descending).upper == Word{"b"});
  // a*b: nothing strictly between ab and b among words up to length 6
  CHECK_FALSE(has_middle(enumerate_up_to_length(corpus::descending(), 6), {"a", "b"}, {"b"}));

  CHECK(std::holds_alternative<TooFewElements>(decide_dense_regular(corpus::grammar("alphabet: a\nstart: S\nS -> a\n"))));
  CHECK(std::holds_alternative<TooFewElements>(decide_dense_regular(trim(corpus::grammar("alphabet: a\nstart: S\nS -> a S\n")))));
  CHECK_THROWS_AS(decide_dense_regular(corpus::balanced()), InputError);
}

TEST_CASE("decide_endpoints_regular examples") {
  const auto descending = decide_endpoints_regular(corpus::descending());
  CHECK_FALSE(descending.least.has_value());
  CHECK(descending.greatest == Word{"b"});
  const auto comparison = decide_endpoints_regular(corpus::comparison());
  CHECK_FALSE(comparison.least.has_value());
  CHECK_FALSE(comparison.greatest.has_value());
  const auto two = decide_endpoints_regular(corpus::two_letters());
  CHECK(two.least == Word{"a"});
  CHECK(two.greatest == Word{"b"});
  const auto unit = decide_endpoints_regular(corpus::one_plus_eta());
  CHECK(unit.least == Word{"0"});
  CHECK_FALSE(unit.greatest.has_value());
}

TEST_CASE("classify_regular_order_type examples") {
  CHECK(classify_regular_order_type(corpus::comparison()).order_type == eta());
  CHECK(classify_regular_order_type(corpus::one_plus_eta()).order_type == OrderType{OrderTypeKind::one_plus_eta, 0});
  CHECK(classify_regular_order_type(corpus::descending()).order_type.kind == OrderTypeKind::other);
  CHECK(classify_regular_order_type(corpus::nonprefix()).order_type == OrderType{OrderTypeKind::finite, 2});
  CHECK(classify_regular_order_type(corpus::q_block()).order_type == eta());
  const auto reversed = corpus::grammar("alphabet: 0 1 2\nstart: S\nS -> T | 2\nT -> 0 0 T | 1 1 T | 0 1\n");
  CHECK(classify_regular_order_type(reversed).order_type == OrderType{OrderTypeKind::eta_plus_one, 0});
  const auto both = corpus::grammar("alphabet: 0 1\nstart: S\nS -> 0 | 0 T | 1\nT -> 0 0 T | 1 1 T | 0 1\n");
  CHECK(classify_regular_order_type(both).order_type == OrderType{OrderTypeKind::one_plus_eta_plus_one, 0});

  CHECK(to_string(eta()) == "eta");
  CHECK(to_string(OrderType{OrderTypeKind::finite, 3}) == "finite(3)");

  const auto report = format_report(classify_regular_order_type(corpus::descending()));
  CHECK(report.find("dense=no\n") != std::string::npos);
  CHECK(report.find("greatest=b\n") != std::string::npos);
  CHECK(report.find("adjacent_lower=a b\n") != std::string::npos);
}

TEST_CASE("density verdicts agree with window evidence") {
  for (const auto& g : corpus::right_linear()) {
    const auto verdict = decide_dense_regular(g);
    const auto small = enumerate_up_to_length(g, 4);
    const auto large = enumerate_up_to_length(g, 10);
    if (std::holds_alternative<Dense>(verdict)) {
      for (std::size_t i = 0; i + 1 < small.size(); ++i) REQUIRE(has_middle(large, small.word(i), small.word(i + 1)));
    } else if (const auto* gap = std::get_if<NotDense>(&verdict)) {
      REQUIRE(recognize(g, gap->lower));
      REQUIRE(recognize(g, gap->upper));
      REQUIRE(oracle::lex_less(gap->lower, gap->upper, g.alphabet().tokens()));
      const auto bound = std::max(gap->lower.size(), gap->upper.size()) + 4;
      REQUIRE_FALSE(has_middle(enumerate_up_to_length(g, bound), gap->lower, gap->upper));
    } else {
      REQUIRE(large.size() < 2);
    }
  }
}

TEST_CASE("dense building blocks of the reduction") {
  for (std::size_t j = 1; j <= 3; ++j) CHECK(classify_regular_order_type(q_j(j)).order_type == eta());
  CHECK(classify_regular_order_type(fixture_grammar("l_prime_n1.grammar")).order_type == eta());
  CHECK(classify_regular_order_type(fixture_grammar("q_union_n1.grammar")).order_type == eta());
}

TEST_CASE("order type survives binary coding") {
  for (const auto& g : corpus::right_linear()) {
    const auto encoded = encode_grammar(g, binary_code(g.alphabet()));
    CHECK(classify_regular_order_type(g).order_type == classify_regular_order_type(encoded).order_type);
  }
}

TEST_CASE("middle_witness examples") {
  const auto u = build_reduction_grammar(corpus::unsolvable());
  const auto z = middle_witness(u, {"1", "a", "b", "dollar"}, {"1", "b", "a", "cent"});
  REQUIRE(std::holds_alternative<Word>(z));
  CHECK(std::get<Word>(z) == Word{"1", "d2.1"});
  const auto block = middle_witness(u, {"d1.1"}, {"a", "d3.1"});
  REQUIRE(std::holds_alternative<Word>(block));
  CHECK(std::get<Word>(block) == Word{"d1.2", "d1.1"});

  const auto s = build_reduction_grammar(corpus::solvable());
  const auto gap = gap_witness(s, Solution{{1, 2}});
  const auto found = middle_witness(s, gap.u_alpha, gap.u_beta);
  REQUIRE(std::holds_alternative<SolutionDetected>(found));
  CHECK(std::get<SolutionDetected>(found).solution == Solution{{1, 2}});
  CHECK(verify_solution(s.instance, std::get<SolutionDetected>(found).solution));

  CHECK_THROWS_AS(middle_witness(u, {"1", "b", "a", "cent"}, {"1", "a", "b", "dollar"}), InputError);
  CHECK_THROWS_AS(middle_witness(u, {"1", "a", "b", "cent"}, {"d1.1"}), InputError);
}

TEST_CASE("middle_witness on every consecutive pair up to length 6") {
  const auto r = build_reduction_grammar(corpus::unsolvable());
  const MiddleFinder find(r);
  const auto window = enumerate_up_to_length(r.grammar, 6);
  REQUIRE(window.size() > 100);
  for (std::size_t i = 0; i + 1 < window.size(); ++i) {
    const auto u = window.word(i), v = window.word(i + 1);
    const auto z = find(u, v);
    REQUIRE(std::holds_alternative<Word>(z));
    const auto& w = std::get<Word>(z);
    REQUIRE(recognize(r.grammar, w));
    REQUIRE(oracle::lex_less(u, w, r.delta.tokens()));
    REQUIRE(oracle::lex_less(w, v, r.delta.tokens()));
  }
}

TEST_CASE("probe_density_cfl") {
  const auto u = build_reduction_grammar(corpus::unsolvable());
  const auto dense = probe_density_cfl(u.grammar, 5, &u);
  CHECK(dense.constructive);
  CHECK(dense.solutions_detected == 0);
  CHECK(dense.unresolved == 0);
  CHECK(dense.middles_found == dense.window.size() - 1);
  CHECK(dense.pairs.size() == dense.window.size() - 1);

  const auto s = build_reduction_grammar(corpus::solvable());
  const auto gap = probe_density_cfl(s.grammar, 8, &s);
  CHECK(gap.solutions_detected >= 1);
  for (const auto& p : gap.pairs)
    if (p.outcome == PairOutcome::solution_detected) {
      REQUIRE(p.solution.has_value());
      CHECK(verify_solution(s.instance, *p.solution));
    }

  const auto lonely = probe_density_cfl(corpus::grammar("alphabet: a\nstart: S\nS -> a\n"), 4);
  CHECK(lonely.too_few_elements());
  CHECK(format_probe_report(lonely).find("too few elements in window") != std::string::npos);

  // Without a reduction: middles come from a longer window, and a pair without one stays unresolved.
  const auto plain = probe_density_cfl(corpus::comparison(), 4);
  CHECK_FALSE(plain.constructive);
  CHECK(plain.search_length == 6);
  CHECK(plain.middles_found + plain.unresolved == plain.pairs.size());
  CHECK(plain.solutions_detected == 0);
  const auto finite = probe_density_cfl(corpus::two_letters(), 3);
  CHECK(finite.unresolved == 1);

  CHECK_THROWS_AS(probe_density_cfl(u.grammar, 4, &s), InputError);
}

TEST_CASE("probe with a reduction agrees with window search") {
  const auto r = build_reduction_grammar(corpus::unsolvable());
  const auto report = probe_density_cfl(r.grammar, 4, &r);
  const auto wide = enumerate_up_to_length(r.grammar, 8);
  for (const auto& p : report.pairs) {
    REQUIRE(p.outcome == PairOutcome::middle);
    if (p.middle.size() <= 8) REQUIRE(wide.contains(r.delta.pack(p.middle)));
  }
}

}  // TEST_SUITE
