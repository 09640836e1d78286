// Acceptance criteria: one line per criterion, PASS only if every check holds
// within the time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "corpus.hpp"
#include "lexdense/lex_order.hpp"
#include "lexdense/nfa.hpp"
#include "lexdense/order_analysis.hpp"
#include "lexdense/reduction.hpp"
#include "oracles.hpp"

using namespace lexdense;

namespace {

struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& what) {
  if (!condition) throw Failed(what);
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void()> body;
};

Word w(std::initializer_list<const char*> tokens) { return Word(tokens.begin(), tokens.end()); }

// The sub-grammar of a reduction rooted at `start` (C for L', D<j> for Q_j).
Grammar sub_grammar(const ReductionArtifacts& r, const std::string& start) {
  std::set<std::string> reach{start};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& p : r.grammar.productions())
      if (reach.contains(p.lhs))
        for (const auto& s : p.rhs)
          if (!r.grammar.is_terminal(s) && reach.insert(s).second) grew = true;
  }
  std::vector<Production> kept;
  for (const auto& p : r.grammar.productions())
    if (reach.contains(p.lhs)) kept.push_back(p);
  return Grammar(r.delta, start, kept);
}

bool is_eta(const OrderReport& report) {
  return report.order_type.kind == OrderTypeKind::eta && std::holds_alternative<Dense>(report.dense) &&
         !report.least && !report.greatest;
}

void reduction_shape() {
  const std::vector<std::string> words{"a", "b", "ab", "ba", "aab", "bba"};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(words[i % words.size()], words[(i + 3) % words.size()]);
    const auto r = build_reduction_grammar(PcpInstance(pairs));
    const auto& delta = r.delta;
    expect(delta.size() == 4 * n + 10, "alphabet size at n=" + std::to_string(n));
    expect(r.grammar.productions().size() == 9 * n + 13, "production count at n=" + std::to_string(n));
    std::vector<std::string> chain;
    for (std::size_t j = 1; j <= n + 2; ++j) {
      const std::string c = j <= n ? std::to_string(j) : (j == n + 1 ? "a" : "b");
      const std::string d = "d" + std::to_string(j) + ".";
      for (const auto& t : {c, d + "0", d + "1", d + "2"}) chain.push_back(t);
    }
    chain.push_back("cent");
    chain.push_back("dollar");
    expect(chain.size() == delta.size(), "chain length at n=" + std::to_string(n));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      expect(delta.rank(chain[i]) + 1 == delta.rank(chain[i + 1]), "order chain at " + chain[i]);
    expect(delta.rank("dollar") == delta.rank("cent") + 1, "token between cent and dollar");
  }
}

void forward_direction() {
  const auto instance = corpus::solvable();
  const auto solved = brute_force_solve(instance, 4);
  expect(std::holds_alternative<Solution>(solved), "no solution found");
  const auto solution = std::get<Solution>(solved);
  expect(solution.indices == std::vector<std::size_t>{1, 2}, "solution is not (1,2)");
  const auto r = build_reduction_grammar(instance);
  const auto gap = gap_witness(r, solution);
  expect(gap.u_alpha == w({"1", "2", "b", "b", "a", "cent"}), "u_alpha");
  expect(gap.u_beta == w({"1", "2", "b", "b", "a", "dollar"}), "u_beta");
  expect(recognize(r.grammar, gap.u_alpha) && recognize(r.grammar, gap.u_beta), "gap words not recognized");
  const auto verdict = certify_adjacent(r, gap.u_alpha, gap.u_beta, 10);
  expect(std::holds_alternative<AdjacencyCertificate>(verdict), "certify_adjacent did not certify at length 10");
}

void reverse_direction() {
  const auto instance = corpus::unsolvable();
  expect(std::holds_alternative<NoneFound>(brute_force_solve(instance, 8)), "unexpected solution");
  const auto r = build_reduction_grammar(instance);
  const auto report = probe_density_cfl(r.grammar, 5, &r);
  expect(report.constructive, "probe was not constructive");
  expect(report.window.size() >= 2, "window too small");
  expect(report.pairs.size() == report.window.size() - 1, "not every consecutive pair probed");
  expect(report.solutions_detected == 0 && report.unresolved == 0, "pair without a middle");
  const Recognizer member(r.grammar);
  const auto& order = r.delta.tokens();
  for (const auto& p : report.pairs) {
    expect(p.outcome == PairOutcome::middle, "pair without a middle");
    const auto lo = report.window.word(p.index), hi = report.window.word(p.index + 1);
    expect(member.accepts(p.middle), "middle not in the language");
    expect(oracle::lex_less(lo, p.middle, order) && oracle::lex_less(p.middle, hi, order), "middle out of order");
  }
}

void solution_extraction() {
  const auto r = build_reduction_grammar(corpus::solvable());
  const auto result = middle_witness(r, w({"1", "2", "b", "b", "a", "cent"}), w({"1", "2", "b", "b", "a", "dollar"}));
  expect(std::holds_alternative<SolutionDetected>(result), "no solution detected");
  const auto& s = std::get<SolutionDetected>(result).solution;
  expect(s.indices == std::vector<std::size_t>{1, 2}, "extracted solution is not (1,2)");
  expect(verify_solution(r.instance, s), "extracted solution does not verify");
}

void comparison_language() {
  const auto g = corpus::comparison();
  expect(is_eta(classify_regular_order_type(g)), "comparison language is not eta");
  const auto encoded = encode_grammar(g, binary_code(g.alphabet()));
  expect(is_eta(classify_regular_order_type(encoded)), "encoded comparison language is not eta");
}

void dense_building_blocks() {
  const auto r = build_reduction_grammar(corpus::unsolvable());
  for (std::size_t j = 1; j <= 3; ++j)
    expect(is_eta(classify_regular_order_type(sub_grammar(r, "D" + std::to_string(j)))), "Q_" + std::to_string(j));
  expect(is_eta(classify_regular_order_type(sub_grammar(r, "C"))), "union of the L_j");
}

void no_endpoints() {
  const auto r = build_reduction_grammar(corpus::unsolvable());
  const auto window = enumerate_up_to_length(r.grammar, 5);
  expect(!window.empty(), "empty window");
  const Recognizer member(r.grammar);
  const auto& order = r.delta.tokens();
  for (const auto& v : window.words()) {
    const auto nb = neighbor_witnesses(r, v);
    expect(member.accepts(nb.lower) && member.accepts(nb.upper), "neighbor not in the language");
    expect(oracle::lex_less(nb.lower, v, order) && oracle::lex_less(v, nb.upper, order), "neighbor out of order");
  }
}

void order_axioms() {
  const std::vector<std::string> three{"x", "y", "z"};
  const OrderedAlphabet a3(three);
  const auto words = oracle::all_words(three, 3);
  const auto n = words.size();
  std::vector<std::strong_ordering> cmp(n * n, std::strong_ordering::equal);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cmp[i * n + j] = lex_compare(words[i], words[j], a3);
      expect((cmp[i * n + j] == std::strong_ordering::equal) == (i == j), "trichotomy");
      expect((cmp[i * n + j] == std::strong_ordering::less) == oracle::lex_less(words[i], words[j], three), "definition");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (cmp[i * n + j] == std::strong_ordering::less && cmp[j * n + k] == std::strong_ordering::less)
          expect(cmp[i * n + k] == std::strong_ordering::less, "transitivity");

  const OrderedAlphabet ab({"a", "b"});
  const auto lex = lex_relation(ab);
  const auto pairs = oracle::all_words({"a", "b"}, 3);
  for (const auto& u : pairs)
    for (const auto& v : pairs) {
      const std::vector<Word> conv{u, v};
      expect(lex.accepts_words(conv) == (lex_compare(u, v, ab) == std::strong_ordering::less), "lex_relation");
    }

  std::map<std::vector<std::string>, std::vector<Grammar>> by_alphabet;
  for (const auto& g : corpus::right_linear()) by_alphabet[g.alphabet().tokens()].push_back(g);
  for (const auto& [letters, grammars] : by_alphabet) {
    const auto all = oracle::all_words(letters, 5);
    for (const auto& x : grammars) {
      const auto lx = oracle::derivable_words(x, 5);
      const auto nx = nfa_from_right_linear(x);
      const auto cx = complement(nx);
      const auto dx = determinize(nx);
      for (const auto& word : all) {
        expect(nx.accepts_word(word) == lx.contains(word), "grammar automaton");
        expect(cx.accepts_word(word) != lx.contains(word), "complement");
        expect(dx.accepts_word(word) == lx.contains(word), "determinize");
      }
      for (const auto& y : grammars) {
        const auto ly = oracle::derivable_words(y, 5);
        const auto ny = nfa_from_right_linear(y);
        const auto both = intersect(nx, ny);
        const auto either = complement(intersect(cx, complement(ny)));
        const auto empty = is_empty(intersect(nx, complement(nx)));
        expect(std::holds_alternative<Empty>(empty), "x and not x");
        for (const auto& word : all) {
          expect(both.accepts_word(word) == (lx.contains(word) && ly.contains(word)), "intersection");
          expect(either.accepts_word(word) == (lx.contains(word) || ly.contains(word)), "union");
        }
      }
    }
  }
}

void binary_coding() {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t width = 0;
    while ((std::size_t{1} << width) < 4 * n + 10) ++width;
    expect(binary_code(build_delta_alphabet(n)).width() == width, "width at n=" + std::to_string(n));
  }
  expect(binary_code(build_delta_alphabet(2)).width() == 5, "width at n=2");

  const auto delta = build_delta_alphabet(1);
  const auto coding = binary_code(delta);
  const auto words = oracle::all_words(delta.tokens(), 3);
  std::vector<PackedWord> plain, coded;
  for (const auto& word : words) {
    plain.push_back(delta.pack(word));
    coded.push_back(BinaryCoding::target().pack(coding.encode(word)));
  }
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      expect((plain[i] <=> plain[j]) == (coded[i] <=> coded[j]), "coding is not an order isomorphism");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "reduction shape for n = 1..6", 1, reduction_shape},
      {2, "solvable instance yields a certified adjacent pair", 30, forward_direction},
      {3, "unsolvable instance: every window pair has a middle", 60, reverse_direction},
      {4, "solution extraction from the gap pair", 1, solution_extraction},
      {5, "comparison language has order type eta, also after coding", 5, comparison_language},
      {6, "dense building blocks have order type eta", 5, dense_building_blocks},
      {7, "every window word has neighbors on both sides", 30, no_endpoints},
      {8, "order axioms and automaton soundness", 60, order_axioms},
      {9, "binary coding width and order isomorphism", 30, binary_coding},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string problem;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body();
    } catch (const std::exception& e) {
      problem = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && seconds >= c.limit_seconds) problem = "time limit exceeded";
    if (!problem.empty()) ++failures;
    std::printf("%s  %d  %-58s %8.3f s / %g s%s%s\n", problem.empty() ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                c.limit_seconds, problem.empty() ? "" : "  ", problem.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
