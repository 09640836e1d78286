#include "lexdense/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lexdense/errors.hpp"
#include "lexdense/grammar.hpp"
#include "lexdense/lex_order.hpp"
#include "lexdense/order_analysis.hpp"
#include "lexdense/pcp.hpp"
#include "lexdense/reduction.hpp"

namespace lexdense::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

Grammar load_grammar(const std::string& path) { return parse_grammar(read_file(path)); }
PcpInstance load_pcp(const std::string& path) { return parse_pcp(read_file(path)); }

struct Options {
  std::string file;
  std::string pcp_file;
  std::string output;
  std::string witness_out;
  std::string solution;
  std::string u;
  std::string v;
  std::size_t max_depth = 0;
  std::size_t max_len = 0;
  bool binary = false;
};

int pcp_solve(const Options& o, std::ostream& out) {
  const auto instance = load_pcp(o.file);
  const auto result = brute_force_solve(instance, o.max_depth);
  if (const auto* s = std::get_if<Solution>(&result)) {
    out << "solution: " << format_solution(*s) << "\n";
  } else {
    out << "no solution with at most " << o.max_depth << " indices\n";
  }
  return kOk;
}

int pcp_reduce(const Options& o, std::ostream& out) {
  const auto instance = load_pcp(o.file);
  const auto reduction = build_reduction_grammar(instance);

  std::optional<GapWitness> witness;
  if (!o.solution.empty()) {
    const auto solution = parse_solution(o.solution);
    if (!verify_solution(instance, solution))
      throw InputError("indices " + format_solution(solution) + " do not solve the instance");
    witness = gap_witness(reduction, solution);
  }

  std::string text;
  if (o.binary) {
    const auto coding = binary_code(reduction.delta);
    text += "# order-preserving binary code, width " + std::to_string(coding.width()) + "\n";
    for (const auto& letter : reduction.delta.tokens()) {
      std::string bits;
      for (const auto& b : coding.code(letter)) bits += b;
      text += "# code " + letter + " " + bits + "\n";
    }
    text += serialize(encode_grammar(reduction.grammar, coding));
    if (witness) witness = GapWitness{coding.encode(witness->u_alpha), coding.encode(witness->u_beta)};
  } else {
    text = serialize(reduction.grammar);
  }
  write_file(o.output, text);
  out << "grammar: " << o.output << " (" << reduction.grammar.productions().size() << " productions, "
      << reduction.delta.size() << " letters" << (o.binary ? ", binary coded" : "") << ")\n";

  if (witness) {
    const std::string lines =
        "u_alpha: " + format_word(witness->u_alpha) + "\n" + "u_beta: " + format_word(witness->u_beta) + "\n";
    if (o.witness_out.empty()) {
      out << lines;
    } else {
      write_file(o.witness_out, lines);
      out << "witness: " << o.witness_out << "\n";
    }
  }
  return kOk;
}

int grammar_enumerate(const Options& o, std::ostream& out) {
  const auto window = enumerate_up_to_length(trim(load_grammar(o.file)), o.max_len);
  for (std::size_t i = 0; i < window.size(); ++i) out << format_word(window.word(i)) << "\n";
  return kOk;
}

int grammar_analyze(const Options& o, std::ostream& out) {
  out << format_report(classify_regular_order_type(trim(load_grammar(o.file))));
  return kOk;
}

int grammar_probe(const Options& o, std::ostream& out) {
  const auto grammar = trim(load_grammar(o.file));
  std::optional<ReductionArtifacts> reduction;
  if (!o.pcp_file.empty()) reduction = build_reduction_grammar(load_pcp(o.pcp_file));
  const auto report = probe_density_cfl(grammar, o.max_len, reduction ? &*reduction : nullptr);
  out << format_probe_report(report);
  return report.solutions_detected > 0 ? kRefuted : kOk;
}

int grammar_check_prefix(const Options& o, std::ostream& out) {
  const auto result = prefix_free_bounded(trim(load_grammar(o.file)), o.max_len);
  if (const auto* v = std::get_if<PrefixViolation>(&result)) {
    out << "prefix_free=no\n";
    out << "violation: " << format_word(v->prefix) << " | " << format_word(v->extension) << "\n";
    return kRefuted;
  }
  out << "prefix_free=yes (bounded: words of length <= " << o.max_len << ")\n";
  return kOk;
}

ReductionArtifacts matching_reduction(const Options& o) {
  const auto grammar = load_grammar(o.file);
  auto reduction = build_reduction_grammar(load_pcp(o.pcp_file));
  if (!(reduction.grammar == grammar))
    throw InputError("'" + o.file + "' is not the reduction grammar of '" + o.pcp_file + "'");
  return reduction;
}

int witness_middle(const Options& o, std::ostream& out) {
  const auto reduction = matching_reduction(o);
  const auto result = middle_witness(reduction, parse_word(o.u), parse_word(o.v));
  if (const auto* z = std::get_if<Word>(&result)) {
    out << "middle: " << format_word(*z) << "\n";
    return kOk;
  }
  out << "adjacent: no word lies between\n";
  out << "solution: " << format_solution(std::get<SolutionDetected>(result).solution) << "\n";
  return kRefuted;
}

int witness_neighbors(const Options& o, std::ostream& out) {
  const auto reduction = matching_reduction(o);
  const auto n = neighbor_witnesses(reduction, parse_word(o.v));
  out << "lower: " << format_word(n.lower) << "\n";
  out << "upper: " << format_word(n.upper) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lexicographic orderings of context-free languages", "lexdense"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto* pcp = app.add_subcommand("pcp", "Post Correspondence Problem instances")->require_subcommand(1);
  auto* solve = pcp->add_subcommand("solve", "Bounded breadth-first search for a solution");
  solve->add_option("file", o.file, "PCP file")->required();
  solve->add_option("--max-depth", o.max_depth, "Longest index sequence to try")->required();
  solve->callback([&] { action = pcp_solve; });

  auto* reduce = pcp->add_subcommand("reduce", "Compile an instance into its prefix grammar");
  reduce->add_option("file", o.file, "PCP file")->required();
  reduce->add_option("-o,--output", o.output, "Grammar output file")->required();
  reduce->add_flag("--binary", o.binary, "Code letters over 0 < 1 before writing");
  reduce->add_option("--solution", o.solution, "Solution indices, e.g. 1,2");
  reduce->add_option("--witness-out", o.witness_out, "Where to write the gap witness");
  reduce->callback([&] { action = pcp_reduce; });

  auto* grammar = app.add_subcommand("grammar", "Grammar queries")->require_subcommand(1);
  auto* enumerate = grammar->add_subcommand("enumerate", "Sorted words up to a length");
  enumerate->add_option("file", o.file, "Grammar file")->required();
  enumerate->add_option("--max-len", o.max_len, "Length bound")->required();
  enumerate->callback([&] { action = grammar_enumerate; });

  auto* analyze = grammar->add_subcommand("analyze-regular", "Exact order analysis of a right-linear grammar");
  analyze->add_option("file", o.file, "Grammar file")->required();
  analyze->callback([&] { action = grammar_analyze; });

  auto* probe = grammar->add_subcommand("probe-density", "Look for middles between consecutive words");
  probe->add_option("file", o.file, "Grammar file")->required();
  probe->add_option("--max-len", o.max_len, "Length bound")->required();
  probe->add_option("--pcp", o.pcp_file, "PCP instance the grammar was reduced from");
  probe->callback([&] { action = grammar_probe; });

  auto* check = grammar->add_subcommand("check-prefix", "Bounded prefix-freeness check");
  check->add_option("file", o.file, "Grammar file")->required();
  check->add_option("--max-len", o.max_len, "Length bound")->required();
  check->callback([&] { action = grammar_check_prefix; });

  auto* witness = app.add_subcommand("witness", "Witness constructions on reduction grammars")->require_subcommand(1);
  auto* middle = witness->add_subcommand("middle", "A language word strictly between u and v");
  middle->add_option("grammar", o.file, "Reduction grammar file")->required();
  middle->add_option("--pcp", o.pcp_file, "PCP file")->required();
  middle->add_option("u", o.u, "Lower word")->required();
  middle->add_option("v", o.v, "Upper word")->required();
  middle->callback([&] { action = witness_middle; });

  auto* neighbors = witness->add_subcommand("neighbors", "Language words below and above v");
  neighbors->add_option("grammar", o.file, "Reduction grammar file")->required();
  neighbors->add_option("--pcp", o.pcp_file, "PCP file")->required();
  neighbors->add_option("v", o.v, "Word")->required();
  neighbors->callback([&] { action = witness_neighbors; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    return action(o, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kError;
}

}  // namespace lexdense::cli
