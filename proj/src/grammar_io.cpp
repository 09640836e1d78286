#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "lexdense/errors.hpp"
#include "lexdense/grammar.hpp"

namespace lexdense {
namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

// Returns the text after "key:" if the line starts with it.
std::optional<std::string_view> keyed(std::string_view line, std::string_view key) {
  auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return std::nullopt;
  line.remove_prefix(first);
  if (line.substr(0, key.size()) != key) return std::nullopt;
  line.remove_prefix(key.size());
  if (line.empty() || line.front() != ':') return std::nullopt;
  return line.substr(1);
}

}  // namespace

Grammar parse_grammar(std::string_view text) {
  std::optional<OrderedAlphabet> alphabet;
  std::optional<std::string> start;
  std::vector<Production> productions;
  std::vector<std::size_t> production_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto line = strip_comment(raw);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }

    if (!alphabet) {
      auto rest = keyed(line, "alphabet");
      if (!rest) throw ParseError(line_no, "expected 'alphabet: <tokens>'");
      auto tokens = split_ws(*rest);
      if (tokens.empty()) throw ParseError(line_no, "alphabet is empty");
      std::unordered_set<std::string> seen;
      for (const auto& t : tokens) {
        if (!is_valid_token(t)) throw ParseError(line_no, "invalid alphabet token '" + t + "'");
        if (!seen.insert(t).second) throw ParseError(line_no, "duplicate alphabet token '" + t + "'");
      }
      try {
        alphabet.emplace(std::move(tokens));
      } catch (const InputError& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (!start) {
      auto rest = keyed(line, "start");
      if (!rest) throw ParseError(line_no, "expected 'start: <nonterminal>'");
      auto tokens = split_ws(*rest);
      if (tokens.size() != 1) throw ParseError(line_no, "start line names exactly one nonterminal");
      if (alphabet->contains(tokens[0]))
        throw ParseError(line_no, "start symbol '" + tokens[0] + "' is an alphabet letter");
      start = tokens[0];
    } else {
      auto arrow = line.find("->");
      if (arrow == std::string_view::npos) throw ParseError(line_no, "expected '<nonterminal> -> ...'");
      auto lhs_tokens = split_ws(line.substr(0, arrow));
      if (lhs_tokens.size() != 1) throw ParseError(line_no, "left side must be a single nonterminal");
      const auto& lhs = lhs_tokens[0];
      if (!is_valid_token(lhs)) throw ParseError(line_no, "invalid nonterminal '" + lhs + "'");
      if (alphabet->contains(lhs)) throw ParseError(line_no, "left side '" + lhs + "' is an alphabet letter");

      std::string_view body = line.substr(arrow + 2);
      std::size_t alt_start = 0;
      while (true) {
        auto bar = body.find('|', alt_start);
        auto alt = body.substr(alt_start, bar == std::string_view::npos ? std::string_view::npos : bar - alt_start);
        auto rhs = split_ws(alt);
        if (rhs.empty()) throw ParseError(line_no, "ε production (empty alternative) for '" + lhs + "'");
        for (const auto& t : rhs)
          if (!is_valid_token(t)) throw ParseError(line_no, "invalid token '" + t + "'");
        productions.push_back({lhs, std::move(rhs)});
        production_lines.push_back(line_no);
        if (bar == std::string_view::npos) break;
        alt_start = bar + 1;
      }
    }
    if (end == text.size()) break;
  }

  if (!alphabet) throw ParseError(line_no, "missing 'alphabet:' line");
  if (!start) throw ParseError(line_no, "missing 'start:' line");

  std::unordered_set<std::string> declared{*start};
  for (const auto& p : productions) declared.insert(p.lhs);
  for (std::size_t i = 0; i < productions.size(); ++i) {
    for (const auto& t : productions[i].rhs) {
      if (!alphabet->contains(t) && !declared.contains(t))
        throw ParseError(production_lines[i],
                         "undeclared token '" + t + "': not in the alphabet and has no productions");
    }
  }
  return Grammar(std::move(*alphabet), std::move(*start), std::move(productions));
}

std::string serialize(const Grammar& grammar) {
  std::string out = "alphabet:";
  for (const auto& t : grammar.alphabet().tokens()) out += " " + t;
  out += "\nstart: " + grammar.start() + "\n";
  const auto& prods = grammar.productions();
  for (std::size_t i = 0; i < prods.size();) {
    out += prods[i].lhs + " ->";
    std::size_t j = i;
    for (; j < prods.size() && prods[j].lhs == prods[i].lhs; ++j) {
      if (j != i) out += " |";
      for (const auto& t : prods[j].rhs) out += " " + t;
    }
    out += "\n";
    i = j;
  }
  return out;
}

}  // namespace lexdense
