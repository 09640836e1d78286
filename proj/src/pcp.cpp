#include "lexdense/pcp.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "lexdense/errors.hpp"

namespace lexdense {

PcpInstance::PcpInstance(std::vector<std::pair<std::string, std::string>> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw InputError("a PCP instance needs at least one pair");
  for (const auto& [alpha, beta] : pairs_) {
    for (const auto* word : {&alpha, &beta}) {
      if (word->empty()) throw InputError("PCP words must be nonempty");
      for (char ch : *word)
        if (ch != 'a' && ch != 'b') throw InputError(std::string("PCP words use letters a and b only, got '") + ch + "'");
    }
  }
}

PcpInstance parse_pcp(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> words;
    for (std::string w; fields >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() != 2) throw ParseError(line_no, "expected '<alpha> <beta>'");
    for (const auto& w : words)
      for (char ch : w)
        if (ch != 'a' && ch != 'b') throw ParseError(line_no, std::string("letter '") + ch + "' is not a or b");
    pairs.emplace_back(words[0], words[1]);
  }
  if (pairs.empty()) throw ParseError(0, "empty PCP file");
  return PcpInstance(std::move(pairs));
}

std::string serialize(const PcpInstance& instance) {
  std::string out;
  for (const auto& [alpha, beta] : instance.pairs()) out += alpha + " " + beta + "\n";
  return out;
}

bool verify_solution(const PcpInstance& instance, const Solution& solution) {
  if (solution.indices.empty()) throw InputError("a solution needs at least one index");
  std::string top, bottom;
  for (auto i : solution.indices) {
    if (i < 1 || i > instance.size())
      throw InputError("index " + std::to_string(i) + " outside 1.." + std::to_string(instance.size()));
    top += instance.alpha(i);
    bottom += instance.beta(i);
  }
  return top == bottom;
}

std::variant<Solution, NoneFound> brute_force_solve(const PcpInstance& instance, std::size_t max_depth) {
  // A node's configuration is the unmatched overhang and which side owns it.
  // Within one breadth-first layer nodes are generated in index order, so the
  // first visit of a configuration is its least (and shortest) index prefix;
  // later visits cannot lead to a shorter or smaller solution.
  struct Node {
    std::size_t parent;
    std::size_t index;
    bool alpha_ahead;
    std::string overhang;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  std::set<std::pair<bool, std::string>> visited;

  auto path = [&](std::size_t node) {
    Solution s;
    for (auto c = node; c != kRoot; c = nodes[c].parent) s.indices.push_back(nodes[c].index);
    std::reverse(s.indices.begin(), s.indices.end());
    return s;
  };

  std::vector<std::size_t> layer{kRoot};
  for (std::size_t depth = 1; depth <= max_depth && !layer.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (auto node : layer) {
      const bool alpha_ahead = node == kRoot ? true : nodes[node].alpha_ahead;
      const std::string overhang = node == kRoot ? std::string() : nodes[node].overhang;
      for (std::size_t i = 1; i <= instance.size(); ++i) {
        std::string top = alpha_ahead ? overhang + instance.alpha(i) : instance.alpha(i);
        std::string bottom = alpha_ahead ? instance.beta(i) : overhang + instance.beta(i);
        const std::size_t common = std::min(top.size(), bottom.size());
        if (top.compare(0, common, bottom, 0, common) != 0) continue;
        const bool ahead = top.size() >= bottom.size();
        std::string rest = ahead ? top.substr(common) : bottom.substr(common);
        nodes.push_back({node, i, ahead, rest});
        if (rest.empty()) return path(nodes.size() - 1);
        if (visited.insert({ahead, rest}).second) next.push_back(nodes.size() - 1);
      }
    }
    layer = std::move(next);
  }
  return NoneFound{max_depth};
}

std::string format_solution(const Solution& solution) {
  std::string out;
  for (auto i : solution.indices) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
  }
  return out;
}

Solution parse_solution(std::string_view text) {
  Solution s;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    s.indices.push_back(std::stoul(digits));
    digits.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
    } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      throw ParseError(0, std::string("malformed index list: unexpected '") + ch + "'");
    }
  }
  flush();
  if (s.indices.empty()) throw ParseError(0, "empty index list");
  return s;
}

}  // namespace lexdense
