#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lexdense {

/// Post Correspondence Problem instance: n >= 1 pairs of nonempty words over {a, b}.
class PcpInstance {
 public:
  explicit PcpInstance(std::vector<std::pair<std::string, std::string>> pairs);

  std::size_t size() const noexcept { return pairs_.size(); }
  /// 1-based, matching index sequences.
  const std::string& alpha(std::size_t i) const { return pairs_.at(i - 1).first; }
  const std::string& beta(std::size_t i) const { return pairs_.at(i - 1).second; }
  const std::vector<std::pair<std::string, std::string>>& pairs() const noexcept { return pairs_; }

  bool operator==(const PcpInstance&) const = default;

 private:
  std::vector<std::pair<std::string, std::string>> pairs_;
};

/// Nonempty sequence of 1-based pair indices.
struct Solution {
  std::vector<std::size_t> indices;

  bool operator==(const Solution&) const = default;
};

struct NoneFound {
  std::size_t max_depth;
};

/// One `<alpha> <beta>` pair per line; blank lines and '#' comments are skipped.
PcpInstance parse_pcp(std::string_view text);
std::string serialize(const PcpInstance& instance);

/// Throws InputError for an empty sequence or an index outside 1..n.
bool verify_solution(const PcpInstance& instance, const Solution& solution);

/// Shortest solution of at most `max_depth` indices, least in index order among
/// the shortest; breadth-first with pruning of branches whose two
/// concatenations already disagree.
std::variant<Solution, NoneFound> brute_force_solve(const PcpInstance& instance, std::size_t max_depth);

std::string format_solution(const Solution& solution);
/// Comma- and/or space-separated 1-based indices.
Solution parse_solution(std::string_view text);

}  // namespace lexdense
