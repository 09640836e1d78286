#include <array>

#include "lexdense/errors.hpp"
#include "lexdense/order_analysis.hpp"

namespace lexdense {
namespace {

class RegularOrder {
 public:
  RegularOrder(const Grammar& grammar, const StateCap& cap)
      : base_(grammar.alphabet()), cap_(cap), language_(trim(nfa_from_right_linear(grammar))) {}

  Cardinality cardinality() const {
    if (language_.state_count() == 0) return {Cardinality::Kind::empty, 0};
    if (accepts_infinitely_many(language_)) return {Cardinality::Kind::infinite, 0};
    return {Cardinality::Kind::finite, count_words(language_, cap_)};
  }

  // Pairs (u, v) of language words with u < v.
  const Nfa& less_pairs() {
    if (!less_pairs_) {
      less_pairs_ = intersect(intersect(lex_relation(base_), cylinder(language_, 2, 0), cap_),
                              cylinder(language_, 2, 1), cap_);
    }
    return *less_pairs_;
  }

  DensityVerdict density(const Cardinality& size) {
    if (size.kind != Cardinality::Kind::infinite && size.count < 2) return TooFewElements{};
    // Triples (u, w, v) with u < w < v and w in L, then forget w.
    Nfa between = intersect(well_formed(base_, 3), cylinder(language_, 3, 1), cap_);
    between = intersect(between, lex_relation_on_tracks(base_, 3, 0, 1), cap_);
    between = intersect(between, lex_relation_on_tracks(base_, 3, 1, 2), cap_);
    const std::array<std::size_t, 2> outer{0, 2};
    const Nfa has_middle = project(between, outer, cap_);
    const Nfa adjacent = intersect(less_pairs(), complement(has_middle, cap_), cap_);
    const auto result = is_empty(adjacent);
    if (std::holds_alternative<Empty>(result)) return Dense{};
    auto words = adjacent.alphabet().split(std::get<Witness>(result).letters);
    return NotDense{std::move(words[0]), std::move(words[1])};
  }

  // The least word is the one no language word lies below; symmetric for the greatest.
  std::optional<Word> extreme(std::size_t dominated_track) {
    const std::array<std::size_t, 1> keep{dominated_track};
    const Nfa dominated = project(less_pairs(), keep, cap_);
    const auto result = is_empty(intersect(language_, complement(dominated, cap_), cap_));
    if (std::holds_alternative<Empty>(result)) return std::nullopt;
    return base_.unpack(pack_letters(std::get<Witness>(result).letters));
  }

  Endpoints endpoints() {
    if (language_.state_count() == 0) return {};
    return {extreme(1), extreme(0)};
  }

 private:
  static PackedWord pack_letters(const std::vector<Letter>& letters) {
    PackedWord out;
    for (auto l : letters) out.push_back(to_letter_byte(l));
    return out;
  }

  OrderedAlphabet base_;
  StateCap cap_;
  Nfa language_;
  std::optional<Nfa> less_pairs_;
};

}  // namespace

DensityVerdict decide_dense_regular(const Grammar& grammar, const StateCap& cap) {
  RegularOrder order(grammar, cap);
  return order.density(order.cardinality());
}

Endpoints decide_endpoints_regular(const Grammar& grammar, const StateCap& cap) {
  return RegularOrder(grammar, cap).endpoints();
}

OrderReport classify_regular_order_type(const Grammar& grammar, const StateCap& cap) {
  RegularOrder order(grammar, cap);
  OrderReport report;
  report.cardinality = order.cardinality();
  report.dense = order.density(report.cardinality);
  auto ends = order.endpoints();
  report.least = std::move(ends.least);
  report.greatest = std::move(ends.greatest);

  if (report.cardinality.kind != Cardinality::Kind::infinite) {
    report.order_type = {OrderTypeKind::finite, report.cardinality.count};
  } else if (std::holds_alternative<Dense>(report.dense)) {
    const bool least = report.least.has_value();
    const bool greatest = report.greatest.has_value();
    report.order_type.kind = least ? (greatest ? OrderTypeKind::one_plus_eta_plus_one : OrderTypeKind::one_plus_eta)
                                   : (greatest ? OrderTypeKind::eta_plus_one : OrderTypeKind::eta);
  } else {
    report.order_type.kind = OrderTypeKind::other;
  }
  return report;
}

std::string to_string(const OrderType& type) {
  switch (type.kind) {
    case OrderTypeKind::finite: return "finite(" + std::to_string(type.count) + ")";
    case OrderTypeKind::eta: return "eta";
    case OrderTypeKind::one_plus_eta: return "one_plus_eta";
    case OrderTypeKind::eta_plus_one: return "eta_plus_one";
    case OrderTypeKind::one_plus_eta_plus_one: return "one_plus_eta_plus_one";
    case OrderTypeKind::other: return "other";
  }
  return "other";
}

std::string to_string(const Cardinality& cardinality) {
  switch (cardinality.kind) {
    case Cardinality::Kind::empty: return "empty";
    case Cardinality::Kind::finite: return "finite(" + std::to_string(cardinality.count) + ")";
    case Cardinality::Kind::infinite: return "infinite";
  }
  return "empty";
}

std::string format_report(const OrderReport& report) {
  std::string out = "cardinality=" + to_string(report.cardinality) + "\n";
  out += "dense=";
  if (std::holds_alternative<Dense>(report.dense)) out += "yes";
  if (std::holds_alternative<NotDense>(report.dense)) out += "no";
  if (std::holds_alternative<TooFewElements>(report.dense)) out += "too_few_elements";
  out += "\n";
  out += "least=" + (report.least ? format_word(*report.least) : std::string("none")) + "\n";
  out += "greatest=" + (report.greatest ? format_word(*report.greatest) : std::string("none")) + "\n";
  out += "order_type=" + to_string(report.order_type) + "\n";
  if (const auto* gap = std::get_if<NotDense>(&report.dense)) {
    out += "adjacent_lower=" + format_word(gap->lower) + "\n";
    out += "adjacent_upper=" + format_word(gap->upper) + "\n";
  }
  return out;
}

}  // namespace lexdense
