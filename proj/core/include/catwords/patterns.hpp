#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catwords/word.hpp"

namespace catwords {

enum class Relation : unsigned char { Lt, Gt, Le, Ge, Eq, Ne };

inline constexpr std::array<Relation, 6> kAllRelations = {
    Relation::Lt, Relation::Gt, Relation::Le, Relation::Ge, Relation::Eq, Relation::Ne};

constexpr bool holds(Relation r, Letter a, Letter b) noexcept {
  switch (r) {
    case Relation::Lt: return a < b;
    case Relation::Gt: return a > b;
    case Relation::Le: return a <= b;
    case Relation::Ge: return a >= b;
    case Relation::Eq: return a == b;
    case Relation::Ne: return a != b;
  }
  return false;
}

// ASCII token: "<", ">", "<=", ">=", "=", "!=".
std::string_view token(Relation r) noexcept;
// Unicode symbol: "<", ">", "≤", "≥", "=", "≠".
std::string_view symbol(Relation r) noexcept;
// Accepts ASCII tokens and Unicode aliases; throws ParseError.
Relation parse_relation(std::string_view text);

struct RelationPair {
  Relation first;
  Relation second;

  // Whether the window (a, b, c) realizes the pair.
  constexpr bool matches(Letter a, Letter b, Letter c) const noexcept {
    return holds(first, a, b) && holds(second, b, c);
  }

  // "!=,>=" or, with unicode, "≠,≥".
  std::string to_string(bool unicode = false) const;
  static RelationPair parse(std::string_view text);

  friend constexpr bool operator==(RelationPair, RelationPair) = default;
  friend constexpr auto operator<=>(RelationPair, RelationPair) = default;
};

// All 36 pairs, first relation major, in kAllRelations order.
const std::array<RelationPair, 36>& all_pairs();

class ConsecutivePattern {
 public:
  ConsecutivePattern() = default;

  // Throws ParseError when the letters skip a value or the length is < 2.
  static ConsecutivePattern from_letters(std::vector<Letter> letters);
  // Digit string form, e.g. "210".
  static ConsecutivePattern parse(std::string_view text);
  // The order type of an arbitrary window.
  static ConsecutivePattern order_type(std::span<const Letter> window);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  std::string to_string() const;

  // Full pairwise comparison profile equality.
  bool isomorphic_to(std::span<const Letter> window) const noexcept;

  friend bool operator==(const ConsecutivePattern&, const ConsecutivePattern&) = default;
  friend auto operator<=>(const ConsecutivePattern&, const ConsecutivePattern&) = default;

 private:
  std::vector<Letter> letters_;
};

// Start indices are 1-based, as in the usual w_i notation.
std::vector<std::size_t> pair_occurrences(std::span<const Letter> w, RelationPair p);
bool avoids_pair(std::span<const Letter> w, RelationPair p) noexcept;

std::vector<std::size_t> pattern_occurrences(std::span<const Letter> w,
                                             const ConsecutivePattern& q);
bool avoids_patterns(std::span<const Letter> w, std::span<const ConsecutivePattern> qs);

// Canonical length-3 patterns realizable in Catalan words that satisfy the
// pair, sorted.
std::vector<ConsecutivePattern> pair_to_pattern_set(RelationPair p);

}  // namespace catwords
