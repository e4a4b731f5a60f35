#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catwords/patterns.hpp"
#include "catwords/word.hpp"

namespace catwords {

using Letters = std::vector<Letter>;
using WordMap = Letters (*)(std::span<const Letter>);

struct BijectionSpec {
  std::string name;
  RelationPair source;
  RelationPair target;
  bool preserves_descents = true;
  std::string direction_note;
  WordMap map = nullptr;
};

// The six maps, in a fixed order.
const std::vector<BijectionSpec>& bijections();
// Throws ParseError for an unknown name.
const BijectionSpec& bijection(std::string_view name);

// Throws SourceViolation when w does not avoid b.source, and MapIncomplete
// when no case of the definition applies or the result is not a Catalan word.
CatalanWord apply(const BijectionSpec& b, const CatalanWord& w);
// The raw rule without the source check.
Letters apply_unchecked(const BijectionSpec& b, std::span<const Letter> w);

struct VerificationReport {
  std::string name;
  std::size_t n_max = 0;
  bool totality = true;
  bool image = true;
  bool injective = true;
  bool surjective = true;
  bool descents = true;
  // "check: word -> image" lines, capped per check.
  std::vector<std::string> counterexamples;

  bool passed() const noexcept { return totality && image && injective && surjective && descents; }
  // {"name", "n", "checks": {...}, "counterexamples": [...]}
  std::string to_json() const;
};

VerificationReport verify(const BijectionSpec& b, std::size_t n_max);

}  // namespace catwords
