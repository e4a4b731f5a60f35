#include "catwords/patterns.hpp"

#include <algorithm>
#include <set>

#include "catwords/errors.hpp"

namespace catwords {

std::string_view token(Relation r) noexcept {
  switch (r) {
    case Relation::Lt: return "<";
    case Relation::Gt: return ">";
    case Relation::Le: return "<=";
    case Relation::Ge: return ">=";
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
  }
  return "?";
}

std::string_view symbol(Relation r) noexcept {
  switch (r) {
    case Relation::Le: return "≤";
    case Relation::Ge: return "≥";
    case Relation::Ne: return "≠";
    default: return token(r);
  }
}

Relation parse_relation(std::string_view text) {
  for (Relation r : kAllRelations)
    if (text == token(r) || text == symbol(r)) return r;
  if (text == "=<") return Relation::Le;
  if (text == "=>") return Relation::Ge;
  if (text == "==") return Relation::Eq;
  if (text == "<>") return Relation::Ne;
  throw ParseError("unknown relation token '" + std::string(text) + "'");
}

std::string RelationPair::to_string(bool unicode) const {
  auto f = unicode ? symbol : token;
  std::string out(f(first));
  out += ',';
  out += f(second);
  return out;
}

RelationPair RelationPair::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
    throw ParseError("relation pair must look like 'X,Y': '" + std::string(text) + "'");
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  return {parse_relation(trim(text.substr(0, comma))),
          parse_relation(trim(text.substr(comma + 1)))};
}

const std::array<RelationPair, 36>& all_pairs() {
  static const auto pairs = [] {
    std::array<RelationPair, 36> out{};
    std::size_t i = 0;
    for (Relation x : kAllRelations)
      for (Relation y : kAllRelations) out[i++] = {x, y};
    return out;
  }();
  return pairs;
}

ConsecutivePattern ConsecutivePattern::from_letters(std::vector<Letter> letters) {
  if (letters.size() < 2) throw ParseError("pattern needs at least two letters");
  Letter top = *std::max_element(letters.begin(), letters.end());
  std::vector<bool> seen(top + 1, false);
  for (Letter l : letters) seen[l] = true;
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ParseError("pattern letters must cover 0..max without gaps");
  ConsecutivePattern q;
  q.letters_ = std::move(letters);
  return q;
}

ConsecutivePattern ConsecutivePattern::parse(std::string_view text) {
  std::vector<Letter> letters;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("bad pattern '" + std::string(text) + "'");
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  return from_letters(std::move(letters));
}

ConsecutivePattern ConsecutivePattern::order_type(std::span<const Letter> window) {
  std::vector<Letter> distinct(window.begin(), window.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Letter> ranks;
  ranks.reserve(window.size());
  for (Letter l : window)
    ranks.push_back(static_cast<Letter>(
        std::lower_bound(distinct.begin(), distinct.end(), l) - distinct.begin()));
  ConsecutivePattern q;
  q.letters_ = std::move(ranks);
  return q;
}

std::string ConsecutivePattern::to_string() const {
  std::string out;
  for (Letter l : letters_) out += l < 10 ? std::to_string(l) : "(" + std::to_string(l) + ")";
  return out;
}

bool ConsecutivePattern::isomorphic_to(std::span<const Letter> window) const noexcept {
  if (window.size() != letters_.size()) return false;
  for (std::size_t i = 0; i < window.size(); ++i)
    for (std::size_t j = i + 1; j < window.size(); ++j)
      if ((letters_[i] <=> letters_[j]) != (window[i] <=> window[j])) return false;
  return true;
}

std::vector<std::size_t> pair_occurrences(std::span<const Letter> w, RelationPair p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (p.matches(w[i], w[i + 1], w[i + 2])) out.push_back(i + 1);
  return out;
}

bool avoids_pair(std::span<const Letter> w, RelationPair p) noexcept {
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (p.matches(w[i], w[i + 1], w[i + 2])) return false;
  return true;
}

std::vector<std::size_t> pattern_occurrences(std::span<const Letter> w,
                                             const ConsecutivePattern& q) {
  std::vector<std::size_t> out;
  const std::size_t r = q.size();
  for (std::size_t i = 0; i + r <= w.size(); ++i)
    if (q.isomorphic_to(w.subspan(i, r))) out.push_back(i + 1);
  return out;
}

bool avoids_patterns(std::span<const Letter> w, std::span<const ConsecutivePattern> qs) {
  for (const auto& q : qs) {
    const std::size_t r = q.size();
    for (std::size_t i = 0; i + r <= w.size(); ++i)
      if (q.isomorphic_to(w.subspan(i, r))) return false;
  }
  return true;
}

std::vector<ConsecutivePattern> pair_to_pattern_set(RelationPair p) {
  // Values up to 3 are enough to realize every order type of a triple.
  std::set<ConsecutivePattern> found;
  for (Letter a = 0; a <= 3; ++a)
    for (Letter b = 0; b <= a + 1; ++b)
      for (Letter c = 0; c <= b + 1; ++c)
        if (p.matches(a, b, c)) {
          const std::array<Letter, 3> t{a, b, c};
          found.insert(ConsecutivePattern::order_type(t));
        }
  return {found.begin(), found.end()};
}

}  // namespace catwords
