#include "doctest.h"

#include <set>

#include "catwords/errors.hpp"
#include "catwords/patterns.hpp"
#include "catwords/word.hpp"
#include "naive.hpp"

using namespace catwords;

namespace {

std::set<std::string> names(const std::vector<ConsecutivePattern>& qs) {
  std::set<std::string> out;
  for (const auto& q : qs) out.insert(q.to_string());
  return out;
}

std::vector<Letter> L(const char* s) { return naive::vec(CatalanWord::parse(s).letters()); }

}  // namespace

TEST_CASE("relation tokens") {
  CHECK(parse_relation("<=") == Relation::Le);
  CHECK(parse_relation("≤") == Relation::Le);
  CHECK(parse_relation("!=") == Relation::Ne);
  CHECK(parse_relation("≠") == Relation::Ne);
  CHECK(parse_relation("=") == Relation::Eq);
  CHECK_THROWS_AS(parse_relation("<<"), ParseError);
  const auto p = RelationPair::parse("≠,≥");
  CHECK(p.first == Relation::Ne);
  CHECK(p.second == Relation::Ge);
  CHECK(p.to_string() == "!=,>=");
  CHECK(p.to_string(true) == "≠,≥");
  CHECK_THROWS_AS(RelationPair::parse("<"), ParseError);
  CHECK(all_pairs().size() == 36);
}

TEST_CASE("relations agree with the naive comparison") {
  const char* tokens[] = {"<", ">", "<=", ">=", "=", "!="};
  for (const char* t : tokens)
    for (long a = 0; a < 3; ++a)
      for (long b = 0; b < 3; ++b)
        CHECK(holds(parse_relation(t), static_cast<Letter>(a), static_cast<Letter>(b)) ==
              naive::rel(t, a, b));
}

TEST_CASE("pair occurrences") {
  const auto w = L("0123112");
  CHECK(pair_occurrences(w, RelationPair::parse("!=,>=")) == std::vector<std::size_t>{3, 4});
  CHECK(pair_occurrences(L("00"), RelationPair::parse("<,<")).empty());
  CHECK(pair_occurrences(L("0110"), RelationPair::parse("<,=")) == std::vector<std::size_t>{1});
  CHECK(avoids_pair(L("0122"), RelationPair::parse("=,>=")));
  CHECK(avoids_pair({}, RelationPair::parse("=,=")));
  CHECK_FALSE(avoids_pair(L("0100"), RelationPair::parse(">,<=")));
}

TEST_CASE("consecutive patterns") {
  const auto w = L("0123455543");
  CHECK(pattern_occurrences(w, ConsecutivePattern::parse("001")).empty());
  CHECK(pattern_occurrences(w, ConsecutivePattern::parse("210")).size() == 1);
  CHECK(pattern_occurrences(L("000"), ConsecutivePattern::parse("000")).size() == 1);
  CHECK(ConsecutivePattern::order_type(std::vector<Letter>{3, 5, 3}).to_string() == "010");
  CHECK(ConsecutivePattern::order_type(std::vector<Letter>{4, 2, 7}).to_string() == "102");
  CHECK_THROWS_AS(ConsecutivePattern::parse("02"), ParseError);
  CHECK_THROWS_AS(ConsecutivePattern::parse("1"), ParseError);
}

TEST_CASE("pattern sets for individual pairs") {
  CHECK(names(pair_to_pattern_set(RelationPair::parse("<,<"))) == std::set<std::string>{"012"});
  CHECK(names(pair_to_pattern_set(RelationPair::parse("!=,>="))) ==
        std::set<std::string>{"100", "011", "210", "010", "120"});
  CHECK(names(pair_to_pattern_set(RelationPair::parse("<=,>="))) ==
        std::set<std::string>{"000", "010", "011", "110", "120"});
}

TEST_CASE("pattern-set avoidance equals pair avoidance") {
  for (auto p : all_pairs()) {
    const auto set = pair_to_pattern_set(p);
    const std::string x(token(p.first)), y(token(p.second));
    for (std::size_t n = 0; n <= 7; ++n)
      for (const auto& w : naive::catalan_words(n)) {
        const bool ref = naive::avoids(w, x, y);
        CHECK(avoids_pair(w, p) == ref);
        CHECK(avoids_patterns(w, set) == ref);
      }
  }
}
