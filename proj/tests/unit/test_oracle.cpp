#include "doctest.h"

#include <set>

#include "catwords/errors.hpp"
#include "catwords/oracle.hpp"
#include "catwords/patterns.hpp"
#include "naive.hpp"

using namespace catwords;

namespace {

std::set<std::string> compact_set(const std::vector<CatalanWord>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(w.to_compact());
  return out;
}

}  // namespace

TEST_CASE("enumerate small classes") {
  CHECK(compact_set(enumerate_avoiding(RelationPair::parse(">=,<"), 4)) ==
        std::set<std::string>{"0000", "0100", "0110", "0111", "0120", "0121", "0122", "0123"});
  CHECK(compact_set(enumerate_avoiding(RelationPair::parse("<=,>="), 5)) ==
        std::set<std::string>{"01234", "00123"});
  for (auto p : all_pairs()) {
    CHECK(compact_set(enumerate_avoiding(p, 1)) == std::set<std::string>{"0"});
    CHECK(enumerate_avoiding(p, 0).size() == 1);
  }
}

TEST_CASE("distribution equals brute force for every pair") {
  for (auto p : all_pairs()) {
    const auto d = distribution(p, 8);
    const auto ref = naive::distribution(std::string(token(p.first)), std::string(token(p.second)), 8);
    for (std::size_t n = 0; n <= 8; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        auto it = ref.find({n, k});
        const std::uint64_t want = it == ref.end() ? 0 : it->second;
        CHECK(d.at(n, k) == mpz_class(std::to_string(want)));
      }
  }
}

TEST_CASE("window filter built from patterns equals the pair filter") {
  for (auto p : all_pairs()) {
    const auto set = pair_to_pattern_set(p);
    CHECK(distribution(WindowFilter(set), 9) == distribution(p, 9));
  }
}

TEST_CASE("printed counts and distributions") {
  const long want[] = {1, 2, 5, 13, 34, 90, 242, 660, 1821, 5073};
  const auto p = RelationPair::parse(">,!=");
  for (std::size_t n = 1; n <= 10; ++n) CHECK(count_avoiding(p, n) == want[n - 1]);
  CHECK(count_avoiding(p, 0) == 1);
  const auto c1 = distribution(RelationPair::parse("=,>="), 4);
  CHECK(c1.at(4, 0) == 5);
  CHECK(c1.at(4, 1) == 5);
  const auto c16 = distribution(RelationPair::parse("!=,!="), 4);
  CHECK(c16.at(4, 0) == 5);
  CHECK(c16.at(4, 1) == 1);
  CHECK(c16.at(0, 0) == 1);
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(distribution(RelationPair::parse("<,<"), 21), ResourceLimit);
  CHECK_THROWS_AS(count_avoiding(RelationPair::parse("<,<"), 6, 5), ResourceLimit);
}

TEST_CASE("serialization") {
  const auto d = distribution(RelationPair::parse("=,>="), 3);
  CHECK(d.to_csv() == "n,k,count\n0,0,1\n1,0,1\n2,0,2\n3,0,3\n3,1,1\n");
  CHECK(d.to_json(3).find("\"counts\"") != std::string::npos);
}
