#include "doctest.h"

#include <set>

#include "catwords/errors.hpp"
#include "catwords/families.hpp"
#include "catwords/patterns.hpp"
#include "naive.hpp"

using namespace catwords;
using S = BivariateSeries;

namespace {

YPolynomial yp(std::initializer_list<long> c) {
  return YPolynomial(std::vector<mpq_class>(c.begin(), c.end()));
}

std::string tok(Relation r) { return std::string(token(r)); }

}  // namespace

TEST_CASE("every pair belongs to exactly one family") {
  std::set<std::string> seen;
  for (const auto& f : registry())
    for (auto p : f.pairs) {
      CHECK(seen.insert(p.to_string()).second);
      CHECK(classify(p).id == f.id);
    }
  CHECK(seen.size() == 36);
  CHECK(classify(RelationPair::parse(">=,=")).id == "C1");
  CHECK(classify(RelationPair::parse("<=,>=")).kind == FamilyKind::Constant);
  CHECK(classify(RelationPair::parse("<,<")).kind == FamilyKind::Univariate);
  CHECK_THROWS_AS(family("C99"), ParseError);
  std::size_t bivariate_pairs = 0;
  for (const auto& f : registry())
    if (f.kind == FamilyKind::Bivariate) bivariate_pairs += f.pairs.size();
  CHECK(bivariate_pairs == 25);
}

TEST_CASE("closed forms equal brute-force distributions") {
  for (const auto& f : registry()) {
    if (f.kind != FamilyKind::Bivariate) continue;
    CAPTURE(f.id);
    const S c = closed_form_series(f, 8);
    CHECK(c.is_integral());
    for (auto p : f.pairs) {
      const auto ref = naive::distribution(tok(p.first), tok(p.second), 8);
      for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
          auto it = ref.find({n, k});
          const std::uint64_t want = it == ref.end() ? 0 : it->second;
          CHECK(c.coeff(n, k) == mpz_class(std::to_string(want)));
        }
    }
  }
}

TEST_CASE("functional equations agree with closed forms") {
  for (const auto& f : registry()) {
    if (!f.functional_equation) continue;
    CAPTURE(f.id);
    CHECK(functional_equation_series(f, 14, AuxStrategy::Symbolic) == closed_form_series(f, 14));
    CHECK(functional_equation_series(f, 14, AuxStrategy::CoIterate) == closed_form_series(f, 14));
  }
  CHECK_THROWS_AS(functional_equation_series(family("C5"), 6), NotAvailable);
  CHECK_THROWS_AS(closed_form_series(family("CONST1"), 6), NotAvailable);
}

TEST_CASE("printed expansions") {
  const S c1 = closed_form_series(family("C1"), 6);
  CHECK(c1.pretty(false) ==
        "1 + x + 2 x^2 + (3 + y) x^3 + (5 + 5 y) x^4 + (8 + 16 y + 2 y^2) x^5 + "
        "(13 + 43 y + 16 y^2) x^6");
  const S c16 = closed_form_series(family("C16"), 6);
  CHECK(c16.pretty(false) ==
        "1 + x + 2 x^2 + 3 x^3 + (5 + y) x^4 + (8 + 3 y) x^5 + (13 + 9 y) x^6");
  const S c12 = at_y1(closed_form_series(family("C12"), 12));
  for (std::size_t n = 1; n <= 12; ++n) CHECK(c12.coeff(n, 0) == n);
  const S c4 = functional_equation_series(family("C4"), 6);
  CHECK(c4.coeff(4) == yp({4, 4}));
  CHECK(c4.coeff(5) == yp({5, 10, 2}));
  const S c8b = functional_equation_series(family("C8b"), 10);
  const S x = S::x(10);
  CHECK(c8b == (1 - x) / (1 - 2 * x));
}

TEST_CASE("descent totals") {
  auto coeffs = [](const S& s, std::size_t from, std::size_t to) {
    std::vector<mpz_class> v;
    for (std::size_t n = from; n <= to; ++n) v.push_back(mpz_class(s.coeff(n, 0)));
    return v;
  };
  const auto d5 = descent_total_series(family("C5"), 9);
  CHECK(coeffs(d5, 3, 9) == std::vector<mpz_class>{1, 4, 14, 45, 140, 427, 1288});
  const auto d7 = descent_total_series(family("C7"), 9);
  CHECK(coeffs(d7, 3, 9) == std::vector<mpz_class>{1, 3, 7, 15, 30, 58, 109});
  const auto d1 = at_y1(dy(closed_form_series(family("C1"), 6)));
  CHECK(coeffs(d1, 3, 6) == std::vector<mpz_class>{1, 5, 20, 75});
  for (const auto& f : registry()) {
    if (f.kind != FamilyKind::Bivariate) continue;
    CAPTURE(f.id);
    CHECK(descent_total_series(f, 2).coeff(0).is_zero());
    CHECK(descent_total_series(f, 2).coeff(2).is_zero());
    if (f.descent_closed_form)
      CHECK(descent_total_closed_form(f, 12) == at_y1(dy(closed_form_series(f, 12))));
  }
}

TEST_CASE("univariate closed forms") {
  for (const auto& f : registry()) {
    if (!f.univariate_closed_form) continue;
    CAPTURE(f.id);
    const S u = univariate_closed_form(f, 10);
    for (std::size_t n = 0; n <= 10; ++n)
      CHECK(u.coeff(n, 0) == naive::count(tok(f.pairs[0].first), tok(f.pairs[0].second), n));
  }
}

TEST_CASE("count formulas equal brute force") {
  for (const auto& f : registry()) {
    if (!f.count_formula) continue;
    CAPTURE(f.id);
    for (std::size_t n = 0; n <= 9; ++n)
      CHECK(count_formula(f, n) == naive::count(tok(f.pairs[0].first), tok(f.pairs[0].second), n));
  }
  const long c16[] = {1, 2, 3, 6, 11, 22, 43, 87, 176, 362};
  for (std::size_t n = 1; n <= 10; ++n) CHECK(count_formula(family("C16"), n) == c16[n - 1]);
  CHECK(count_formula(family("C9"), 4) == 7);
  for (std::size_t n = 1; n <= 15; n += 2) CHECK(count_formula(family("CONST3"), n) == 1);
}

TEST_CASE("special sequences") {
  const long m[] = {1, 1, 2, 4, 9, 21, 51};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(special(SpecialKind::Motzkin, n) == m[n]);
  for (std::size_t n = 0; n <= 9; ++n)
    CHECK(special(SpecialKind::Motzkin, n) == naive::count(">=", ">=", n));
  CHECK(special(SpecialKind::Catalan, 5) == 42);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-1, 0) == 0);
}
