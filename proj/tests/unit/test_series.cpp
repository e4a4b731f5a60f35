#include "doctest.h"

#include "catwords/errors.hpp"
#include "catwords/series.hpp"
#include "naive.hpp"

using namespace catwords;
using S = BivariateSeries;

namespace {

YPolynomial yp(std::initializer_list<long> c) {
  return YPolynomial(std::vector<mpq_class>(c.begin(), c.end()));
}

}  // namespace

TEST_CASE("polynomial arithmetic in y") {
  const YPolynomial a = yp({1, 2}), b = yp({0, 0, 3});
  CHECK((a + b) == yp({1, 2, 3}));
  CHECK((a * a) == yp({1, 4, 4}));
  CHECK((a - a).is_zero());
  CHECK(yp({5, 5, 2}).pretty() == "5 + 5 y + 2 y^2");
  CHECK(yp({1, 3, 2}).derivative() == yp({3, 4}));
  CHECK(yp({1, 3, 2}).at_one() == 6);
}

TEST_CASE("ring operations") {
  const std::size_t N = 8;
  const S x = S::x(N), y = S::y(N), one = S::constant(1, N);
  CHECK((one + x).pretty(false) == "1 + x");
  const S sq = (1 + x * y) * (1 + x * y);
  CHECK(sq.coeff(0, 0) == 1);
  CHECK(sq.coeff(1, 1) == 2);
  CHECK(sq.coeff(2, 2) == 1);
  CHECK(sq.coeff(2, 0) == 0);
  CHECK(sq.coeff(3).is_zero());
  CHECK_THROWS_AS(sq.coeff(9, 0), OrderExceeded);
}

TEST_CASE("division") {
  const std::size_t N = 12;
  const S x = S::x(N), one = S::constant(1, N);
  const S geo = one / (1 - x);
  for (std::size_t n = 0; n <= N; ++n) CHECK(geo.coeff(n, 0) == 1);
  const S pow2 = (1 - x) / (1 - 2 * x);
  CHECK(pow2.coeff(0, 0) == 1);
  for (std::size_t n = 1; n <= N; ++n) CHECK(pow2.coeff(n, 0) == mpz_class(1) << (n - 1));
  const S fib = reciprocal(1 - x - x * x);
  mpz_class a = 1, b = 1;
  for (std::size_t n = 0; n <= N; ++n) {
    CHECK(fib.coeff(n, 0) == a);
    b += a;
    a = b - a;
  }
  CHECK_THROWS_AS(one / x, NonInvertibleLeadingCoefficient);
  CHECK_THROWS_AS(one / (S::y(N) + x), NonInvertibleLeadingCoefficient);
  const S yy = S::y(N);
  CHECK(((1 + x * yy) / (1 + x * yy)) == one);
}

TEST_CASE("square roots") {
  const std::size_t N = 12;
  const S x = S::x(N), y = S::y(N), one = S::constant(1, N);
  CHECK(sqrt(one) == one);
  CHECK(sqrt((1 + x) * (1 + x)) == 1 + x);
  const S r = sqrt(1 - 4 * x);
  CHECK(r * r == 1 - 4 * x);
  // 1 - 2 sum C_{n-1} x^n
  for (std::size_t n = 1; n <= N; ++n) CHECK(r.coeff(n, 0) == -2 * mpz_class(naive::catalan(n - 1)));
  const S b = 1 - 2 * x - x * x + 2 * x * x * x - 4 * x * x * x * y;
  const S s = sqrt(b);
  CHECK(s * s == b);
  CHECK_THROWS_AS(sqrt(4 + x), BadConstantTerm);
  CHECK_THROWS_AS(sqrt(x), BadConstantTerm);
}

TEST_CASE("derivative, evaluation and substitution") {
  const std::size_t N = 6;
  const S x = S::x(N), y = S::y(N);
  const S f = 1 + x * y * y;
  CHECK(at_y1(dy(f)) == 2 * x);
  CHECK(at_y1(f) == 1 + x);
  const S g = substitute_xy_for_y(x * y);
  CHECK(g.coeff(2, 1) == 1);
  CHECK(g.coeff(1, 1) == 0);
}

TEST_CASE("exact monomial division") {
  const std::size_t N = 8;
  const S x = S::x(N), y = S::y(N);
  const S a = 2 * x * x * y * (1 + x);
  const S q = divide_by_monomial(a, 2, 2, 1);
  CHECK(q.order() == N - 2);
  CHECK(q.coeff(0, 0) == 1);
  CHECK(q.coeff(1, 0) == 1);
  CHECK_THROWS_AS(divide_by_monomial(1 + x, 1, 1, 0), NonExactMonomialDivision);
  CHECK_THROWS_AS(divide_by_monomial(x, 1, 1, 1), NonExactMonomialDivision);
}

TEST_CASE("fixed points") {
  const std::size_t N = 10;
  const S x = S::x(N), one = S::constant(1, N);
  // C = 1 + x C^2 gives the Catalan numbers.
  const S c = fixed_point([&](const S& C) { return 1 + x * C * C; }, one);
  for (std::size_t n = 0; n <= N; ++n) CHECK(c.coeff(n, 0) == naive::catalan(n));
  // (1-x)/(1-2x) from C = 1 + xC + x(C-1).
  const S d = fixed_point([&](const S& C) { return 1 + x * C + x * (C - 1); }, one);
  CHECK(d == (1 - x) / (1 - 2 * x));
  CHECK_THROWS_AS(fixed_point([&](const S& C) { return C + 1; }, one), NonContractive);
  // Coupled system: A = 1 + xB, B = 1 + xA gives 1/(1-x).
  const SeriesVector sol = fixed_point(
      [&](const SeriesVector& v) { return SeriesVector{1 + x * v[1], 1 + x * v[0]}; },
      SeriesVector{one, one});
  CHECK(sol[0] == one / (1 - x));
}

TEST_CASE("printing and JSON") {
  const std::size_t N = 3;
  const S x = S::x(N), y = S::y(N);
  const S f = 1 + x + 2 * x * x + (3 + y) * x * x * x;
  CHECK(f.pretty() == "1 + x + 2 x^2 + (3 + y) x^3 + O(x^4)");
  CHECK(f.pretty(false) == "1 + x + 2 x^2 + (3 + y) x^3");
  CHECK((2 * y * x * x * x).pretty(false) == "2 y x^3");
  CHECK(S::constant(0, N).pretty(false) == "0");
  CHECK(f.to_json() == R"({"order":3,"coeffs":[["1"],["1"],["2"],["3","1"]]})");
}
