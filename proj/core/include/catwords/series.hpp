#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace catwords {

// Dense polynomial in y over the rationals. Trailing zeros are trimmed, so
// the zero polynomial has no coefficients.
class YPolynomial {
 public:
  YPolynomial() = default;
  YPolynomial(const mpq_class& c);  // NOLINT: constants convert implicitly
  YPolynomial(long c) : YPolynomial(mpq_class(c)) {}
  explicit YPolynomial(std::vector<mpq_class> coeffs);

  static YPolynomial monomial(const mpq_class& c, std::size_t k);

  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  mpq_class operator[](std::size_t k) const { return k < c_.size() ? c_[k] : mpq_class(0); }

  mpq_class at_one() const;
  YPolynomial derivative() const;
  bool is_integral() const;

  YPolynomial& operator+=(const YPolynomial& o);
  YPolynomial& operator-=(const YPolynomial& o);
  YPolynomial& operator*=(const mpq_class& s);
  // Accumulates a*b into *this.
  void add_product(const YPolynomial& a, const YPolynomial& b);

  friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
  friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
  friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
    YPolynomial r;
    r.add_product(a, b);
    return r;
  }
  friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

  // "5 + 5 y + 2 y^2"
  std::string pretty() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

inline constexpr std::size_t kDefaultOrder = 24;

// Power series in x truncated after x^order, coefficients in Q[y].
class BivariateSeries {
 public:
  BivariateSeries() : BivariateSeries(0) {}
  explicit BivariateSeries(std::size_t order);
  BivariateSeries(std::size_t order, std::vector<YPolynomial> coeffs);

  static BivariateSeries constant(const YPolynomial& c, std::size_t order);
  // c x^i y^k
  static BivariateSeries monomial(const mpq_class& c, std::size_t i, std::size_t k,
                                  std::size_t order);
  static BivariateSeries x(std::size_t order) { return monomial(1, 1, 0, order); }
  static BivariateSeries y(std::size_t order) { return monomial(1, 0, 1, order); }
  // Univariate series from integer or rational coefficients of x^0, x^1, ...
  static BivariateSeries from_univariate(const std::vector<mpq_class>& coeffs,
                                         std::size_t order);

  std::size_t order() const noexcept { return order_; }
  const std::vector<YPolynomial>& coeffs() const noexcept { return c_; }
  const YPolynomial& operator[](std::size_t n) const { return c_.at(n); }

  // Throws OrderExceeded when n > order.
  mpq_class coeff(std::size_t n, std::size_t k) const;
  const YPolynomial& coeff(std::size_t n) const;

  BivariateSeries truncated(std::size_t order) const;
  bool is_integral() const;
  // Lowest x-power with a nonzero coefficient, or order+1 for zero.
  std::size_t valuation() const noexcept;

  BivariateSeries& operator+=(const BivariateSeries& o);
  BivariateSeries& operator-=(const BivariateSeries& o);
  BivariateSeries& operator*=(const mpq_class& s);

  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator-(const BivariateSeries& a);

  friend BivariateSeries operator+(const BivariateSeries& a, long c);
  friend BivariateSeries operator+(long c, const BivariateSeries& a) { return a + c; }
  friend BivariateSeries operator-(const BivariateSeries& a, long c) { return a + (-c); }
  friend BivariateSeries operator-(long c, const BivariateSeries& a) { return -a + c; }
  friend BivariateSeries operator*(const BivariateSeries& a, const mpq_class& s);
  friend BivariateSeries operator*(const mpq_class& s, const BivariateSeries& a) { return a * s; }
  friend BivariateSeries operator*(const BivariateSeries& a, long s) { return a * mpq_class(s); }
  friend BivariateSeries operator*(long s, const BivariateSeries& a) { return a * mpq_class(s); }

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

  // "1 + x + 2 x^2 + (3 + y) x^3 + O(x^4)"
  std::string pretty(bool with_big_o = true) const;
  // {"order": N, "coeffs": [["1"], ["1"], ["2"], ["3", "1"], ...]}
  std::string to_json() const;

 private:
  std::size_t order_;
  std::vector<YPolynomial> c_;
};

// q with q * b = a. The constant term of b must be a nonzero rational.
BivariateSeries div(const BivariateSeries& a, const BivariateSeries& b);
inline BivariateSeries operator/(const BivariateSeries& a, const BivariateSeries& b) {
  return div(a, b);
}
BivariateSeries reciprocal(const BivariateSeries& b);

// Square root with constant term 1; the constant term of a must be 1.
BivariateSeries sqrt(const BivariateSeries& a);

BivariateSeries dy(const BivariateSeries& a);
BivariateSeries at_y1(const BivariateSeries& a);

// f(x, y) -> f(x, x y).
BivariateSeries substitute_xy_for_y(const BivariateSeries& a);

// a / (c x^i y^k). The result has order a.order() - i. Throws
// NonExactMonomialDivision when a has a term not divisible by the monomial.
BivariateSeries divide_by_monomial(const BivariateSeries& a, const mpq_class& c, std::size_t i,
                                   std::size_t k);

// Iterates s <- phi(s) from `seed` until it stabilizes. Each step must fix at
// least one more x-coefficient; otherwise NonContractive is thrown.
BivariateSeries fixed_point(const std::function<BivariateSeries(const BivariateSeries&)>& phi,
                            const BivariateSeries& seed);

// The same for a system of unknowns iterated jointly.
using SeriesVector = std::vector<BivariateSeries>;
SeriesVector fixed_point(const std::function<SeriesVector(const SeriesVector&)>& phi,
                         const SeriesVector& seed);

// Coefficients of a y-free series, or of at_y1 of a general one.
std::vector<mpq_class> univariate_coeffs(const BivariateSeries& a);

}  // namespace catwords
