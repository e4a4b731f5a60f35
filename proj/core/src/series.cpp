#include "catwords/series.hpp"

#include <algorithm>
#include <sstream>

#include "catwords/errors.hpp"
#include "json.hpp"

namespace catwords {

YPolynomial::YPolynomial(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

YPolynomial::YPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

YPolynomial YPolynomial::monomial(const mpq_class& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<mpq_class> v(k + 1, 0);
  v[k] = c;
  return YPolynomial(std::move(v));
}

void YPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class YPolynomial::at_one() const {
  mpq_class s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

YPolynomial YPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return YPolynomial(std::move(d));
}

bool YPolynomial::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& v) { return v.get_den() == 1; });
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

YPolynomial& YPolynomial::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

void YPolynomial::add_product(const YPolynomial& a, const YPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  const std::size_t need = a.c_.size() + b.c_.size() - 1;
  if (c_.size() < need) c_.resize(need, 0);
  mpq_class t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      t = a.c_[i] * b.c_[j];
      c_[i + j] += t;
    }
  }
  trim();
}

namespace {

// Appends "c" or "c y^k" style terms with sign-aware joining.
void append_term(std::string& out, const mpq_class& c, const std::string& var) {
  mpq_class mag = abs(c);
  const bool neg = c < 0;
  if (out.empty())
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (var.empty())
    out += mag.get_str();
  else if (mag == 1)
    out += var;
  else
    out += mag.get_str() + " " + var;
}

std::string power(const char* v, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return v;
  return std::string(v) + "^" + std::to_string(k);
}

}  // namespace

std::string YPolynomial::pretty() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) append_term(out, c_[k], power("y", k));
  return out.empty() ? "0" : out;
}

BivariateSeries::BivariateSeries(std::size_t order) : order_(order), c_(order + 1) {}

BivariateSeries::BivariateSeries(std::size_t order, std::vector<YPolynomial> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

BivariateSeries BivariateSeries::constant(const YPolynomial& c, std::size_t order) {
  BivariateSeries s(order);
  s.c_[0] = c;
  return s;
}

BivariateSeries BivariateSeries::monomial(const mpq_class& c, std::size_t i, std::size_t k,
                                          std::size_t order) {
  BivariateSeries s(order);
  if (i <= order) s.c_[i] = YPolynomial::monomial(c, k);
  return s;
}

BivariateSeries BivariateSeries::from_univariate(const std::vector<mpq_class>& coeffs,
                                                 std::size_t order) {
  BivariateSeries s(order);
  for (std::size_t n = 0; n < coeffs.size() && n <= order; ++n) s.c_[n] = YPolynomial(coeffs[n]);
  return s;
}

const YPolynomial& BivariateSeries::coeff(std::size_t n) const {
  if (n > order_)
    throw OrderExceeded("coefficient x^" + std::to_string(n) + " beyond series order " +
                        std::to_string(order_));
  return c_[n];
}

mpq_class BivariateSeries::coeff(std::size_t n, std::size_t k) const { return coeff(n)[k]; }

BivariateSeries BivariateSeries::truncated(std::size_t order) const {
  const std::size_t o = std::min(order, order_);
  return BivariateSeries(o, std::vector<YPolynomial>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(o + 1)));
}

bool BivariateSeries::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const YPolynomial& p) { return p.is_integral(); });
}

std::size_t BivariateSeries::valuation() const noexcept {
  for (std::size_t n = 0; n <= order_; ++n)
    if (!c_[n].is_zero()) return n;
  return order_ + 1;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t n = 0; n <= order_; ++n) c_[n] += o.c_[n];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t n = 0; n <= order_; ++n) c_[n] -= o.c_[n];
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const mpq_class& s) {
  for (auto& p : c_) p *= s;
  return *this;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r = a;
  return r += b;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r = a;
  return r -= b;
}

BivariateSeries operator-(const BivariateSeries& a) {
  BivariateSeries r = a;
  return r *= mpq_class(-1);
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  const std::size_t order = std::min(a.order_, b.order_);
  BivariateSeries r(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) r.c_[i + j].add_product(a.c_[i], b.c_[j]);
  }
  return r;
}

BivariateSeries operator+(const BivariateSeries& a, long c) {
  BivariateSeries r = a;
  r.c_[0] += YPolynomial(c);
  return r;
}

BivariateSeries operator*(const BivariateSeries& a, const mpq_class& s) {
  BivariateSeries r = a;
  return r *= s;
}

std::string BivariateSeries::pretty(bool with_big_o) const {
  std::string out;
  for (std::size_t n = 0; n <= order_; ++n) {
    const YPolynomial& p = c_[n];
    if (p.is_zero()) continue;
    std::size_t terms = 0;
    for (const auto& v : p.coeffs()) terms += v != 0;
    const std::string xs = power("x", n);
    if (terms == 1) {
      std::size_t k = p.coeffs().size() - 1;
      std::string var = power("y", k);
      if (!xs.empty()) var = var.empty() ? xs : var + " " + xs;
      append_term(out, p.coeffs()[k], var);
    } else {
      out += out.empty() ? "" : " + ";
      out += xs.empty() ? p.pretty() : "(" + p.pretty() + ") " + xs;
    }
  }
  if (out.empty()) out = "0";
  if (with_big_o) out += " + O(" + power("x", order_ + 1) + ")";
  return out;
}

std::string BivariateSeries::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order_;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& p : c_) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& v : p.coeffs()) row.push_back(v.get_str());
    rows.push_back(std::move(row));
  }
  j["coeffs"] = std::move(rows);
  return j.dump();
}

BivariateSeries div(const BivariateSeries& a, const BivariateSeries& b) {
  const YPolynomial& b0 = b[0];
  if (b0.degree() != 0)
    throw NonInvertibleLeadingCoefficient("divisor constant term " + b0.pretty() +
                                          " is not a nonzero rational");
  const mpq_class inv = 1 / b0[0];
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<YPolynomial> q(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    YPolynomial acc = a[n];
    YPolynomial sub;
    for (std::size_t i = 1; i <= n; ++i)
      if (!b[i].is_zero()) sub.add_product(b[i], q[n - i]);
    acc -= sub;
    acc *= inv;
    q[n] = std::move(acc);
  }
  return BivariateSeries(order, std::move(q));
}

BivariateSeries reciprocal(const BivariateSeries& b) {
  return div(BivariateSeries::constant(1, b.order()), b);
}

BivariateSeries sqrt(const BivariateSeries& a) {
  if (a[0] != YPolynomial(1))
    throw BadConstantTerm("square root needs constant term 1, got " + a[0].pretty());
  const std::size_t order = a.order();
  std::vector<YPolynomial> s(order + 1);
  s[0] = YPolynomial(1);
  const mpq_class half(1, 2);
  for (std::size_t n = 1; n <= order; ++n) {
    YPolynomial cross;
    for (std::size_t i = 1; i < n; ++i) cross.add_product(s[i], s[n - i]);
    YPolynomial v = a[n];
    v -= cross;
    v *= half;
    s[n] = std::move(v);
  }
  return BivariateSeries(order, std::move(s));
}

BivariateSeries dy(const BivariateSeries& a) {
  std::vector<YPolynomial> out;
  out.reserve(a.order() + 1);
  for (const auto& p : a.coeffs()) out.push_back(p.derivative());
  return BivariateSeries(a.order(), std::move(out));
}

BivariateSeries at_y1(const BivariateSeries& a) {
  std::vector<YPolynomial> out;
  out.reserve(a.order() + 1);
  for (const auto& p : a.coeffs()) out.emplace_back(p.at_one());
  return BivariateSeries(a.order(), std::move(out));
}

BivariateSeries substitute_xy_for_y(const BivariateSeries& a) {
  std::vector<YPolynomial> out(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    const auto& cs = a[n].coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k)
      if (cs[k] != 0 && n + k <= a.order()) out[n + k] += YPolynomial::monomial(cs[k], k);
  }
  return BivariateSeries(a.order(), std::move(out));
}

BivariateSeries divide_by_monomial(const BivariateSeries& a, const mpq_class& c, std::size_t i,
                                   std::size_t k) {
  if (c == 0 || a.order() < i)
    throw NonExactMonomialDivision("monomial divisor is zero or exceeds the series order");
  for (std::size_t n = 0; n < i; ++n)
    if (!a[n].is_zero())
      throw NonExactMonomialDivision("numerator has a nonzero x^" + std::to_string(n) +
                                     " term below the divisor");
  const std::size_t order = a.order() - i;
  const mpq_class inv = 1 / c;
  std::vector<YPolynomial> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    const auto& cs = a[n + i].coeffs();
    for (std::size_t j = 0; j < std::min(k, cs.size()); ++j)
      if (cs[j] != 0)
        throw NonExactMonomialDivision("numerator term x^" + std::to_string(n + i) + " y^" +
                                       std::to_string(j) + " is not divisible by y^" +
                                       std::to_string(k));
    std::vector<mpq_class> shifted;
    if (cs.size() > k) shifted.assign(cs.begin() + static_cast<std::ptrdiff_t>(k), cs.end());
    YPolynomial p(std::move(shifted));
    p *= inv;
    out[n] = std::move(p);
  }
  return BivariateSeries(order, std::move(out));
}

namespace {

std::size_t joint_valuation(const SeriesVector& a, const SeriesVector& b) {
  std::size_t v = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < a.size(); ++i) v = std::min(v, (a[i] - b[i]).valuation());
  return v;
}

}  // namespace

SeriesVector fixed_point(const std::function<SeriesVector(const SeriesVector&)>& phi,
                         const SeriesVector& seed) {
  std::size_t order = 0;
  for (const auto& s : seed) order = std::max(order, s.order());
  // With several unknowns an auxiliary one may only gain accuracy through
  // another, so progress is required once per seed.size() steps.
  const std::size_t window = std::max<std::size_t>(seed.size(), 1);
  SeriesVector cur = seed;
  std::size_t best = 0;
  std::size_t stalled = 0;
  for (std::size_t iter = 0; iter <= (order + 2) * window + 4; ++iter) {
    SeriesVector next = phi(cur);
    if (next.size() != cur.size()) throw NonContractive("map changed the number of unknowns");
    if (next == cur) return next;
    const std::size_t v = joint_valuation(next, cur);
    if (iter > 0 && v <= best) {
      if (++stalled >= window)
        throw NonContractive("iteration " + std::to_string(iter) +
                             " fixed no new coefficient (x^" + std::to_string(v) +
                             " still moving)");
    } else {
      stalled = 0;
      best = v;
    }
    cur = std::move(next);
  }
  throw NonContractive("iteration did not stabilize");
}

BivariateSeries fixed_point(const std::function<BivariateSeries(const BivariateSeries&)>& phi,
                            const BivariateSeries& seed) {
  return fixed_point(
      [&](const SeriesVector& v) { return SeriesVector{phi(v[0])}; }, SeriesVector{seed})[0];
}

std::vector<mpq_class> univariate_coeffs(const BivariateSeries& a) {
  std::vector<mpq_class> out;
  out.reserve(a.order() + 1);
  for (const auto& p : a.coeffs()) out.push_back(p.at_one());
  return out;
}

}  // namespace catwords
