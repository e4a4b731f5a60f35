#include "catwords/families.hpp"

#include <algorithm>
#include <map>

#include "catwords/errors.hpp"

namespace catwords {

const FamilyRecord& classify(RelationPair p) {
  for (const auto& f : registry())
    if (std::find(f.pairs.begin(), f.pairs.end(), p) != f.pairs.end()) return f;
  throw NotAvailable("pair " + p.to_string() + " missing from the registry");
}

const FamilyRecord& family(std::string_view id) {
  for (const auto& f : registry())
    if (f.id == id) return f;
  throw ParseError("unknown family id '" + std::string(id) + "'");
}

namespace {

using S = BivariateSeries;

// Series constants at a fixed working order.
struct Ring {
  std::size_t order;
  S x = S::x(order);
  S y = S::y(order);
  S one = S::constant(1, order);

  explicit Ring(std::size_t n) : order(n) {}
  S c(long v) const { return S::constant(v, order); }
  S pow(const S& a, unsigned k) const {
    S r = one;
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
  }
};

[[noreturn]] void unavailable(const FamilyRecord& f, const char* what) {
  throw NotAvailable(std::string(what) + " is not available for family " + f.id);
}

void require_bivariate(const FamilyRecord& f, const char* what) {
  if (f.kind != FamilyKind::Bivariate) unavailable(f, what);
}

S closed_form_impl(const std::string& id, std::size_t N) {
  // Each branch works at order N + s, where x^s divides the denominator.
  if (id == "C1") {
    Ring r(N + 1);
    auto& [o, x, y, one] = r;
    S b = 1 - x - x * x + 2 * x * y;
    S num = b - sqrt(b * b - 4 * x * y * (1 + x * y));
    return divide_by_monomial(num, 2, 1, 1);
  }
  if (id == "C2") {
    Ring r(N + 1);
    auto& [o, x, y, one] = r;
    S num = 1 - x + 2 * x * y - sqrt(1 - 2 * x + x * x - 4 * x * x * y - 4 * r.pow(x, 3) * y);
    return divide_by_monomial(num, 2, 1, 1);
  }
  if (id == "C3") {
    Ring r(N + 1);
    auto& [o, x, y, one] = r;
    S x2 = x * x;
    S num = 1 - 2 * x + 2 * x * y - x2 * y -
            sqrt(1 - 4 * x + 4 * x2 - 2 * x2 * y + x2 * x2 * y * y);
    return divide_by_monomial(num / (1 - x), 2, 1, 1);
  }
  if (id == "C4") {
    Ring r(N + 1);
    auto& [o, x, y, one] = r;
    S x2 = x * x;
    S num = 1 - x + 2 * x * y - 2 * x2 * y - sqrt(1 - 2 * x + x2 - 4 * x2 * y);
    return divide_by_monomial(num / (1 - x), 2, 1, 1);
  }
  if (id == "C5") {
    Ring r(N + 2);
    auto& [o, x, y, one] = r;
    S x2 = x * x;
    S b = 1 - x - x2 * (1 + y);
    S num = 1 - x - x2 + x2 * y - sqrt(b * b - 4 * x2 * x * (1 + x) * y);
    return divide_by_monomial(num, 2, 2, 1);
  }
  if (id == "C6") {
    Ring r(N + 2);
    auto& [o, x, y, one] = r;
    S x2 = x * x;
    S num = 1 - 2 * x + x2 * y - sqrt(1 - 4 * x + 4 * x2 - 2 * x2 * y + x2 * x2 * y * y);
    return divide_by_monomial(num, 2, 2, 1);
  }
  if (id == "C7") {
    Ring r(N);
    auto& [o, x, y, one] = r;
    return (1 + x * x - x * x * y) / (1 - x - x * x * y);
  }
  if (id == "C8") {
    Ring r(N);
    auto& [o, x, y, one] = r;
    return (1 - x + x * x - x * x * y) / (1 - 2 * x + x * x - x * x * y);
  }
  if (id == "C8b") {
    Ring r(N);
    auto& [o, x, y, one] = r;
    return (1 - x) / (1 - 2 * x);
  }
  if (id == "C9") {
    Ring r(N);
    auto& [o, x, y, one] = r;
    S x3 = r.pow(x, 3);
    return (1 - 2 * x + 2 * x * x - x3 + x3 * y) / r.pow(1 - x, 3);
  }
  if (id == "C10") {
    Ring r(N);
    auto& [o, x, y, one] = r;
    return (1 - x - x * x * y) / (1 - 2 * x - x * x * y);
  }
  if (id == "C11") {
    Ring r(N + 3);
    auto& [o, x, y, one] = r;
    S num = (1 - 2 * x - sqrt(1 - 4 * x + 4 * x * x - 4 * r.pow(x, 3) * y)) * (1 - x);
    return divide_by_monomial(num, 2, 3, 1);
  }
  if (id == "C12") {
    Ring r(N);
    auto& [o, x, y, one] = r;
    return (1 - x + x * x) / r.pow(1 - x, 2);
  }
  if (id == "C13") {
    Ring r(N + 2);
    auto& [o, x, y, one] = r;
    S x2 = x * x, x3 = x2 * x, x4 = x3 * x;
    S num = 1 - 2 * x2 - x3 + 2 * x2 * y -
            (1 + x) * sqrt(1 - 2 * x - x2 + 2 * x3 + x4 - 4 * x3 * y);
    return divide_by_monomial(num, 2, 2, 1);
  }
  if (id == "C14") {
    Ring r(N + 2);
    auto& [o, x, y, one] = r;
    S x2 = x * x;
    S num = 1 - 2 * x + 2 * x2 * y - sqrt(1 - 4 * x + 4 * x2 - 4 * x2 * x * y);
    return divide_by_monomial(num, 2, 2, 1);
  }
  if (id == "C15") {
    Ring r(N + 3);
    auto& [o, x, y, one] = r;
    S b = 1 - x - x * x;
    S num = b - sqrt(b * b - 4 * r.pow(x, 3) * y);
    return divide_by_monomial(num, 2, 3, 1);
  }
  if (id == "C16") {
    Ring r(N + 4);
    auto& [o, x, y, one] = r;
    S b = 1 - x - x * x;
    S num = b - sqrt(b * b - 4 * r.pow(x, 4) * y);
    return divide_by_monomial(num, 2, 4, 1);
  }
  throw NotAvailable("no closed form for " + id);
}

S functional_impl(const std::string& id, std::size_t N, AuxStrategy aux) {
  Ring r(N);
  auto& [o, x, y, one] = r;
  const S x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  const bool co = aux == AuxStrategy::CoIterate;

  if (id == "C1") {
    auto c_of = [&](const S& C, const S& B) {
      S A = C - 1 - (x2 * C + x2 * y * (C - 1 - B) * (C - 1));
      S E = x * y * (C - 1 - B) * (C - 1);
      return 1 + x * C + x * A + E;
    };
    if (co)
      return fixed_point(
          [&](const SeriesVector& v) {
            return SeriesVector{c_of(v[0], v[1]), x * (v[0] - 1 - v[1])};
          },
          SeriesVector{one, r.c(0)})[0];
    const S inv = reciprocal(1 + x);
    return fixed_point([&](const S& C) { return c_of(C, x * (C - 1) * inv); }, one);
  }
  if (id == "C2")
    return fixed_point(
        [&](const S& C) { return 1 + x * C + x2 + x * y * (C - 1) * (C - 1); }, one);
  if (id == "C3") {
    auto c_of = [&](const S& C, const S& B) {
      S E = x * y * (C - 1 - x - B) * (C - 1);
      return 1 + x * C + x * (C - 1) + E;
    };
    if (co)
      return fixed_point(
          [&](const SeriesVector& v) { return SeriesVector{c_of(v[0], v[1]), x * (v[0] - 1)}; },
          SeriesVector{one, r.c(0)})[0];
    return fixed_point([&](const S& C) { return c_of(C, x * (C - 1)); }, one);
  }
  if (id == "C4") {
    const S tail = x2 / (1 - x);
    auto c_of = [&](const S& C, const S& B) {
      S E = x * y * (C - 1 - B) * (C - 1);
      return 1 + x * C + tail + E;
    };
    if (co)
      return fixed_point(
          [&](const SeriesVector& v) { return SeriesVector{c_of(v[0], v[1]), x * (v[0] - 1)}; },
          SeriesVector{one, r.c(0)})[0];
    return fixed_point([&](const S& C) { return c_of(C, x * (C - 1)); }, one);
  }
  if (id == "C6")
    return fixed_point(
        [&](const S& C) {
          return 1 + x * C + x * (C - 1) + x2 * y * (C - 1) + x2 * y * (C - 1) * (C - 1);
        },
        one);
  if (id == "C7") {
    // The printed last term multiplies C; the 01^j w' case needs w' nonempty.
    const S inv = reciprocal(1 - x);
    return fixed_point(
        [&](const S& C) { return 1 + x * inv + x2 * inv + x2 * y * (C - 1) * inv; }, one);
  }
  if (id == "C8") {
    const S inv = reciprocal(1 - x);
    return fixed_point(
        [&](const S& C) { return inv + x * (C - 1) + x2 * y * (C - 1) * inv; }, one);
  }
  if (id == "C8b") return fixed_point([&](const S& C) { return 1 + x * C + x * (C - 1); }, one);
  if (id == "C9") {
    const S inv = reciprocal(1 - x);
    return fixed_point(
        [&](const S&) { return 1 + x * inv * inv + y * x3 * inv * inv * inv; }, one);
  }
  if (id == "C10")
    return fixed_point(
        [&](const S& C) { return 1 + x * C + x * (C - 1) + x2 * y * (C - 1); }, one);
  if (id == "C11") {
    const S inv = reciprocal(1 - x);
    return fixed_point(
        [&](const S& C) { return 1 + x * C + x * (C - 1) + y * x3 * C * C * inv; }, one);
  }
  if (id == "C12") {
    const S inv = reciprocal(1 - x);
    return fixed_point([&](const S&) { return 1 + x * inv * inv; }, one);
  }
  if (id == "C13") {
    auto c_of = [&](const S& C, const S& B) {
      return 1 + x * C + x2 * C + x3 * y * (C - 1) + x3 * y * (C - 1) * (C - 1) +
             x2 * y * B * (C - 1);
    };
    auto b_rhs = [&](const S& C) { return C - 1 - x - x * (C - 1) - x2 * C; };
    if (co)
      return fixed_point(
          [&](const SeriesVector& v) {
            return SeriesVector{c_of(v[0], v[1]), b_rhs(v[0]) - x * v[1]};
          },
          SeriesVector{one, r.c(0)})[0];
    const S inv = reciprocal(1 + x);
    return fixed_point([&](const S& C) { return c_of(C, b_rhs(C) * inv); }, one);
  }
  if (id == "C14")
    return fixed_point(
        [&](const S& C) { return 1 + x * C + x * (C - 1) + x2 * y * (C - 1) * (C - 1); }, one);
  if (id == "C15")
    // The printed equation has x^3 y C; the closed form needs C^2.
    return fixed_point(
        [&](const S& C) { return 1 + x + x2 * C + x * (C - 1) + x3 * y * C * C; }, one);
  if (id == "C16")
    return fixed_point(
        [&](const S& C) { return 1 + x + x2 * C + x * (C - 1) + x4 * y * C * C; }, one);
  throw NotAvailable("no functional equation for " + id);
}

S descent_closed_impl(const std::string& id, std::size_t N) {
  // Numerators vanish to the order of the monomial in the denominator.
  auto radical = [](const S& rad) { return sqrt(rad); };
  if (id == "C7" || id == "C8" || id == "C9" || id == "C10") {
    Ring r(N);
    auto& [o, x, y, one] = r;
    S x3 = r.pow(x, 3);
    if (id == "C7") return x3 * (1 + x) / r.pow(1 - x - x * x, 2);
    if (id == "C8") return x3 / r.pow(1 - 2 * x, 2);
    if (id == "C9") return x3 / r.pow(1 - x, 3);
    return x3 / r.pow(1 - 2 * x - x * x, 2);
  }
  Ring r(N + 4);
  auto& [o, x, y, one] = r;
  const S x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  const S R1 = 1 - 2 * x - 5 * x2 - 2 * x3 + x4;
  const S R2 = 1 - 2 * x - 3 * x2 - 4 * x3;
  const S R3 = 1 - 4 * x + 2 * x2 + x4;
  const S R4 = 1 - 2 * x - 3 * x2;
  const S R11 = 1 - 4 * x + 4 * x2 - 4 * x3;
  const S R13 = 1 - 2 * x - x2 - 2 * x3 + x4;
  const S R16 = 1 - 2 * x - x2 + 2 * x3 - 3 * x4;
  auto finish = [&](const S& num, const S& sq, const S& extra, std::size_t shift) {
    return divide_by_monomial(num / (sq * extra), 2, shift, 0).truncated(N);
  };
  if (id == "C1") {
    S s = radical(R1);
    return finish(1 - 2 * x - 3 * x2 + x4 - (1 - x - x2) * s, s, one, 1);
  }
  if (id == "C2") {
    S s = radical(R2);
    return finish(1 - 2 * x - x2 - 2 * x3 - (1 - x) * s, s, one, 1);
  }
  if (id == "C3") {
    S s = radical(R3);
    return finish(1 - 4 * x + 3 * x2 - (1 - 2 * x) * s, s, 1 - x, 1);
  }
  if (id == "C4") {
    S s = radical(R4);
    return finish(1 - 2 * x - x2 - (1 - x) * s, s, 1 - x, 1);
  }
  if (id == "C5") {
    S s = radical(R4);
    return finish(1 - 2 * x - 2 * x2 + x3 - (1 - x - x2) * s, s, one, 2);
  }
  if (id == "C6") {
    S s = radical(R3);
    return finish(1 - 4 * x + 3 * x2 - (1 - 2 * x) * s, s, one, 2);
  }
  if (id == "C11") {
    S s = radical(R11);
    return finish((1 - x) * (1 - 4 * x + 4 * x2 - 2 * x3 - (1 - 2 * x) * s), s, one, 3);
  }
  if (id == "C13") {
    S s = radical(R13);
    // The printed numerator has -x^6; only +x^6 matches dC/dy at y = 1.
    S x5 = x4 * x, x6 = x5 * x;
    return finish(1 - 4 * x2 - 4 * x3 + 2 * x5 + x6 - (1 + x) * (1 - 2 * x2 - x3) * s, s, 1 + x,
                  2);
  }
  if (id == "C14") {
    S s = radical(R11);
    return finish(1 - 4 * x + 4 * x2 - 2 * x3 - (1 - 2 * x) * s, s, one, 2);
  }
  if (id == "C15") {
    S s = radical(R13);
    return finish(1 - 2 * x - x2 + x4 - (1 - x - x2) * s, s, one, 3);
  }
  if (id == "C16") {
    S s = radical(R16);
    return finish(1 - 2 * x - x2 + 2 * x3 - x4 - (1 - x - x2) * s, s, one, 4);
  }
  throw NotAvailable("no printed descent-total closed form for " + id);
}

S univariate_impl(const std::string& id, std::size_t N) {
  Ring r(N + 4);
  auto& [o, x, y, one] = r;
  const S x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  auto shift = [&](const S& num, std::size_t s) {
    return divide_by_monomial(num, 2, s, 0).truncated(N);
  };
  const S R1 = 1 - 2 * x - 5 * x2 - 2 * x3 + x4;
  const S R2 = 1 - 2 * x - 3 * x2 - 4 * x3;
  const S R3 = 1 - 4 * x + 2 * x2 + x4;
  const S R4 = 1 - 2 * x - 3 * x2;
  const S R11 = 1 - 4 * x + 4 * x2 - 4 * x3;
  const S R13 = 1 - 2 * x - x2 - 2 * x3 + x4;
  const S R16 = 1 - 2 * x - x2 + 2 * x3 - 3 * x4;
  if (id == "C1") return shift(1 + x - x2 - sqrt(R1), 1);
  if (id == "C2") return shift(1 + x - sqrt(R2), 1);
  if (id == "C3") return shift((1 - x2 - sqrt(R3)) / (1 - x), 1);
  if (id == "C4") return shift((1 + x - 2 * x2 - sqrt(R4)) / (1 - x), 1);
  if (id == "C5") return shift(1 - x - sqrt(R4), 2);
  if (id == "C6") return shift(1 - 2 * x + x2 - sqrt(R3), 2);
  if (id == "C7") return reciprocal(1 - x - x2).truncated(N);
  if (id == "C8" || id == "C8b") return ((1 - x) / (1 - 2 * x)).truncated(N);
  if (id == "C9") return ((1 - 2 * x + 2 * x2) / r.pow(1 - x, 3)).truncated(N);
  if (id == "C10") return ((1 - x - x2) / (1 - 2 * x - x2)).truncated(N);
  if (id == "C11") return shift((1 - 2 * x - sqrt(R11)) * (1 - x), 3);
  if (id == "C12") return ((1 - x + x2) / r.pow(1 - x, 2)).truncated(N);
  if (id == "C13") return shift(1 - x3 - (1 + x) * sqrt(R13), 2);
  if (id == "C14") return shift(1 - 2 * x + 2 * x2 - sqrt(R11), 2);
  if (id == "C15") return shift(1 - x - x2 - sqrt(R13), 3);
  if (id == "C16") return shift(1 - x - x2 - sqrt(R16), 4);
  if (id == "UNIVAR2" || id == "UNIVAR3")
    return shift((1 - 2 * x2 - sqrt(1 - 4 * x + 4 * x3)) / (1 - x), 1);
  throw NotAvailable("no printed closed form for C(x) of " + id);
}

}  // namespace

BivariateSeries closed_form_series(const FamilyRecord& f, std::size_t order) {
  require_bivariate(f, "closed form");
  if (!f.closed_form) unavailable(f, "closed form");
  return closed_form_impl(f.id, order).truncated(order);
}

BivariateSeries functional_equation_series(const FamilyRecord& f, std::size_t order,
                                           AuxStrategy aux) {
  require_bivariate(f, "functional equation");
  if (!f.functional_equation) unavailable(f, "functional equation");
  return functional_impl(f.id, order, aux);
}

BivariateSeries descent_total_series(const FamilyRecord& f, std::size_t order) {
  require_bivariate(f, "descent-total series");
  return at_y1(dy(closed_form_series(f, order)));
}

BivariateSeries descent_total_closed_form(const FamilyRecord& f, std::size_t order) {
  if (!f.descent_closed_form) unavailable(f, "printed descent-total closed form");
  return descent_closed_impl(f.id, order);
}

BivariateSeries univariate_closed_form(const FamilyRecord& f, std::size_t order) {
  if (!f.univariate_closed_form) unavailable(f, "printed univariate closed form");
  return univariate_impl(f.id, order);
}

mpz_class binom(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

mpz_class special(SpecialKind kind, std::size_t n) {
  switch (kind) {
    case SpecialKind::Catalan:
      return binom(2 * static_cast<long>(n), static_cast<long>(n)) / (n + 1);
    case SpecialKind::Motzkin: {
      // m_{k+1} = m_k + sum_{i=0}^{k-1} m_i m_{k-1-i}
      std::vector<mpz_class> m{1, 1};
      for (std::size_t k = 1; k < n; ++k) {
        mpz_class next = m[k];
        for (std::size_t i = 0; i < k; ++i) next += m[i] * m[k - 1 - i];
        m.push_back(next);
      }
      return m[n];
    }
    case SpecialKind::Fibonacci:
    case SpecialKind::Pell: {
      const long mult = kind == SpecialKind::Pell ? 2 : 1;
      mpz_class a = 0, b = 1;
      for (std::size_t i = 0; i < n; ++i) {
        mpz_class t = mult * b + a;
        a = b;
        b = t;
      }
      return a;
    }
  }
  return 0;
}

mpz_class motzkin_printed_sum(std::size_t n) {
  mpz_class s = 0;
  const long nn = static_cast<long>(n);
  for (long k = 0; k <= nn / 2; ++k)
    s += binom(2 * nn, k) * special(SpecialKind::Catalan, static_cast<std::size_t>(k));
  return s;
}

mpz_class alternating_motzkin_printed(std::size_t n) {
  mpz_class s = 0;
  const long nn = static_cast<long>(n);
  for (long k = 0; k <= (nn + 1) / 2; ++k) {
    mpz_class t = binom(nn - k - 1, k) * special(SpecialKind::Motzkin, n + 1 - 2 * k);
    s += (k % 2) ? mpz_class(-t) : t;
  }
  return s;
}

namespace {

mpz_class integral(const mpq_class& q, const std::string& id, std::size_t n) {
  if (q.get_den() != 1)
    throw NonExactMonomialDivision("formula for " + id + " gave non-integer " + q.get_str() +
                                   " at n=" + std::to_string(n));
  return q.get_num();
}

mpz_class motzkin(long n) { return special(SpecialKind::Motzkin, static_cast<std::size_t>(n)); }

mpz_class a105633(long n) {
  mpq_class s = 0;
  for (long k = 0; k <= (n - 1) / 2; ++k) {
    mpq_class t(binom(n - k, k) * binom(2 * n - 3 * k, n - 2 * k - 1), n - k);
    t.canonicalize();
    s += (k % 2) ? mpq_class(-t) : t;
  }
  return integral(s, "A105633", static_cast<std::size_t>(n));
}

mpz_class formula_value(const FamilyRecord& f, long n) {
  const std::string& id = f.id;
  if (id == "C1") {
    mpq_class s = 0;
    for (long j = 0; j <= n / 2; ++j) {
      mpz_class inner = 0;
      for (long i = 0; i <= n - 2 * j; ++i)
        inner += binom(n - 2 * j, i) * binom(j + i, n - 2 * j - i + 1);
      mpq_class t(binom(n - j, j) * inner, n - j);
      t.canonicalize();
      s += t;
    }
    return integral(s, id, static_cast<std::size_t>(n));
  }
  if (id == "C2") {
    mpq_class s = 0;
    for (long i = 0; i <= n; ++i)
      for (long k = 1; k <= n - i + 1; ++k) {
        mpq_class t(binom(i - 1, k - 1) * binom(k, n - k - i + 1) * binom(k + i - 2, i - 1), k);
        t.canonicalize();
        s += t;
      }
    return integral(s, id, static_cast<std::size_t>(n));
  }
  if (id == "C3" || id == "UNIVAR4" || id == "UNIVAR5") return a105633(n);
  if (id == "C4") {
    mpz_class s = 0;
    for (long j = 0; j < n; ++j) s += motzkin(j);
    return s;
  }
  if (id == "C5" || id == "UNIVAR6") return motzkin(n);
  if (id == "C6") {
    mpq_class s = 0;
    for (long k = 0; k <= n; ++k)
      for (long j = 0; j <= n - k; ++j) {
        mpq_class t(binom(n - k - 1, j) * binom(k, j) * binom(k + j + 2, j), j + 1);
        t.canonicalize();
        s += t;
      }
    return integral(s, id, static_cast<std::size_t>(n));
  }
  if (id == "C7") return special(SpecialKind::Fibonacci, static_cast<std::size_t>(n + 1));
  if (id == "C8" || id == "C8b") {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    return p;
  }
  if (id == "C9") return 1 + binom(n, 2);
  // Printed as P_{n+1}; with P_0 = 0, P_1 = 1 the counts are P_n.
  if (id == "C10") return special(SpecialKind::Pell, static_cast<std::size_t>(n));
  if (id == "C12") return n;
  if (id == "C15") {
    // The printed upper index of the binomial is n-k-1; n-k+1 is what the
    // counts satisfy.
    mpz_class s = 0;
    for (long k = 0; k <= (n + 1) / 2; ++k) {
      mpz_class t = binom(n - k + 1, k) * motzkin(n + 1 - 2 * k);
      s += (k % 2) ? mpz_class(-t) : t;
    }
    return s;
  }
  if (id == "C16") {
    mpz_class s = 0;
    for (long k = 0; k <= (n + 1) / 2; ++k) s += binom(n - k, k) * motzkin(k);
    return s;
  }
  if (id == "UNIVAR1") {
    mpz_class s = 0;
    for (long k = 1; k <= n; ++k) s += binom(k, n - k) * motzkin(k - 1);
    return s;
  }
  if (id == "UNIVAR2" || id == "UNIVAR3") {
    const mpq_class c = univariate_closed_form(f, static_cast<std::size_t>(n)).coeff(
        static_cast<std::size_t>(n), 0);
    return integral(c, id, static_cast<std::size_t>(n));
  }
  if (id == "UNIVAR7") {
    mpq_class s = 0;
    for (long k = 0; k <= n / 2; ++k) {
      if (n - 2 * k - 1 < 0) continue;
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n - 2 * k - 1));
      mpq_class t(binom(n - k, k) * binom(n - k, k + 1) * p, n - k);
      t.canonicalize();
      s += t;
    }
    return integral(s, id, static_cast<std::size_t>(n));
  }
  if (id == "CONST1" || id == "CONST2") return n == 1 ? 1 : 2;
  if (id == "CONST3") return n % 2 ? 1 : 2;
  if (id == "CONST4") return n < 3 ? n : 3;
  throw NotAvailable("no counting formula for family " + id);
}

}  // namespace

mpz_class count_formula(const FamilyRecord& f, std::size_t n) {
  if (!f.count_formula) unavailable(f, "counting formula");
  if (n == 0) return 1;
  return formula_value(f, static_cast<long>(n));
}

}  // namespace catwords
