#include "catwords/conformance.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "catwords/bijections.hpp"
#include "catwords/errors.hpp"
#include "catwords/families.hpp"
#include "catwords/oracle.hpp"
#include "catwords/patterns.hpp"
#include "catwords/series.hpp"
#include "catwords/word.hpp"
#include "json.hpp"

namespace catwords {

const std::vector<PrintedPatternSet>& printed_pattern_sets() {
  static const std::vector<PrintedPatternSet> sets = {
      {"<=,>=", "statement", {"000", "010", "011", "110", "120"}},
      {"<=,!=", "statement", {"001", "010", "012", "110", "120"}},
      {"<=,<=", "statement", {"000", "001", "011", "012"}},
      {"!=,<=", "statement", {"011", "012", "100", "101", "201"}},
      {"=,>=", "statement", {"000", "110"}},
      {">=,=", "statement", {"000", "100"}},
      {"=,<=", "statement", {"000", "001"}},
      {"<=,=", "statement", {"000", "011"}},
      {"=,<", "statement", {"001"}},
      {"<,=", "statement", {"011"}},
      {"<,>", "statement", {"010", "120"}},
      {"=,!=", "statement", {"001", "110"}},
      {"!=,=", "statement", {"100", "011"}},
      {">=,>=", "statement", {"000", "100", "110", "210"}},
      {"<,<", "statement", {"012"}},
      {">=,>", "statement", {"110", "210"}},
      {">,>=", "statement", {"100", "210"}},
      {">,<", "statement", {"201", "101"}},
      {">=,<=", "statement", {"000", "001", "100", "101", "201"}},
      {"<=,<", "statement", {"001", "012"}},
      {"<,<=", "statement", {"011", "012"}},
      {">=,<", "statement", {"001", "101", "201"}},
      {">=,<", "proof", {"101", "110", "201"}},
      {"<=,>", "statement", {"010", "110", "120"}},
      {">=,!=", "statement", {"001", "102", "201", "110", "210"}},
      {">,<=", "statement", {"100", "101", "201"}},
      {">,!=", "statement", {"101", "201", "210"}},
      {"<,>=", "statement", {"010", "120", "011"}},
      {"!=,>=", "statement", {"100", "011", "210", "010", "120"}},
      {"!=,>=", "overview", {"010", "011", "100", "210"}},
      {"<,!=", "statement", {"010", "012", "120"}},
      {"!=,>", "statement", {"010", "210", "120"}},
      {"!=,<", "statement", {"012", "101", "102", "201"}},
      {"!=,<", "proof", {"012", "101", "201"}},
      {"!=,!=", "statement", {"010", "012", "101", "201", "120"}},
      {"!=,!=", "proof", {"010", "012", "101", "120", "201", "210"}},
      {"=,=", "statement", {"000"}},
      {"=,>", "statement", {"110"}},
      {">,=", "statement", {"100"}},
      {">,>", "statement", {"210"}},
  };
  return sets;
}

namespace {

using S = BivariateSeries;

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) {
    std::ostringstream o;
    o << x;
    s.push_back(o.str());
  }
  return join(s);
}

struct PrintedForms {
  std::size_t order;
  S printed_d13() const {
    const std::size_t o = order + 4;
    const S x = S::x(o), x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x;
    const S s = sqrt(1 - 2 * x - x2 - 2 * x3 + x4);
    const S num = 1 - 4 * x2 - 4 * x3 + 2 * x5 - x6 - (1 + x) * (1 - 2 * x2 - x3) * s;
    return divide_by_monomial(num / (s * (1 + x)), 2, 2, 0).truncated(order);
  }
};

class Runner {
 public:
  explicit Runner(const ConformanceOptions& o) { report_.options = o; }

  ConformanceReport run() {
    series_suite();
    oracle_suite();
    formula_suite();
    descent_suite();
    bijection_suite();
    structure_suite();
    pattern_suite();
    dyck_suite();
    tables();
    printed_expression_errata();
    return std::move(report_);
  }

 private:
  const ConformanceOptions& opt() const { return report_.options; }

  void check(const std::string& suite, const std::string& name, bool ok, std::string detail = "") {
    report_.checks.push_back({suite, name, ok, std::move(detail)});
  }

  template <class F>
  void guarded(const std::string& suite, const std::string& name, F f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(suite, name, false, std::string("exception: ") + e.what());
    }
  }

  const DistributionTable& dist(RelationPair p) {
    auto it = dists_.find(p);
    if (it == dists_.end()) it = dists_.emplace(p, distribution(p, opt().n_max)).first;
    return it->second;
  }

  const S& closed(const FamilyRecord& f) {
    auto it = closed_.find(f.id);
    if (it == closed_.end()) it = closed_.emplace(f.id, closed_form_series(f, opt().order)).first;
    return it->second;
  }

  void series_suite() {
    for (const auto& f : registry()) {
      if (f.kind != FamilyKind::Bivariate) continue;
      guarded("series", f.id + " integral", [&] {
        check("series", f.id + " integral", closed(f).is_integral());
      });
      if (!f.printed_expansion.empty())
        guarded("series", f.id + " printed expansion", [&] {
          const S& c = closed(f);
          std::vector<std::string> bad;
          for (std::size_t n = 0; n < f.printed_expansion.size() && n <= c.order(); ++n) {
            std::vector<mpq_class> want(f.printed_expansion[n].begin(),
                                        f.printed_expansion[n].end());
            if (c[n] != YPolynomial(want)) bad.push_back("x^" + std::to_string(n) + ": " + c[n].pretty());
          }
          check("series", f.id + " printed expansion", bad.empty(), join(bad, "; "));
        });
      if (f.functional_equation)
        for (auto aux : {AuxStrategy::Symbolic, AuxStrategy::CoIterate}) {
          const std::string name =
              f.id + (aux == AuxStrategy::Symbolic ? " fixed point" : " fixed point (co-iterated)");
          guarded("series", name, [&] {
            const S fe = functional_equation_series(f, opt().order, aux);
            check("series", name, fe == closed(f));
          });
        }
      if (f.univariate_closed_form)
        guarded("series", f.id + " univariate closed form", [&] {
          check("series", f.id + " univariate closed form",
                univariate_closed_form(f, opt().order) == at_y1(closed(f)));
        });
    }
  }

  void oracle_suite() {
    const std::size_t nmax = std::min(opt().n_max, opt().order);
    for (const auto& f : registry())
      for (RelationPair p : f.pairs) {
        const std::string name = p.to_string(true) + " (" + f.id + ")";
        guarded("oracle", name, [&] {
          const auto& d = dist(p);
          std::vector<std::string> bad;
          if (f.kind == FamilyKind::Bivariate) {
            const S& c = closed(f);
            for (std::size_t n = 0; n <= nmax; ++n)
              for (std::size_t k = 0; k <= n; ++k)
                if (d.at(n, k) != c.coeff(n, k))
                  bad.push_back("c(" + std::to_string(n) + "," + std::to_string(k) + ")");
          } else {
            for (std::size_t n = 0; n <= opt().n_max; ++n)
              if (d.total(n) != count_formula(f, n)) bad.push_back("c(" + std::to_string(n) + ")");
          }
          check("oracle", name, bad.empty(), join(bad));
        });
      }
    // Equivalent pairs and count peers.
    for (const auto& f : registry()) {
      for (std::size_t i = 1; i < f.pairs.size(); ++i) {
        const std::string name = f.id + " " + f.pairs[0].to_string(true) + " ~ " +
                                 f.pairs[i].to_string(true) + " distribution";
        check("oracle", name, dist(f.pairs[0]) == dist(f.pairs[i]));
      }
      for (RelationPair q : f.count_peers) {
        const std::string name = f.id + " " + f.pairs[0].to_string(true) + " ~ " +
                                 q.to_string(true) + " counts";
        bool ok = true;
        for (std::size_t n = 0; n <= opt().n_max; ++n)
          ok = ok && dist(f.pairs[0]).total(n) == dist(q).total(n);
        check("oracle", name, ok);
      }
    }
  }

  void formula_suite() {
    for (const auto& f : registry()) {
      if (!f.count_formula) continue;
      guarded("formula", f.id, [&] {
        std::vector<std::string> bad;
        for (std::size_t n = 0; n <= opt().n_max; ++n)
          if (count_formula(f, n) != dist(f.pairs[0]).total(n)) bad.push_back("n=" + std::to_string(n));
        check("formula", f.id, bad.empty(), join(bad));
      });
      if (!f.printed_counts.empty()) {
        std::vector<std::string> bad;
        for (std::size_t i = 0; i < f.printed_counts.size() && i + 1 <= opt().n_max; ++i)
          if (dist(f.pairs[0]).total(i + 1) != f.printed_counts[i])
            bad.push_back("n=" + std::to_string(i + 1));
        check("formula", f.id + " printed prefix", bad.empty(), join(bad));
      }
    }
    for (const auto& f : registry())
      if (!f.count_formula && !f.printed_counts.empty()) {
        std::vector<std::string> bad;
        for (std::size_t i = 0; i < f.printed_counts.size() && i + 1 <= opt().n_max; ++i)
          if (dist(f.pairs[0]).total(i + 1) != f.printed_counts[i])
            bad.push_back("n=" + std::to_string(i + 1));
        check("formula", f.id + " printed prefix", bad.empty(), join(bad));
      }
  }

  void descent_suite() {
    for (const auto& f : registry()) {
      if (f.kind != FamilyKind::Bivariate) continue;
      guarded("descent-total", f.id, [&] {
        const S d = at_y1(dy(closed(f)));
        bool ok = true;
        std::string detail;
        if (f.descent_closed_form) {
          const bool same = descent_total_closed_form(f, opt().order) == d;
          ok = ok && same;
          if (!same) detail += "closed form differs; ";
        }
        const auto& pp = f.printed_descent_total;
        for (std::size_t i = 0; i < pp.values.size() && pp.start + i <= d.order(); ++i)
          if (d.coeff(pp.start + i, 0) != pp.values[i]) {
            ok = false;
            detail += "x^" + std::to_string(pp.start + i) + "; ";
          }
        for (std::size_t n = 0; n <= std::min(opt().n_max, d.order()); ++n) {
          mpz_class total = 0;
          const auto& row = dist(f.pairs[0]).row(n);
          for (std::size_t k = 0; k < row.size(); ++k) total += row[k] * static_cast<unsigned long>(k);
          if (d.coeff(n, 0) != total) {
            ok = false;
            detail += "oracle n=" + std::to_string(n) + "; ";
          }
        }
        check("descent-total", f.id, ok, detail);
      });
    }
  }

  void bijection_suite() {
    for (const auto& b : bijections()) {
      const auto r = verify(b, opt().n_max);
      check("bijection", b.name + " verify", r.passed(), join(r.counterexamples, "; "));
    }
    struct Example {
      const char* name;
      const char* input;
      const char* printed;
    };
    const Example examples[] = {
        {"rewrite_eqne", "01012323412300", "00101232341230"},
        {"phi_geq_geq", "0123010122", "0111010001"},
        {"psi_geq_gt", "01234012343454", "01220012345653"},
        {"phi_leq_lt", "01101101111011", "01234567899420"},
    };
    for (const auto& e : examples) {
      const std::string name = std::string(e.name) + " worked example";
      guarded("bijection", name, [&] {
        const auto out = apply(bijection(e.name), CatalanWord::parse(e.input)).to_compact();
        check("bijection", name, out == e.printed, std::string(e.input) + " -> " + out);
        if (out != e.printed)
          report_.errata.push_back({std::string(e.name) + " worked example",
                                    std::string(e.input) + " -> " + e.printed,
                                    std::string(e.input) + " -> " + out});
      });
    }
    // The rewrite example is known to start outside its source class.
    {
      const auto& b = bijection("rewrite_110_100");
      const auto w = CatalanWord::parse("0122123300");
      const bool in_source = avoids_pair(w.letters(), b.source);
      const auto out = CatalanWord::from_trusted(apply_unchecked(b, w.letters())).to_compact();
      report_.errata.push_back(
          {"rewrite_110_100 worked example",
           "0122123300 avoids " + b.source.to_string(true) + ", image 0121123000",
           std::string("0122123300 ") + (in_source ? "avoids " : "contains ") +
               b.source.to_string(true) + " (window 300); rule gives " + out +
               ", which contains 000"});
    }
    {
      // First-return shapes 00(va+1)v' with v' nonempty have no printed case.
      std::size_t uncovered = 0;
      std::string first;
      for (std::size_t n = 0; n <= opt().n_max; ++n)
        for (const auto& w : enumerate_avoiding(RelationPair{Relation::Ge, Relation::Ge}, n)) {
          if (n < 3 || w[1] != 0) continue;
          std::size_t ret = 2;
          while (ret < n && w[ret] != 0) ++ret;
          if (ret < n) {
            if (!uncovered) first = w.to_compact();
            ++uncovered;
          }
        }
      if (uncovered)
        report_.errata.push_back(
            {"phi_geq_geq cases", "four cases cover C(≥,≥)",
             std::to_string(uncovered) + " words of length <= " + std::to_string(opt().n_max) +
                 " match no case (first: " + first +
                 "); handled by 00(va+1)v' -> 01(phi(v)+1)phi(0v')"});
    }
    {
      const auto r = verify(bijection("phi_leq_lt"), opt().n_max);
      if (!r.passed())
        report_.errata.push_back({"phi_leq_lt", "bijection C(≤,<) -> C(≥,≤)",
                                  r.counterexamples.empty() ? "" : r.counterexamples.front()});
    }
  }

  void structure_suite() {
    guarded("structure", "C8 binomial coefficients", [&] {
      const S c8 = closed_form_series(family("C8"), std::max<std::size_t>(opt().order, 16));
      bool ok = true;
      for (std::size_t n = 0; n <= 16; ++n)
        for (std::size_t k = 0; k <= n; ++k)
          if (n > 0 && c8.coeff(n, k) != binom(static_cast<long>(n), 2 * static_cast<long>(k) + 1))
            ok = false;
      check("structure", "C8 binomial coefficients", ok);
    });
    guarded("structure", "C16(x,y) = C15(x,xy)", [&] {
      const std::size_t o = std::max<std::size_t>(opt().order, 20);
      check("structure", "C16(x,y) = C15(x,xy)",
            closed_form_series(family("C16"), o) ==
                substitute_xy_for_y(closed_form_series(family("C15"), o)));
    });
    {
      const RelationPair a{Relation::Ge, Relation::Lt}, b{Relation::Le, Relation::Gt};
      bool counts = true;
      for (std::size_t n = 1; n <= opt().n_max; ++n)
        counts = counts && dist(a).total(n) == dist(b).total(n) &&
                 dist(a).total(n) == (mpz_class(1) << (n - 1));
      check("structure", "|C(≥,<)| = |C(≤,>)| = 2^(n-1)", counts);
      if (opt().n_max >= 5)
        check("structure", "C(≥,<) and C(≤,>) descent distributions differ at n=5",
              dist(a).row(5) != dist(b).row(5));
    }
    {
      bool same = true, differ = false;
      const RelationPair lg{Relation::Lt, Relation::Gt}, el{Relation::Eq, Relation::Lt},
          le{Relation::Lt, Relation::Eq};
      for (std::size_t n = 0; n <= opt().n_max; ++n)
        same = same && dist(lg).total(n) == dist(el).total(n) && dist(lg).total(n) == dist(le).total(n);
      for (std::size_t n = 0; n <= std::min<std::size_t>(4, opt().n_max); ++n)
        differ = differ || dist(lg).row(n) != dist(le).row(n);
      check("structure", "|C(<,>)| = |C(=,<)| = |C(<,=)|", same);
      if (opt().n_max >= 4)
        check("structure", "C(<,>) and C(<,=) descent distributions differ by n=4", differ);
    }
  }

  void pattern_suite() {
    const std::size_t nmax = std::min<std::size_t>(opt().n_max, 9);
    for (RelationPair p : all_pairs()) {
      const auto set = pair_to_pattern_set(p);
      bool ok = true;
      for (std::size_t n = 0; n <= nmax && ok; ++n)
        for_each_word(n, [&](std::span<const Letter> w) {
          if (avoids_pair(w, p) != avoids_patterns(w, set)) ok = false;
        });
      std::vector<std::string> names;
      for (const auto& q : set) names.push_back(q.to_string());
      check("patterns", p.to_string(true) + " = {" + join(names) + "}", ok);
    }
    for (const auto& printed : printed_pattern_sets()) {
      const RelationPair p = RelationPair::parse(printed.pair);
      std::vector<std::string> computed;
      for (const auto& q : pair_to_pattern_set(p)) computed.push_back(q.to_string());
      std::vector<std::string> sorted = printed.patterns;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != computed)
        report_.errata.push_back({"pattern set " + p.to_string(true) + " (" + printed.where + ")",
                                  join(printed.patterns), join(computed)});
    }
  }

  void dyck_suite() {
    const RelationPair p{Relation::Eq, Relation::Ge};
    bool ok = true;
    std::vector<std::string> bad;
    for (std::size_t n = 0; n <= opt().n_max; ++n) {
      std::uint64_t count = 0;
      for_each_word(n, [&](std::span<const Letter> w) {
        if (!to_dyck(CatalanWord::from_trusted({w.begin(), w.end()})).contains("DUDU")) ++count;
      });
      if (mpz_class(std::to_string(count)) != dist(p).total(n)) {
        ok = false;
        bad.push_back("n=" + std::to_string(n));
      }
    }
    check("dyck", "DUDU-avoiding Dyck paths = |C(=,≥)|", ok, join(bad));
  }

  TableRow row_for(RelationPair p) {
    const auto& f = classify(p);
    TableRow r;
    r.pair = p.to_string(true);
    r.family = f.id;
    r.oeis = f.oeis;
    std::vector<std::string> counts;
    for (std::size_t n = 1; n <= opt().n_max; ++n) counts.push_back(dist(p).total(n).get_str());
    r.computed = join(counts);
    if (!f.printed_counts.empty()) {
      r.printed = join_numbers(f.printed_counts);
      for (std::size_t i = 0; i < f.printed_counts.size() && i + 1 <= opt().n_max; ++i)
        r.passed = r.passed && dist(p).total(i + 1) == f.printed_counts[i];
    } else {
      r.printed = f.sequence_label;
      try {
        for (std::size_t n = 1; n <= opt().n_max; ++n)
          r.passed = r.passed && count_formula(f, n) == dist(p).total(n);
      } catch (const Error&) {
        r.passed = false;
      }
    }
    return r;
  }

  void tables() {
    using R = Relation;
    const RelationPair t1[] = {{R::Le, R::Ge}, {R::Le, R::Ne}, {R::Le, R::Le}, {R::Ne, R::Le}};
    for (RelationPair p : t1) report_.table1.push_back(row_for(p));
    const RelationPair t2[] = {
        {R::Eq, R::Eq}, {R::Eq, R::Ge}, {R::Ge, R::Eq}, {R::Eq, R::Gt}, {R::Gt, R::Eq},
        {R::Eq, R::Le}, {R::Le, R::Eq}, {R::Eq, R::Lt}, {R::Lt, R::Eq}, {R::Lt, R::Gt},
        {R::Eq, R::Ne}, {R::Ne, R::Eq}, {R::Ge, R::Ge}, {R::Lt, R::Lt}, {R::Ge, R::Gt},
        {R::Gt, R::Ge}, {R::Gt, R::Lt}, {R::Ge, R::Le}, {R::Le, R::Lt}, {R::Lt, R::Le},
        {R::Ge, R::Lt}, {R::Le, R::Gt}, {R::Ge, R::Ne}, {R::Gt, R::Gt}, {R::Gt, R::Le},
        {R::Gt, R::Ne}, {R::Lt, R::Ge}, {R::Ne, R::Ge}, {R::Lt, R::Ne}, {R::Ne, R::Gt},
        {R::Ne, R::Lt}, {R::Ne, R::Ne}};
    for (RelationPair p : t2) report_.table2.push_back(row_for(p));
    for (const auto& r : report_.table1) check("tables", "constant table " + r.pair, r.passed);
    for (const auto& r : report_.table2) check("tables", "sequence table " + r.pair, r.passed);
  }

  void printed_expression_errata() {
    const std::size_t nmax = opt().n_max;
    auto first_mismatch = [&](auto printed, auto actual) -> std::string {
      for (std::size_t n = 0; n <= nmax; ++n)
        if (printed(n) != actual(n))
          return "n=" + std::to_string(n) + ": printed " + printed(n).get_str() + ", actual " +
                 actual(n).get_str();
      return "";
    };
    auto list = [&](auto fn, std::size_t from) {
      std::vector<std::string> v;
      for (std::size_t n = from; n <= nmax; ++n) v.push_back(fn(n).get_str());
      return join(v);
    };
    auto motz = [](std::size_t n) { return special(SpecialKind::Motzkin, n); };
    if (!first_mismatch(motzkin_printed_sum, motz).empty())
      report_.errata.push_back({"Motzkin formula sum binom(2n,k) C_k",
                                list(motzkin_printed_sum, 0), list(motz, 0)});
    const RelationPair ne_lt{Relation::Ne, Relation::Lt};
    auto oracle_ne_lt = [&](std::size_t n) { return dist(ne_lt).total(n); };
    if (!first_mismatch(alternating_motzkin_printed, oracle_ne_lt).empty())
      report_.errata.push_back({"count of C(≠,<) with binom(n-k-1,k)",
                                list(alternating_motzkin_printed, 1), list(oracle_ne_lt, 1)});
    const RelationPair gt_le{Relation::Gt, Relation::Le};
    auto pell_next = [](std::size_t n) { return special(SpecialKind::Pell, n + 1); };
    auto oracle_gt_le = [&](std::size_t n) { return dist(gt_le).total(n); };
    if (!first_mismatch(pell_next, oracle_gt_le).empty())
      report_.errata.push_back(
          {"count of C(>,≤) as P_{n+1}", list(pell_next, 1), list(oracle_gt_le, 1)});

    // Functional equations exactly as printed.
    const std::size_t o = opt().order;
    const S x = S::x(o), y = S::y(o), one = S::constant(1, o);
    const S inv = reciprocal(1 - x);
    const S c7 = fixed_point(
        [&](const S& C) { return 1 + x * inv + x * x * inv + x * x * y * inv * C; }, one);
    if (c7 != closed(family("C7")))
      report_.errata.push_back({"C7 functional equation with x^2y/(1-x) C",
                                c7.truncated(5).pretty(), closed(family("C7")).truncated(5).pretty()});
    const S x3 = x * x * x;
    const S c15 =
        fixed_point([&](const S& C) { return 1 + x + x * x * C + x * (C - 1) + x3 * y * C; }, one);
    if (c15 != closed(family("C15")))
      report_.errata.push_back({"C15 functional equation with x^3y C",
                                c15.truncated(5).pretty(), closed(family("C15")).truncated(5).pretty()});

    // Descent total of C(<,≠) with the printed -x^6 in the numerator.
    {
      PrintedForms r{o};
      const S lit = r.printed_d13();
      const S actual = at_y1(dy(closed(family("C13"))));
      if (lit != actual)
        report_.errata.push_back({"descent total of C(<,≠) with -x^6 in the numerator",
                                  lit.truncated(8).pretty(), actual.truncated(8).pretty()});
    }
  }

  ConformanceReport report_;
  std::map<RelationPair, DistributionTable> dists_;
  std::map<std::string, S> closed_;
};

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

bool ConformanceReport::passed() const { return failures() == 0; }

std::size_t ConformanceReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::string ConformanceReport::to_markdown() const {
  std::ostringstream out;
  out << "# Conformance report\n\n";
  out << "n_max = " << options.n_max << ", order = " << options.order << "\n\n";
  out << "Result: " << (passed() ? "PASS" : "FAIL") << " (" << checks.size() - failures() << "/"
      << checks.size() << " checks passed)\n\n";
  auto table = [&](const char* title, const std::vector<TableRow>& rows) {
    out << "## " << title << "\n\n";
    out << "| (X,Y) | Printed | Computed (n = 1.." << options.n_max
        << ") | OEIS | Family | Status |\n";
    out << "|---|---|---|---|---|---|\n";
    for (const auto& r : rows)
      out << "| (" << r.pair << ") | " << md_escape(r.printed) << " | " << r.computed << " | "
          << r.oeis << " | " << r.family << " | " << (r.passed ? "pass" : "FAIL") << " |\n";
    out << "\n";
  };
  table("Constant classes", table1);
  table("Counting sequences", table2);
  out << "## Checks\n\n| Suite | Check | Status | Detail |\n|---|---|---|---|\n";
  for (const auto& c : checks)
    out << "| " << c.suite << " | " << md_escape(c.name) << " | " << (c.passed ? "pass" : "FAIL")
        << " | " << md_escape(c.detail) << " |\n";
  out << "\n## Errata\n\n";
  if (errata.empty()) out << "None detected.\n";
  for (const auto& e : errata)
    out << "- **" << e.topic << "**: printed `" << e.printed << "`; computed `" << e.computed
        << "`\n";
  return out.str();
}

std::string ConformanceReport::to_json() const {
  nlohmann::ordered_json j;
  j["n_max"] = options.n_max;
  j["order"] = options.order;
  j["passed"] = passed();
  auto rows = [](const std::vector<TableRow>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& r : v)
      a.push_back({{"pair", r.pair},
                   {"family", r.family},
                   {"printed", r.printed},
                   {"computed", r.computed},
                   {"oeis", r.oeis},
                   {"passed", r.passed}});
    return a;
  };
  j["table1"] = rows(table1);
  j["table2"] = rows(table2);
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    cs.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(cs);
  nlohmann::ordered_json es = nlohmann::ordered_json::array();
  for (const auto& e : errata)
    es.push_back({{"topic", e.topic}, {"printed", e.printed}, {"computed", e.computed}});
  j["errata"] = std::move(es);
  return j.dump(2);
}

ConformanceReport run_conformance(const ConformanceOptions& options) {
  return Runner(options).run();
}

}  // namespace catwords
