// Acceptance criteria. Prints one PASS/FAIL line per criterion; exit status is
// the number of failing criteria. `acceptance N` runs criterion N only.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "catwords/bijections.hpp"
#include "catwords/conformance.hpp"
#include "catwords/families.hpp"
#include "catwords/oracle.hpp"
#include "catwords/patterns.hpp"
#include "catwords/series.hpp"
#include "catwords/word.hpp"

using namespace catwords;
using S = BivariateSeries;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

RelationPair P(const char* s) { return RelationPair::parse(s); }

const DistributionTable& dist(RelationPair p, std::size_t n_max = 12) {
  static std::map<RelationPair, DistributionTable> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, distribution(p, n_max)).first;
  return it->second;
}

// Expansions as printed, one y-coefficient list per power of x from x^0.
const std::map<std::string, std::vector<std::vector<long>>> kExpansions = {
    {"C1", {{1}, {1}, {2}, {3, 1}, {5, 5}, {8, 16, 2}, {13, 43, 16}}},
    {"C2", {{1}, {1}, {2}, {2, 1}, {2, 5}, {2, 13, 2}, {2, 25, 16}}},
    {"C3", {{1}, {1}, {2}, {4}, {8, 1}, {16, 6}, {32, 24, 1}}},
    {"C4", {{1}, {1}, {2}, {3, 1}, {4, 4}, {5, 10, 2}, {6, 20, 12}}},
    {"C5", {{1}, {1}, {2}, {3, 1}, {5, 4}, {8, 12, 1}, {13, 31, 7}}},
    {"C6", {{1}, {1}, {2}, {4, 1}, {8, 5}, {16, 18, 1}, {32, 56, 9}}},
    {"C7", {{1}, {1}, {2}, {2, 1}, {2, 3}, {2, 5, 1}, {2, 7, 4}}},
    {"C8", {{1}, {1}, {2}, {3, 1}, {4, 4}, {5, 10, 1}, {6, 20, 6}}},
    {"C9", {{1}, {1}, {2}, {3, 1}, {4, 3}, {5, 6}, {6, 10}}},
    {"C10", {{1}, {1}, {2}, {4, 1}, {8, 4}, {16, 12, 1}, {32, 32, 6}}},
    {"C11", {{1}, {1}, {2}, {4, 1}, {8, 5}, {16, 18}, {32, 56, 2}}},
    {"C13", {{1}, {1}, {2}, {3}, {5, 1}, {8, 4}, {13, 12}}},
    {"C14", {{1}, {1}, {2}, {4}, {8, 1}, {16, 6}, {32, 24}}},
    {"C15", {{1}, {1}, {2}, {3, 1}, {5, 3}, {8, 9}, {13, 22, 2}}},
    {"C16", {{1}, {1}, {2}, {3}, {5, 1}, {8, 3}, {13, 9}}},
};

// Numeric prefixes of the counting-sequence table, n = 1..10.
const std::vector<std::pair<const char*, std::vector<long>>> kTable2 = {
    {"=,>=", {1, 2, 4, 10, 26, 72, 206, 606, 1820, 5558}},
    {">=,=", {1, 2, 4, 10, 26, 72, 206, 606, 1820, 5558}},
    {"=,<=", {1, 2, 3, 7, 17, 43, 114, 310, 861, 2433}},
    {"<=,=", {1, 2, 3, 7, 17, 43, 114, 310, 861, 2433}},
    {"=,!=", {1, 2, 4, 8, 17, 38, 89, 216, 539, 1374}},
    {"!=,=", {1, 2, 4, 8, 17, 38, 89, 216, 539, 1374}},
    {">=,>", {1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905}},
    {">,>=", {1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905}},
    {">,<", {1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905}},
    {">,!=", {1, 2, 5, 13, 34, 90, 242, 660, 1821, 5073}},
    {"<,!=", {1, 2, 3, 6, 12, 25, 54, 119, 267, 608}},
    {"!=,>", {1, 2, 4, 9, 22, 56, 146, 388, 1048, 2869}},
    {"!=,<", {1, 2, 4, 8, 17, 37, 82, 185, 423, 978}},
    {"!=,!=", {1, 2, 3, 6, 11, 22, 43, 87, 176, 362}},
};

// Printed descent totals: first power of x, then coefficients.
const std::map<std::string, std::pair<std::size_t, std::vector<long>>> kDescentTotals = {
    {"C1", {3, {1, 5, 20, 75, 271, 964, 3397}}},  {"C2", {3, {1, 5, 17, 57, 188, 610, 1971}}},
    {"C3", {4, {1, 6, 26, 100, 363, 1277}}},      {"C4", {3, {1, 4, 14, 44, 134, 400, 1184}}},
    {"C5", {3, {1, 4, 14, 45, 140, 427, 1288}}},  {"C6", {3, {1, 5, 20, 74, 263, 914, 3134}}},
    {"C7", {3, {1, 3, 7, 15, 30, 58, 109}}},      {"C8", {3, {1, 4, 12, 32, 80, 192, 448}}},
    {"C9", {3, {1, 3, 6, 10, 15, 21, 28}}},       {"C10", {3, {1, 4, 14, 44, 131, 376, 1052}}},
    {"C11", {3, {1, 5, 18, 60, 196, 632, 2015}}}, {"C13", {4, {1, 4, 12, 35, 97, 262}}},
    {"C14", {4, {1, 6, 24, 84, 280, 912}}},       {"C15", {3, {1, 3, 9, 26, 71, 191, 508}}},
    {"C16", {4, {1, 3, 9, 22, 55, 131}}},
};

Outcome series_conformance() {
  Outcome o;
  for (const auto& [id, rows] : kExpansions) {
    const S c = closed_form_series(family(id), 12);
    for (std::size_t n = 0; n < rows.size(); ++n) {
      std::vector<mpq_class> want(rows[n].begin(), rows[n].end());
      o.expect(c.coeff(n) == YPolynomial(want), id + " x^" + std::to_string(n));
    }
  }
  const S c12 = closed_form_series(family("C12"), 12);
  for (std::size_t n = 1; n <= 12; ++n) o.expect(c12.coeff(n).at_one() == n, "C12 count n");
  return o;
}

Outcome two_path() {
  Outcome o;
  std::size_t families = 0;
  for (const auto& f : registry()) {
    if (f.kind != FamilyKind::Bivariate || f.id == "C5") continue;
    ++families;
    const S c = closed_form_series(f, 24);
    o.expect(functional_equation_series(f, 24, AuxStrategy::Symbolic) == c, f.id);
    o.expect(functional_equation_series(f, 24, AuxStrategy::CoIterate) == c, f.id + " co-iterated");
  }
  o.expect(families == 16, "expected 16 families with both forms");
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  std::size_t bivariate = 0, total = 0;
  for (const auto& f : registry())
    for (RelationPair p : f.pairs) {
      ++total;
      const auto& d = dist(p);
      if (f.kind == FamilyKind::Bivariate) {
        ++bivariate;
        const S c = closed_form_series(f, 10);
        for (std::size_t n = 0; n <= 10; ++n)
          for (std::size_t k = 0; k <= n; ++k)
            o.expect(d.at(n, k) == c.coeff(n, k), p.to_string() + " c(n,k)");
        const S u = at_y1(c);
        for (std::size_t n = 0; n <= 10; ++n)
          o.expect(d.total(n) == u.coeff(n, 0), p.to_string() + " y=1");
      } else {
        for (std::size_t n = 0; n <= 10; ++n)
          o.expect(d.total(n) == count_formula(f, n), p.to_string() + " count");
      }
    }
  o.expect(bivariate == 25, "25 bivariate pairs");
  o.expect(total == 36, "36 pairs");
  const std::pair<const char*, std::vector<long>> constants[] = {
      {"<=,>=", {1, 2, 2, 2, 2, 2, 2, 2, 2, 2}},
      {"<=,!=", {1, 2, 2, 2, 2, 2, 2, 2, 2, 2}},
      {"<=,<=", {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}},
      {"!=,<=", {1, 2, 3, 3, 3, 3, 3, 3, 3, 3}}};
  for (const auto& [pair, want] : constants)
    for (std::size_t n = 1; n <= 10; ++n)
      o.expect(dist(P(pair)).total(n) == want[n - 1], std::string(pair) + " constant");
  return o;
}

Outcome sequence_prefixes() {
  Outcome o;
  for (const auto& [pair, want] : kTable2) {
    const auto& f = classify(P(pair));
    const S series = at_y1(closed_form_series(f, 10));
    for (std::size_t n = 1; n <= 10; ++n) {
      o.expect(dist(P(pair)).total(n) == want[n - 1], std::string(pair) + " oracle");
      o.expect(series.coeff(n, 0) == want[n - 1], std::string(pair) + " series");
    }
  }
  return o;
}

Outcome descent_totals() {
  Outcome o;
  for (const auto& [id, prefix] : kDescentTotals) {
    const auto& f = family(id);
    const S via_dy = at_y1(dy(closed_form_series(f, 12)));
    const S via_closed = descent_total_closed_form(f, 12);
    const auto& [start, values] = prefix;
    for (std::size_t i = 0; i < values.size(); ++i) {
      o.expect(via_dy.coeff(start + i, 0) == values[i], id + " dC/dy");
      o.expect(via_closed.coeff(start + i, 0) == values[i], id + " closed form");
    }
    for (std::size_t n = 0; n < start; ++n) o.expect(via_dy.coeff(n).is_zero(), id + " low order");
  }
  return o;
}

Outcome closed_formulas() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& f : registry()) {
    if (!f.count_formula) continue;
    ++checked;
    for (std::size_t n = 0; n <= 12; ++n) {
      try {
        o.expect(count_formula(f, n) == dist(f.pairs[0]).total(n), f.id + " n=" + std::to_string(n));
      } catch (const std::exception& e) {
        o.expect(false, f.id + ": " + e.what());
      }
    }
  }
  o.expect(checked >= 20, "formula-bearing families");
  return o;
}

Outcome bijection_checks(const ConformanceReport& report) {
  Outcome o;
  for (const auto& b : bijections()) {
    const auto r = verify(b, 10);
    o.expect(r.passed(), b.name + " verify");
  }
  const std::pair<const char*, std::pair<const char*, const char*>> examples[] = {
      {"rewrite_eqne", {"01012323412300", "00101232341230"}},
      {"phi_geq_geq", {"0123010122", "0111010001"}},
      {"psi_geq_gt", {"01234012343454", "01220012345653"}},
      {"phi_leq_lt", {"01101101111011", "01234567899420"}},
  };
  for (const auto& [name, io] : examples) {
    const auto out = apply(bijection(name), CatalanWord::parse(io.first)).to_compact();
    o.expect(out == io.second, std::string(name) + " example gives " + out);
  }
  bool reported = false;
  for (const auto& e : report.errata) reported = reported || e.topic == "rewrite_110_100 worked example";
  o.expect(reported, "rewrite_110_100 example reported");
  return o;
}

Outcome structural() {
  Outcome o;
  const S c8 = closed_form_series(family("C8"), 16);
  for (std::size_t n = 1; n <= 16; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      o.expect(c8.coeff(n, k) == binom(static_cast<long>(n), 2 * static_cast<long>(k) + 1),
               "C8 binomial");
  o.expect(closed_form_series(family("C16"), 20) ==
               substitute_xy_for_y(closed_form_series(family("C15"), 20)),
           "C16 = C15(x,xy)");
  const auto a = P(">=,<"), b = P("<=,>");
  for (std::size_t n = 1; n <= 10; ++n) {
    o.expect(dist(a).total(n) == mpz_class(1) << (n - 1), "2^(n-1) for >=,<");
    o.expect(dist(b).total(n) == mpz_class(1) << (n - 1), "2^(n-1) for <=,>");
  }
  o.expect(dist(a).at(5, 0) == 5 && dist(a).at(5, 1) == 10 && dist(a).at(5, 2) == 1 &&
               dist(a).total(5) == 16,
           ">=,< at n=5");
  o.expect(dist(a).row(5) != dist(b).row(5), "descent distributions at n=5 differ");
  return o;
}

Outcome pattern_sets(const ConformanceReport& report) {
  Outcome o;
  for (RelationPair p : all_pairs()) {
    const auto set = pair_to_pattern_set(p);
    for (std::size_t n = 0; n <= 9; ++n)
      for_each_word(n, [&](std::span<const Letter> w) {
        if (avoids_pair(w, p) != avoids_patterns(w, set)) o.expect(false, p.to_string());
      });
  }
  for (const char* topic : {"pattern set ≠,≥ (overview)", "pattern set ≥,< (proof)",
                            "pattern set ≠,< (statement)"}) {
    bool found = false;
    for (const auto& e : report.errata) found = found || e.topic == topic;
    o.expect(found, std::string("erratum: ") + topic);
  }
  return o;
}

Outcome dyck() {
  Outcome o;
  const long table[] = {1, 2, 4, 10, 26, 72, 206, 606, 1820, 5558};
  for (std::size_t n = 1; n <= 10; ++n) {
    long count = 0;
    for (const auto& w : generate_all(n)) count += !to_dyck(w).contains("DUDU");
    o.expect(dist(P("=,>=")).total(n) == count, "n=" + std::to_string(n));
    o.expect(count == table[n - 1], "table value n=" + std::to_string(n));
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  std::function<ConformanceReport&()> report = [] () -> ConformanceReport& {
    static ConformanceReport r = run_conformance({10, 12});
    return r;
  };
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"bivariate series match printed expansions", series_conformance},
      {"closed form equals functional-equation fixed point to order 24", two_path},
      {"oracle equals series for 25 pairs and counts for 36 pairs, n <= 10", oracle_agreement},
      {"counting-sequence prefixes", sequence_prefixes},
      {"descent totals match printed prefixes", descent_totals},
      {"count formulas equal oracle, n <= 12", closed_formulas},
      {"bijections and worked examples", [&] { return bijection_checks(report()); }},
      {"structural identities", structural},
      {"pattern-set equivalence and listed discrepancies", [&] { return pattern_sets(report()); }},
      {"DUDU-avoiding Dyck paths", dyck},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first;
    if (!o.ok) {
      std::cout << " [";
      for (std::size_t j = 0; j < o.notes.size() && j < 6; ++j) std::cout << (j ? "; " : "") << o.notes[j];
      if (o.notes.size() > 6) std::cout << "; +" << o.notes.size() - 6 << " more";
      std::cout << "]";
    }
    std::cout << "\n";
    failures += !o.ok;
  }
  return failures;
}
