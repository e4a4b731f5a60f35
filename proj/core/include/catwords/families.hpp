#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "catwords/patterns.hpp"
#include "catwords/series.hpp"

namespace catwords {

enum class FamilyKind {
  Bivariate,   // C1..C16, C8b: full descent refinement
  Univariate,  // length counting only
  Constant,    // finitely many words per length
};

// Leading coefficients as printed, starting at x^start.
struct PrintedPrefix {
  std::size_t start = 0;
  std::vector<long> values;
};

struct FamilyRecord {
  std::string id;
  FamilyKind kind = FamilyKind::Bivariate;
  // Pairs sharing this bivariate distribution; pairs.front() is the
  // representative used for oracle runs.
  std::vector<RelationPair> pairs;
  // Pairs in other families with the same counts but not necessarily the
  // same descent distribution.
  std::vector<RelationPair> count_peers;

  bool closed_form = false;
  bool functional_equation = false;
  bool count_formula = false;
  bool constant_formula = false;
  bool descent_closed_form = false;
  bool univariate_closed_form = false;

  std::string oeis;
  // Formula column of the length-counting table, when it is not a list.
  std::string sequence_label;
  // Counts for n = 1, 2, ... as printed in the tables.
  std::vector<long> printed_counts;
  // Printed bivariate expansion, one y-coefficient list per power of x.
  std::vector<std::vector<long>> printed_expansion;
  // Printed descent-total expansion.
  PrintedPrefix printed_descent_total;
};

const std::vector<FamilyRecord>& registry();
const FamilyRecord& classify(RelationPair p);
// Throws ParseError for an unknown id.
const FamilyRecord& family(std::string_view id);

// Methods for eliminating the auxiliary unknowns of the C1, C3, C4 and C13
// equations.
enum class AuxStrategy { Symbolic, CoIterate };

// Closed form of C(x,y). NotAvailable for non-bivariate families.
BivariateSeries closed_form_series(const FamilyRecord& f, std::size_t order = kDefaultOrder);
// Fixed point of the family's equation. NotAvailable where none is given.
BivariateSeries functional_equation_series(const FamilyRecord& f,
                                           std::size_t order = kDefaultOrder,
                                           AuxStrategy aux = AuxStrategy::Symbolic);

// at_y1(dy(C)) from the closed form, y-free.
BivariateSeries descent_total_series(const FamilyRecord& f, std::size_t order = kDefaultOrder);
// The printed closed form for D_p. NotAvailable where none is printed.
BivariateSeries descent_total_closed_form(const FamilyRecord& f,
                                          std::size_t order = kDefaultOrder);
// The printed closed form for C_p(x). NotAvailable where none is printed.
BivariateSeries univariate_closed_form(const FamilyRecord& f, std::size_t order = kDefaultOrder);

// c_p(n) from the printed formula or named sequence; n = 0 gives 1.
// NotAvailable for families without one.
mpz_class count_formula(const FamilyRecord& f, std::size_t n);

enum class SpecialKind { Catalan, Motzkin, Fibonacci, Pell };
mpz_class special(SpecialKind kind, std::size_t n);

// Binomial with the zero convention outside 0 <= b <= a.
mpz_class binom(long a, long b);

// Printed expressions known to disagree with the counts; kept so reports can
// show the disagreement.
mpz_class motzkin_printed_sum(std::size_t n);        // sum binom(2n,k) C_k
mpz_class alternating_motzkin_printed(std::size_t n);  // with binom(n-k-1,k)

}  // namespace catwords
