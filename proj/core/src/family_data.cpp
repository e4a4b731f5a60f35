#include <vector>

#include "catwords/families.hpp"

namespace catwords {

namespace {

constexpr Relation LT = Relation::Lt;
constexpr Relation GT = Relation::Gt;
constexpr Relation LE = Relation::Le;
constexpr Relation GE = Relation::Ge;
constexpr Relation EQ = Relation::Eq;
constexpr Relation NE = Relation::Ne;

FamilyRecord bivariate(std::string id, std::vector<RelationPair> pairs, std::string oeis) {
  FamilyRecord f;
  f.id = std::move(id);
  f.kind = FamilyKind::Bivariate;
  f.pairs = std::move(pairs);
  f.oeis = std::move(oeis);
  f.closed_form = true;
  f.functional_equation = true;
  f.univariate_closed_form = true;
  f.descent_closed_form = true;
  return f;
}

FamilyRecord univariate(std::string id, RelationPair p, std::string oeis, std::string label) {
  FamilyRecord f;
  f.id = std::move(id);
  f.kind = FamilyKind::Univariate;
  f.pairs = {p};
  f.oeis = std::move(oeis);
  f.sequence_label = std::move(label);
  f.count_formula = true;
  return f;
}

FamilyRecord constant(std::string id, RelationPair p, std::vector<long> counts) {
  FamilyRecord f;
  f.id = std::move(id);
  f.kind = FamilyKind::Constant;
  f.pairs = {p};
  f.constant_formula = true;
  f.count_formula = true;
  f.printed_counts = std::move(counts);
  return f;
}

std::vector<FamilyRecord> build() {
  std::vector<FamilyRecord> r;

  auto c1 = bivariate("C1", {{EQ, GE}, {GE, EQ}}, "A102407");
  c1.count_formula = true;
  c1.printed_counts = {1, 2, 4, 10, 26, 72, 206, 606, 1820, 5558};
  c1.printed_expansion = {{1}, {1}, {2}, {3, 1}, {5, 5}, {8, 16, 2}, {13, 43, 16}};
  c1.printed_descent_total = {3, {1, 5, 20, 75, 271, 964, 3397}};
  r.push_back(c1);

  auto c2 = bivariate("C2", {{EQ, LE}, {LE, EQ}}, "A143013");
  c2.count_formula = true;
  c2.printed_counts = {1, 2, 3, 7, 17, 43, 114, 310, 861, 2433};
  c2.printed_expansion = {{1}, {1}, {2}, {2, 1}, {2, 5}, {2, 13, 2}, {2, 25, 16}};
  c2.printed_descent_total = {3, {1, 5, 17, 57, 188, 610, 1971}};
  r.push_back(c2);

  auto c3 = bivariate("C3", {{LT, GT}}, "A105633");
  c3.count_peers = {{EQ, LT}, {LT, EQ}};
  c3.count_formula = true;
  c3.sequence_label = "sum (-1)^k/(n-k) binom(n-k,k) binom(2n-3k,n-2k-1)";
  c3.printed_expansion = {{1}, {1}, {2}, {4}, {8, 1}, {16, 6}, {32, 24, 1}};
  c3.printed_descent_total = {4, {1, 6, 26, 100, 363, 1277}};
  r.push_back(c3);

  auto c4 = bivariate("C4", {{EQ, NE}, {NE, EQ}}, "A086615");
  c4.count_formula = true;
  c4.printed_counts = {1, 2, 4, 8, 17, 38, 89, 216, 539, 1374};
  c4.printed_expansion = {{1}, {1}, {2}, {3, 1}, {4, 4}, {5, 10, 2}, {6, 20, 12}};
  c4.printed_descent_total = {3, {1, 4, 14, 44, 134, 400, 1184}};
  r.push_back(c4);

  auto c5 = bivariate("C5", {{GE, GE}}, "A001006");
  c5.functional_equation = false;
  c5.count_peers = {{LT, LT}};
  c5.count_formula = true;
  c5.sequence_label = "m_n (Motzkin numbers)";
  c5.printed_expansion = {{1}, {1}, {2}, {3, 1}, {5, 4}, {8, 12, 1}, {13, 31, 7}};
  c5.printed_descent_total = {3, {1, 4, 14, 45, 140, 427, 1288}};
  r.push_back(c5);

  auto c6 = bivariate("C6", {{GE, GT}, {GT, GE}, {GT, LT}}, "A082582");
  c6.count_formula = true;
  c6.printed_counts = {1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905};
  c6.printed_expansion = {{1}, {1}, {2}, {4, 1}, {8, 5}, {16, 18, 1}, {32, 56, 9}};
  c6.printed_descent_total = {3, {1, 5, 20, 74, 263, 914, 3134}};
  r.push_back(c6);

  auto c7 = bivariate("C7", {{LE, LT}, {LT, LE}, {GE, LE}}, "A000045");
  c7.count_formula = true;
  c7.sequence_label = "F_{n+1} (Fibonacci number)";
  c7.printed_expansion = {{1}, {1}, {2}, {2, 1}, {2, 3}, {2, 5, 1}, {2, 7, 4}};
  c7.printed_descent_total = {3, {1, 3, 7, 15, 30, 58, 109}};
  r.push_back(c7);

  auto c8 = bivariate("C8", {{GE, LT}}, "A011782");
  c8.count_peers = {{LE, GT}};
  c8.count_formula = true;
  c8.sequence_label = "2^{n-1}";
  c8.printed_expansion = {{1}, {1}, {2}, {3, 1}, {4, 4}, {5, 10, 1}, {6, 20, 6}};
  c8.printed_descent_total = {3, {1, 4, 12, 32, 80, 192, 448}};
  r.push_back(c8);

  auto c8b = bivariate("C8b", {{LE, GT}}, "A011782");
  c8b.count_peers = {{GE, LT}};
  c8b.count_formula = true;
  c8b.descent_closed_form = false;
  c8b.sequence_label = "2^{n-1}";
  r.push_back(c8b);

  auto c9 = bivariate("C9", {{GE, NE}}, "A000124");
  c9.count_formula = true;
  c9.sequence_label = "binom(n,2)+1";
  c9.printed_expansion = {{1}, {1}, {2}, {3, 1}, {4, 3}, {5, 6}, {6, 10}};
  c9.printed_descent_total = {3, {1, 3, 6, 10, 15, 21, 28}};
  r.push_back(c9);

  auto c10 = bivariate("C10", {{GT, LE}}, "A000129");
  c10.count_formula = true;
  c10.sequence_label = "P_{n+1} (Pell numbers)";
  c10.printed_expansion = {{1}, {1}, {2}, {4, 1}, {8, 4}, {16, 12, 1}, {32, 32, 6}};
  c10.printed_descent_total = {3, {1, 4, 14, 44, 131, 376, 1052}};
  r.push_back(c10);

  auto c11 = bivariate("C11", {{GT, NE}}, "New");
  c11.printed_counts = {1, 2, 5, 13, 34, 90, 242, 660, 1821, 5073};
  c11.printed_expansion = {{1}, {1}, {2}, {4, 1}, {8, 5}, {16, 18}, {32, 56, 2}};
  c11.printed_descent_total = {3, {1, 5, 18, 60, 196, 632, 2015}};
  r.push_back(c11);

  auto c12 = bivariate("C12", {{LT, GE}, {NE, GE}}, "A000027");
  c12.count_formula = true;
  c12.descent_closed_form = false;
  c12.sequence_label = "n";
  r.push_back(c12);

  auto c13 = bivariate("C13", {{LT, NE}}, "New");
  c13.printed_counts = {1, 2, 3, 6, 12, 25, 54, 119, 267, 608};
  c13.printed_expansion = {{1}, {1}, {2}, {3}, {5, 1}, {8, 4}, {13, 12}};
  c13.printed_descent_total = {4, {1, 4, 12, 35, 97, 262}};
  r.push_back(c13);

  auto c14 = bivariate("C14", {{NE, GT}}, "A152225");
  c14.printed_counts = {1, 2, 4, 9, 22, 56, 146, 388, 1048, 2869};
  c14.printed_expansion = {{1}, {1}, {2}, {4}, {8, 1}, {16, 6}, {32, 24}};
  c14.printed_descent_total = {4, {1, 6, 24, 84, 280, 912}};
  r.push_back(c14);

  auto c15 = bivariate("C15", {{NE, LT}}, "A292460");
  c15.count_formula = true;
  c15.printed_counts = {1, 2, 4, 8, 17, 37, 82, 185, 423, 978};
  c15.printed_expansion = {{1}, {1}, {2}, {3, 1}, {5, 3}, {8, 9}, {13, 22, 2}};
  c15.printed_descent_total = {3, {1, 3, 9, 26, 71, 191, 508}};
  r.push_back(c15);

  auto c16 = bivariate("C16", {{NE, NE}}, "A026418");
  c16.count_formula = true;
  c16.printed_counts = {1, 2, 3, 6, 11, 22, 43, 87, 176, 362};
  c16.printed_expansion = {{1}, {1}, {2}, {3}, {5, 1}, {8, 3}, {13, 9}};
  c16.printed_descent_total = {4, {1, 3, 9, 22, 55, 131}};
  r.push_back(c16);

  r.push_back(univariate("UNIVAR1", {EQ, EQ}, "A247333", "sum_{k=1}^{n} binom(k,n-k) m_{k-1}"));
  auto u2 = univariate("UNIVAR2", {EQ, GT}, "A087626",
                       "(1-2x^2-sqrt(1-4x+4x^3))/(2x(1-x))");
  u2.univariate_closed_form = true;
  u2.count_peers = {{GT, EQ}};
  r.push_back(u2);
  auto u3 = u2;
  u3.id = "UNIVAR3";
  u3.pairs = {{GT, EQ}};
  u3.count_peers = {{EQ, GT}};
  r.push_back(u3);
  auto u4 = univariate("UNIVAR4", {EQ, LT}, "A105633",
                       "sum (-1)^k/(n-k) binom(n-k,k) binom(2n-3k,n-2k-1)");
  u4.count_peers = {{LT, EQ}, {LT, GT}};
  r.push_back(u4);
  auto u5 = u4;
  u5.id = "UNIVAR5";
  u5.pairs = {{LT, EQ}};
  u5.count_peers = {{EQ, LT}, {LT, GT}};
  r.push_back(u5);
  auto u6 = univariate("UNIVAR6", {LT, LT}, "A001006", "m_n (Motzkin numbers)");
  u6.count_peers = {{GE, GE}};
  r.push_back(u6);
  r.push_back(univariate("UNIVAR7", {GT, GT}, "A159771",
                         "sum 1/(n-k) binom(n-k,k) binom(n-k,k+1) 2^{n-2k-1}"));

  auto k1 = constant("CONST1", {LE, GE}, {1, 2, 2, 2});
  k1.count_peers = {{LE, NE}};
  r.push_back(k1);
  auto k2 = constant("CONST2", {LE, NE}, {1, 2, 2, 2});
  k2.count_peers = {{LE, GE}};
  r.push_back(k2);
  r.push_back(constant("CONST3", {LE, LE}, {1, 2, 1, 2, 1, 2}));
  r.push_back(constant("CONST4", {NE, LE}, {1, 2, 3, 3, 3}));
  return r;
}

}  // namespace

const std::vector<FamilyRecord>& registry() {
  static const std::vector<FamilyRecord> records = build();
  return records;
}

}  // namespace catwords
