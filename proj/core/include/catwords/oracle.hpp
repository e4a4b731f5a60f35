#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "catwords/patterns.hpp"
#include "catwords/word.hpp"

namespace catwords {

// Set of forbidden length-3 window shapes. A shape is the triple of
// comparisons (a?b, b?c, a?c); pairs and length-3 pattern sets both reduce to
// one of these, so the search below serves both.
class WindowFilter {
 public:
  explicit WindowFilter(RelationPair p);
  explicit WindowFilter(std::span<const ConsecutivePattern> patterns);

  bool forbids(Letter a, Letter b, Letter c) const noexcept {
    return forbidden_[index(a, b, c)];
  }

 private:
  static constexpr int cmp(Letter a, Letter b) noexcept { return a < b ? 0 : (a == b ? 1 : 2); }
  static constexpr std::size_t index(Letter a, Letter b, Letter c) noexcept {
    return static_cast<std::size_t>(cmp(a, b) * 9 + cmp(b, c) * 3 + cmp(a, c));
  }
  std::array<bool, 27> forbidden_{};
};

// c_p(n, k) for all n <= n_max.
class DistributionTable {
 public:
  DistributionTable() = default;
  DistributionTable(std::string label, std::size_t n_max);

  const std::string& label() const noexcept { return label_; }
  std::size_t n_max() const noexcept { return rows_.size() - 1; }

  // Zero outside the stored range.
  mpz_class at(std::size_t n, std::size_t k) const;
  const std::vector<mpz_class>& row(std::size_t n) const { return rows_.at(n); }
  mpz_class total(std::size_t n) const;

  void add(std::size_t n, std::size_t k, const mpz_class& v);

  // "n,k,count" rows sorted by (n, k); zero entries are omitted except (0,0).
  std::string to_csv() const;
  // {"pair": label, "n": n, "counts": {"k": count}}
  std::string to_json(std::size_t n) const;
  // Array of the per-n objects for n = 0..n_max.
  std::string to_json() const;

  friend bool operator==(const DistributionTable& a, const DistributionTable& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::string label_;
  std::vector<std::vector<mpz_class>> rows_;
};

void enumerate_avoiding(RelationPair p, std::size_t n, const WordVisitor& visit,
                        std::size_t cap = enumeration_cap());
std::vector<CatalanWord> enumerate_avoiding(RelationPair p, std::size_t n,
                                            std::size_t cap = enumeration_cap());
std::vector<CatalanWord> enumerate_avoiding(const WindowFilter& f, std::size_t n,
                                            std::size_t cap = enumeration_cap());

mpz_class count_avoiding(RelationPair p, std::size_t n, std::size_t cap = enumeration_cap());
mpz_class count_avoiding(const WindowFilter& f, std::size_t n,
                         std::size_t cap = enumeration_cap());

DistributionTable distribution(RelationPair p, std::size_t n_max,
                               std::size_t cap = enumeration_cap());
DistributionTable distribution(const WindowFilter& f, std::size_t n_max,
                               std::size_t cap = enumeration_cap());

}  // namespace catwords
