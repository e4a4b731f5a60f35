#include "catwords/oracle.hpp"

#include <cstdint>
#include "json.hpp"
#include <sstream>

namespace catwords {

WindowFilter::WindowFilter(RelationPair p) {
  // Three representatives per comparison class are enough; small values
  // realize every consistent shape.
  for (Letter a = 0; a < 3; ++a)
    for (Letter b = 0; b < 3; ++b)
      for (Letter c = 0; c < 3; ++c)
        if (p.matches(a, b, c)) forbidden_[index(a, b, c)] = true;
}

WindowFilter::WindowFilter(std::span<const ConsecutivePattern> patterns) {
  for (Letter a = 0; a < 3; ++a)
    for (Letter b = 0; b < 3; ++b)
      for (Letter c = 0; c < 3; ++c) {
        const std::array<Letter, 3> t{a, b, c};
        for (const auto& q : patterns)
          if (q.isomorphic_to(t)) forbidden_[index(a, b, c)] = true;
      }
}

DistributionTable::DistributionTable(std::string label, std::size_t n_max)
    : label_(std::move(label)), rows_(n_max + 1) {
  for (std::size_t n = 0; n <= n_max; ++n) rows_[n].assign(n == 0 ? 1 : n, 0);
}

mpz_class DistributionTable::at(std::size_t n, std::size_t k) const {
  if (n >= rows_.size() || k >= rows_[n].size()) return 0;
  return rows_[n][k];
}

mpz_class DistributionTable::total(std::size_t n) const {
  mpz_class s = 0;
  for (const auto& v : rows_.at(n)) s += v;
  return s;
}

void DistributionTable::add(std::size_t n, std::size_t k, const mpz_class& v) {
  rows_.at(n).at(k) += v;
}

std::string DistributionTable::to_csv() const {
  std::ostringstream out;
  out << "n,k,count\n";
  for (std::size_t n = 0; n < rows_.size(); ++n)
    for (std::size_t k = 0; k < rows_[n].size(); ++k)
      if (rows_[n][k] != 0 || n == 0) out << n << ',' << k << ',' << rows_[n][k].get_str() << '\n';
  return out.str();
}

namespace {

nlohmann::ordered_json row_json(const std::string& label, std::size_t n,
                                const std::vector<mpz_class>& row) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] == 0 && n != 0) continue;
    if (row[k].fits_ulong_p())
      counts[std::to_string(k)] = row[k].get_ui();
    else
      counts[std::to_string(k)] = row[k].get_str();
  }
  nlohmann::ordered_json j;
  j["pair"] = label;
  j["n"] = n;
  j["counts"] = std::move(counts);
  return j;
}

// Depth-first extension that only inspects the last three letters.
// Counters are 64-bit: C_20 < 2^63 bounds every cell under the default cap.
class Search {
 public:
  Search(const WindowFilter& f, std::size_t n_max)
      : filter_(f), n_max_(n_max), cells_(n_max + 1, std::vector<std::uint64_t>(n_max + 1, 0)) {}

  void run() {
    cells_[0][0] = 1;
    if (n_max_ == 0) return;
    buf_.assign(n_max_, 0);
    buf_[0] = 0;
    step(1, 0);
  }

  const std::vector<std::vector<std::uint64_t>>& cells() const { return cells_; }

 private:
  void step(std::size_t len, std::size_t des) {
    ++cells_[len][des];
    if (len == n_max_) return;
    const Letter last = buf_[len - 1];
    for (Letter l = 0; l <= last + 1; ++l) {
      if (len >= 2 && filter_.forbids(buf_[len - 2], last, l)) continue;
      buf_[len] = l;
      step(len + 1, des + (l < last ? 1 : 0));
    }
  }

  const WindowFilter& filter_;
  std::size_t n_max_;
  std::vector<Letter> buf_;
  std::vector<std::vector<std::uint64_t>> cells_;
};

void visit_exact(const WindowFilter& f, std::size_t n, std::vector<Letter>& buf,
                 const WordVisitor& visit) {
  if (buf.size() == n) {
    visit(buf);
    return;
  }
  const Letter last = buf.back();
  for (Letter l = 0; l <= last + 1; ++l) {
    if (buf.size() >= 2 && f.forbids(buf[buf.size() - 2], last, l)) continue;
    buf.push_back(l);
    visit_exact(f, n, buf, visit);
    buf.pop_back();
  }
}

void enumerate_filtered(const WindowFilter& f, std::size_t n, const WordVisitor& visit,
                        std::size_t cap) {
  check_cap(n, cap);
  std::vector<Letter> buf;
  if (n == 0) {
    visit(buf);
    return;
  }
  buf.reserve(n);
  buf.push_back(0);
  visit_exact(f, n, buf, visit);
}

}  // namespace

std::string DistributionTable::to_json(std::size_t n) const {
  return row_json(label_, n, rows_.at(n)).dump();
}

std::string DistributionTable::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t n = 0; n < rows_.size(); ++n) arr.push_back(row_json(label_, n, rows_[n]));
  return arr.dump();
}

void enumerate_avoiding(RelationPair p, std::size_t n, const WordVisitor& visit,
                        std::size_t cap) {
  enumerate_filtered(WindowFilter(p), n, visit, cap);
}

std::vector<CatalanWord> enumerate_avoiding(const WindowFilter& f, std::size_t n,
                                            std::size_t cap) {
  std::vector<CatalanWord> out;
  enumerate_filtered(
      f, n,
      [&](std::span<const Letter> w) {
        out.push_back(CatalanWord::from_trusted({w.begin(), w.end()}));
      },
      cap);
  return out;
}

std::vector<CatalanWord> enumerate_avoiding(RelationPair p, std::size_t n, std::size_t cap) {
  return enumerate_avoiding(WindowFilter(p), n, cap);
}

namespace {

DistributionTable run_distribution(const WindowFilter& f, std::size_t n_max, std::size_t cap,
                                   std::string label) {
  check_cap(n_max, cap);
  Search search(f, n_max);
  search.run();
  DistributionTable table(std::move(label), n_max);
  for (std::size_t n = 0; n <= n_max; ++n)
    for (std::size_t k = 0; k < table.row(n).size(); ++k) {
      const std::uint64_t c = search.cells()[n][k];
      if (c) table.add(n, k, mpz_class(std::to_string(c)));
    }
  return table;
}

}  // namespace

DistributionTable distribution(const WindowFilter& f, std::size_t n_max, std::size_t cap) {
  return run_distribution(f, n_max, cap, "");
}

DistributionTable distribution(RelationPair p, std::size_t n_max, std::size_t cap) {
  return run_distribution(WindowFilter(p), n_max, cap, p.to_string());
}

mpz_class count_avoiding(const WindowFilter& f, std::size_t n, std::size_t cap) {
  return distribution(f, n, cap).total(n);
}

mpz_class count_avoiding(RelationPair p, std::size_t n, std::size_t cap) {
  return count_avoiding(WindowFilter(p), n, cap);
}

}  // namespace catwords
