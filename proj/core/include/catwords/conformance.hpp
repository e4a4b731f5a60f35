#pragma once

#include <string>
#include <vector>

namespace catwords {

struct ConformanceOptions {
  std::size_t n_max = 10;
  std::size_t order = 12;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::string detail;
};

// A printed statement that disagrees with computation.
struct Erratum {
  std::string topic;
  std::string printed;
  std::string computed;
};

struct TableRow {
  std::string pair;  // "≥,≤"
  std::string family;
  std::string printed;  // numeric prefix or formula label
  std::string computed;  // oracle counts n = 1..n_max
  std::string oeis;
  bool passed = true;
};

struct ConformanceReport {
  ConformanceOptions options;
  std::vector<CheckResult> checks;
  std::vector<TableRow> table1;
  std::vector<TableRow> table2;
  std::vector<Erratum> errata;

  bool passed() const;
  std::size_t failures() const;
  std::string to_markdown() const;
  std::string to_json() const;
};

ConformanceReport run_conformance(const ConformanceOptions& options = {});

// Pattern listings as printed, for comparison with pair_to_pattern_set.
struct PrintedPatternSet {
  std::string pair;      // ASCII "X,Y"
  std::string where;     // "statement", "proof", "overview"
  std::vector<std::string> patterns;
};
const std::vector<PrintedPatternSet>& printed_pattern_sets();

}  // namespace catwords
