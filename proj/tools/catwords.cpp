// catwords: enumerate, count and cross-check pattern-avoiding Catalan words.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "catwords/bijections.hpp"
#include "catwords/conformance.hpp"
#include "catwords/errors.hpp"
#include "catwords/families.hpp"
#include "catwords/oracle.hpp"
#include "catwords/patterns.hpp"
#include "catwords/series.hpp"
#include "catwords/word.hpp"
#include "json.hpp"

using namespace catwords;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kCap = 3, kUnavailable = 4 };

constexpr std::size_t kMaxOrder = 64;

struct Globals {
  std::string format = "plain";
  std::string out;
  bool unsafe_cap = false;

  std::size_t cap() const {
    return unsafe_cap ? std::numeric_limits<std::size_t>::max() : enumeration_cap();
  }
};

struct UsageError : Error {
  using Error::Error;
};

void check_order(std::size_t order) {
  if (order > kMaxOrder)
    throw UsageError("order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

// ---- enumerate --------------------------------------------------------------

struct EnumerateArgs {
  std::string avoid;
  std::size_t length = 0;
};

int run_enumerate(const EnumerateArgs& a, const Globals& g, std::ostream& os) {
  const RelationPair p = RelationPair::parse(a.avoid);
  const auto words = enumerate_avoiding(p, a.length, g.cap());
  if (g.format == "json") {
    json j;
    j["pair"] = p.to_string();
    j["n"] = a.length;
    j["count"] = words.size();
    j["words"] = json::array();
    for (const auto& w : words) j["words"].push_back(w.to_compact());
    os << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    os << "word,descents\n";
    for (const auto& w : words) os << w.to_compact() << "," << descent_count(w) << "\n";
  } else {
    for (const auto& w : words) os << w.to_compact() << "\n";
  }
  return kOk;
}

// ---- count ------------------------------------------------------------------

struct CountArgs {
  std::string avoid;
  std::size_t to = 10;
  bool by_descents = false;
};

int run_count(const CountArgs& a, const Globals& g, std::ostream& os) {
  const RelationPair p = RelationPair::parse(a.avoid);
  const auto d = distribution(p, a.to, g.cap());
  if (a.by_descents) {
    if (g.format == "json") {
      os << d.to_json() << "\n";
    } else if (g.format == "csv") {
      os << d.to_csv();
    } else {
      for (std::size_t n = 0; n <= a.to; ++n) {
        std::vector<std::string> cells;
        for (const auto& c : d.row(n)) cells.push_back(c.get_str());
        os << "n=" << n << ": " << join(cells, " ") << "\n";
      }
    }
    return kOk;
  }
  std::vector<std::string> counts;
  for (std::size_t n = 1; n <= a.to; ++n) counts.push_back(d.total(n).get_str());
  if (g.format == "json") {
    json j;
    j["pair"] = p.to_string();
    j["from"] = 1;
    j["to"] = a.to;
    j["counts"] = json::array();
    for (const auto& c : counts) j["counts"].push_back(std::stoull(c));
    os << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    os << "n,count\n";
    for (std::size_t n = 1; n <= a.to; ++n) os << n << "," << counts[n - 1] << "\n";
  } else {
    os << join(counts, ",") << "\n";
  }
  return kOk;
}

// ---- series -----------------------------------------------------------------

struct SeriesArgs {
  std::string avoid;
  std::size_t order = 12;
  std::string what = "bivariate";
  std::string method = "closed";
};

BivariateSeries compute_series(const FamilyRecord& f, const SeriesArgs& a, bool closed) {
  if (a.what == "bivariate")
    return closed ? closed_form_series(f, a.order) : functional_equation_series(f, a.order);
  if (a.what == "univariate") {
    if (!closed) return at_y1(functional_equation_series(f, a.order));
    if (f.univariate_closed_form) return univariate_closed_form(f, a.order);
    return at_y1(closed_form_series(f, a.order));
  }
  if (closed) return descent_total_closed_form(f, a.order);
  return at_y1(dy(functional_equation_series(f, a.order)));
}

int run_series(const SeriesArgs& a, const Globals& g, std::ostream& os) {
  check_order(a.order);
  const RelationPair p = RelationPair::parse(a.avoid);
  const FamilyRecord& f = classify(p);
  if (a.method != "both") {
    const auto s = compute_series(f, a, a.method == "closed");
    if (g.format == "json") {
      json j;
      j["pair"] = p.to_string();
      j["family"] = f.id;
      j["what"] = a.what;
      j["method"] = a.method;
      j["series"] = json::parse(s.to_json());
      os << j.dump(2) << "\n";
    } else {
      os << s.pretty(false) << "\n";
    }
    return kOk;
  }
  const auto c = compute_series(f, a, true);
  const auto fp = compute_series(f, a, false);
  const bool agree = c == fp;
  if (g.format == "json") {
    json j;
    j["pair"] = p.to_string();
    j["family"] = f.id;
    j["what"] = a.what;
    j["method"] = "both";
    j["agree"] = agree;
    j["closed"] = json::parse(c.to_json());
    j["fixpoint"] = json::parse(fp.to_json());
    os << j.dump(2) << "\n";
  } else {
    os << "closed:   " << c.pretty(false) << "\n";
    os << "fixpoint: " << fp.pretty(false) << "\n";
    os << (agree ? "agree" : "DIFFER") << " to order " << a.order << "\n";
  }
  return agree ? kOk : kFailed;
}

// ---- bijection --------------------------------------------------------------

struct BijectionArgs {
  std::string name;
  std::string apply;
  bool verify = false;
  std::size_t to = 10;
};

int run_bijection(const BijectionArgs& a, const Globals& g, std::ostream& os) {
  const BijectionSpec& b = bijection(a.name);
  if (a.verify) {
    const auto r = verify(b, a.to);
    if (g.format == "json") {
      os << r.to_json() << "\n";
    } else {
      os << b.name << ": " << b.source.to_string() << " -> " << b.target.to_string()
         << ", n <= " << a.to << "\n";
      const std::pair<const char*, bool> checks[] = {{"totality", r.totality},
                                                     {"image", r.image},
                                                     {"injective", r.injective},
                                                     {"surjective", r.surjective},
                                                     {"descents", r.descents}};
      for (const auto& [name, ok] : checks) os << "  " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
      for (const auto& c : r.counterexamples) os << "  " << c << "\n";
      os << (r.passed() ? "all checks pass" : "verification failed") << "\n";
    }
    return r.passed() ? kOk : kFailed;
  }
  const CatalanWord in = CatalanWord::parse(a.apply);
  const CatalanWord out = catwords::apply(b, in);
  if (g.format == "json") {
    json j;
    j["name"] = b.name;
    j["input"] = in.to_string();
    j["output"] = out.to_string();
    j["descents"] = {descent_count(in), descent_count(out)};
    os << j.dump(2) << "\n";
  } else {
    os << out.to_string() << "\n";
  }
  return kOk;
}

// ---- dyck -------------------------------------------------------------------

struct DyckArgs {
  std::string word;
  std::string path;
};

int run_dyck(const DyckArgs& a, const Globals& g, std::ostream& os) {
  CatalanWord w;
  DyckPath d;
  if (!a.path.empty()) {
    d = DyckPath::parse(a.path);
    w = from_dyck(d);
  } else {
    w = CatalanWord::parse(a.word);
    d = to_dyck(w);
  }
  if (g.format == "json") {
    json j;
    j["word"] = w.to_string();
    j["path"] = d.to_string();
    os << j.dump(2) << "\n";
  } else {
    os << (a.path.empty() ? d.to_string() : w.to_string()) << "\n";
  }
  return kOk;
}

// ---- conformance ------------------------------------------------------------

int run_conformance_cmd(const ConformanceOptions& o, const Globals& g, std::ostream& os) {
  check_order(o.order);
  check_cap(o.n_max, g.cap());
  const auto r = run_conformance(o);
  os << (g.format == "json" ? r.to_json() + "\n" : r.to_markdown());
  return r.passed() ? kOk : kFailed;
}

// ---- families ---------------------------------------------------------------

int run_families(const Globals& g, std::ostream& os) {
  json arr = json::array();
  for (const auto& f : registry()) {
    std::vector<std::string> pairs;
    for (auto p : f.pairs) pairs.push_back(p.to_string());
    const char* kind = f.kind == FamilyKind::Bivariate    ? "bivariate"
                       : f.kind == FamilyKind::Univariate ? "univariate"
                                                          : "constant";
    if (g.format == "json") {
      arr.push_back({{"id", f.id}, {"kind", kind}, {"pairs", pairs}, {"oeis", f.oeis}});
    } else if (g.format == "csv") {
      os << f.id << "," << kind << ",\"" << join(pairs, " ") << "\"," << f.oeis << "\n";
    } else {
      os << f.id << "\t" << kind << "\t" << join(pairs, " ") << (f.oeis.empty() ? "" : "\t")
         << f.oeis << "\n";
    }
  }
  if (g.format == "json") os << arr.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern-avoiding Catalan words and the descent statistic"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv", "md"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output to PATH instead of stdout");
  app.add_flag("--unsafe-cap", g.unsafe_cap, "Lift the enumeration length cap");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "List the words of C_n(X,Y)");
  enumerate->add_option("--avoid", ea.avoid, "Relation pair, e.g. \"<=,!=\"")->required();
  enumerate->add_option("--length,-n", ea.length, "Word length")->required();

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Count C_n(X,Y) for n = 1..N");
  count->add_option("--avoid", ca.avoid, "Relation pair")->required();
  count->add_option("--to", ca.to, "Largest length")->capture_default_str();
  count->add_flag("--by-descents", ca.by_descents, "Split counts by number of descents");

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "Truncated generating function of C(X,Y)");
  series->add_option("--avoid", sa.avoid, "Relation pair")->required();
  series->add_option("--order", sa.order, "Truncation order in x")->capture_default_str();
  series->add_option("--what", sa.what)
      ->check(CLI::IsMember({"bivariate", "univariate", "descent-total"}))
      ->capture_default_str();
  series->add_option("--method", sa.method)
      ->check(CLI::IsMember({"closed", "fixpoint", "both"}))
      ->capture_default_str();

  BijectionArgs ba;
  auto* bij = app.add_subcommand("bijection", "Apply or verify a descent-preserving map");
  bij->add_option("--name", ba.name, "Map name")->required();
  auto* apply_opt = bij->add_option("--apply", ba.apply, "Word to map, e.g. 0,1,1,0");
  auto* verify_flag = bij->add_flag("--verify", ba.verify, "Exhaustively verify the map");
  bij->add_option("--to", ba.to, "Largest length for --verify")->capture_default_str();
  apply_opt->excludes(verify_flag);

  DyckArgs da;
  auto* dyck = app.add_subcommand("dyck", "Convert between Catalan words and Dyck paths");
  auto* word_opt = dyck->add_option("--word", da.word, "Catalan word");
  auto* path_opt = dyck->add_option("--path", da.path, "Dyck path over U and D");
  word_opt->excludes(path_opt);

  ConformanceOptions co;
  auto* conf = app.add_subcommand("conformance", "Run every cross-check and print the report");
  conf->add_option("--to", co.n_max, "Largest word length")->capture_default_str();
  conf->add_option("--order", co.order, "Series order")->capture_default_str();

  auto* fams = app.add_subcommand("families", "List the generating-function families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (bij->parsed() && !ba.verify && apply_opt->count() == 0) {
    std::cerr << "bijection: one of --apply or --verify is required\n";
    return kUsage;
  }
  if (dyck->parsed() && word_opt->count() == 0 && path_opt->count() == 0) {
    std::cerr << "dyck: one of --word or --path is required\n";
    return kUsage;
  }

  std::ostringstream buf;
  int rc = kOk;
  try {
    if (enumerate->parsed()) rc = run_enumerate(ea, g, buf);
    else if (count->parsed()) rc = run_count(ca, g, buf);
    else if (series->parsed()) rc = run_series(sa, g, buf);
    else if (bij->parsed()) rc = run_bijection(ba, g, buf);
    else if (dyck->parsed()) rc = run_dyck(da, g, buf);
    else if (conf->parsed()) rc = run_conformance_cmd(co, g, buf);
    else if (fams->parsed()) rc = run_families(g, buf);
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << " (use --unsafe-cap or CATALAN_AVOID_CAP)\n";
    return kCap;
  } catch (const NotAvailable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnavailable;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotCatalan& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MalformedPath& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SourceViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }

  if (g.out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << g.out << "\n";
      return kFailed;
    }
    f << buf.str();
  }
  return rc;
}
