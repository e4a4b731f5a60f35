#include "catwords/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "catwords/errors.hpp"
#include "catwords/oracle.hpp"
#include "json.hpp"

namespace catwords {

namespace {

using View = std::span<const Letter>;

Letters shift(Letters w, Letter d) {
  for (auto& l : w) l += d;
  return w;
}

Letters cat(std::initializer_list<Letters> parts) {
  Letters out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Recursive calls must see strictly shorter words.
template <class F>
Letters recurse(F f, View part, std::size_t parent) {
  if (part.size() >= parent) throw MapIncomplete("recursion did not shrink the word");
  return f(part);
}

// w = 0 (inner+1) rest; inner is returned shifted down.
std::pair<Letters, Letters> split_first_return(View w) {
  std::size_t ret = 1;
  while (ret < w.size() && w[ret] != 0) ++ret;
  Letters inner;
  for (std::size_t i = 1; i < ret; ++i) inner.push_back(w[i] - 1);
  return {inner, Letters(w.begin() + static_cast<std::ptrdiff_t>(ret), w.end())};
}

Letters phi_geq_geq(View w) {
  if (w.empty()) return {};
  const std::size_t n = w.size();
  auto [u, rest] = split_first_return(w);
  if (rest.empty()) return cat({{0}, recurse(phi_geq_geq, u, n)});
  if (u.empty()) {
    // w = 0 0 ...
    auto [a, tail] = split_first_return(rest);
    if (tail.empty()) return cat({{0, 1}, shift(recurse(phi_geq_geq, a, n), 1)});
    // w = 00(va+1)v': not covered by the printed cases.
    View v(a.data(), a.size() - (a.empty() ? 0 : 1));
    return cat({{0, 1}, shift(recurse(phi_geq_geq, v, n), 1),
                recurse(phi_geq_geq, cat({{0}, tail}), n)});
  }
  // w = 0(va+1)v'
  View v(u.data(), u.size() - 1);
  return cat({{0, 1}, shift(recurse(phi_geq_geq, v, n), 1), recurse(phi_geq_geq, rest, n)});
}

Letters psi_geq_gt(View w) {
  if (w.empty()) return {};
  const std::size_t n = w.size();
  auto [u, rest] = split_first_return(w);
  if (u.empty()) return cat({{0}, recurse(psi_geq_gt, rest, n)});
  if (rest.empty()) return cat({{0}, shift(recurse(psi_geq_gt, u, n), 1)});
  if (u.size() == 1) return cat({{0}, shift(recurse(psi_geq_gt, rest, n), 1), {0}});
  if (u[u.size() - 1] != u[u.size() - 2] + 1)
    throw MapIncomplete("inner factor does not end with an ascent a(a+1)");
  View ua(u.data(), u.size() - 1);
  return cat({{0}, shift(recurse(psi_geq_gt, ua, n), 1), {0}, recurse(psi_geq_gt, rest, n)});
}

Letters phi_leq_lt(View w) {
  if (w.empty()) return {};
  const std::size_t n = w.size();
  if (std::all_of(w.begin(), w.end(), [](Letter l) { return l == 0; })) {
    Letters out(n, 1);
    out[0] = 0;
    return out;
  }
  std::size_t j = 0;
  while (j + 1 < n && w[j + 1] == 1) ++j;
  if (j == 0) throw MapIncomplete("word starts with 00 but is not constant");
  Letters head;
  for (Letter i = 0; i < j; ++i) head.push_back(i);
  if (j + 1 == n) return cat({head, {static_cast<Letter>(j - 1)}});
  View rest = w.subspan(j + 1);
  if (rest.front() != 0) throw MapIncomplete("run of ones not followed by a return to 0");
  return cat({head, shift(recurse(phi_leq_lt, rest, n), static_cast<Letter>(j)), {0}});
}

// Left to right: each maximal run k^j (j >= 2) followed by a letter m that
// satisfies `follows` becomes k m^j; scanning resumes inside the new run.
template <class Follows>
Letters rewrite_left_to_right(View in, Follows follows) {
  Letters w(in.begin(), in.end());
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    const std::size_t s = i;
    while (i + 1 < n && w[i + 1] == w[s]) ++i;
    const std::size_t j = i - s + 1;
    if (j >= 2 && i + 1 < n && follows(w[s], w[i + 1])) {
      const Letter k = w[s], m = w[i + 1];
      w[s] = k;
      std::fill(w.begin() + static_cast<std::ptrdiff_t>(s + 1),
                w.begin() + static_cast<std::ptrdiff_t>(i + 2), m);
      i = s + 1;
    } else {
      ++i;
    }
  }
  return w;
}

Letters rewrite_110_100(View w) {
  return rewrite_left_to_right(w, [](Letter k, Letter m) { return m < k; });
}

Letters rewrite_011_001(View w) {
  return rewrite_left_to_right(w, [](Letter k, Letter m) { return m == k + 1; });
}

// Right to left: a letter k followed by a maximal run m^j (j >= 2) with
// m = k+1 or m < k becomes k^j m.
Letters rewrite_eqne(View in) {
  Letters w(in.begin(), in.end());
  if (w.size() < 2) return w;
  std::size_t i = w.size() - 1;
  while (i >= 1) {
    std::size_t s = i;
    while (s > 0 && w[s - 1] == w[i]) --s;
    const std::size_t j = i - s + 1;
    const Letter m = w[i];
    if (j >= 2 && s >= 1 && (w[s - 1] + 1 == m || w[s - 1] > m)) {
      const Letter k = w[s - 1];
      std::fill(w.begin() + static_cast<std::ptrdiff_t>(s - 1),
                w.begin() + static_cast<std::ptrdiff_t>(i), k);
      w[i] = m;
      i -= 1;
    } else {
      if (s == 0) break;
      i = s - 1;
    }
  }
  return w;
}

constexpr Relation LT = Relation::Lt;
constexpr Relation GT = Relation::Gt;
constexpr Relation LE = Relation::Le;
constexpr Relation GE = Relation::Ge;
constexpr Relation EQ = Relation::Eq;
constexpr Relation NE = Relation::Ne;

std::string word_text(View w) { return CatalanWord::from_trusted({w.begin(), w.end()}).to_string(); }

}  // namespace

const std::vector<BijectionSpec>& bijections() {
  static const std::vector<BijectionSpec> specs = {
      {"rewrite_110_100", {GE, EQ}, {EQ, GE}, true,
       "k^j(k-l) -> k(k-l)^j, left to right", rewrite_110_100},
      {"rewrite_011_001", {LE, EQ}, {EQ, LE}, true,
       "k^j(k+1) -> k(k+1)^j, left to right", rewrite_011_001},
      {"rewrite_eqne", {EQ, NE}, {NE, EQ}, true,
       "k(k+1)^j -> k^j(k+1) and k(k-l)^j -> k^j(k-l), right to left", rewrite_eqne},
      {"phi_geq_geq", {GE, GE}, {LT, LT}, true, "first return recursion", phi_geq_geq},
      {"psi_geq_gt", {GE, GT}, {GT, LT}, true, "first return recursion", psi_geq_gt},
      {"phi_leq_lt", {LE, LT}, {GE, LE}, true, "recursion on the leading run 01^j",
       phi_leq_lt},
  };
  return specs;
}

const BijectionSpec& bijection(std::string_view name) {
  for (const auto& b : bijections())
    if (b.name == name) return b;
  throw ParseError("unknown bijection '" + std::string(name) + "'");
}

Letters apply_unchecked(const BijectionSpec& b, std::span<const Letter> w) { return b.map(w); }

CatalanWord apply(const BijectionSpec& b, const CatalanWord& w) {
  if (!avoids_pair(w.letters(), b.source))
    throw SourceViolation("word " + w.to_string() + " does not avoid " + b.source.to_string());
  Letters out = b.map(w.letters());
  if (out.size() != w.size() || !is_catalan(out))
    throw MapIncomplete("map produced " + word_text(out) + ", not a Catalan word of length " +
                        std::to_string(w.size()));
  return CatalanWord::from_trusted(std::move(out));
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["n"] = n_max;
  j["checks"] = {{"totality", totality},
                 {"image", image},
                 {"injective", injective},
                 {"surjective", surjective},
                 {"descents", descents}};
  j["counterexamples"] = counterexamples;
  return j.dump();
}

VerificationReport verify(const BijectionSpec& b, std::size_t n_max) {
  VerificationReport r;
  r.name = b.name;
  r.n_max = n_max;
  constexpr std::size_t kPerCheck = 5;
  std::map<std::string, std::size_t> logged;
  auto note = [&](const std::string& check, const std::string& text) {
    if (logged[check]++ < kPerCheck) r.counterexamples.push_back(check + ": " + text);
  };

  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto source = enumerate_avoiding(b.source, n);
    const auto target = enumerate_avoiding(b.target, n);
    std::set<Letters> targets;
    for (const auto& t : target) targets.insert({t.letters().begin(), t.letters().end()});

    std::map<Letters, Letters> seen;
    std::map<std::size_t, long> des_balance;
    for (const auto& t : target) --des_balance[descent_count(t)];
    for (const auto& w : source) {
      Letters img;
      try {
        img = b.map(w.letters());
      } catch (const Error& e) {
        r.totality = false;
        note("totality", w.to_string() + " (" + e.what() + ")");
        continue;
      }
      const std::string line = w.to_string() + " -> " + word_text(img);
      if (img.size() != n || !targets.count(img)) {
        r.image = false;
        note("image", line);
      }
      if (auto [it, fresh] = seen.emplace(img, Letters(w.letters().begin(), w.letters().end()));
          !fresh) {
        r.injective = false;
        note("injective", line + " (also " + word_text(it->second) + ")");
      }
      if (b.preserves_descents && descent_count(img) != descent_count(w)) {
        r.descents = false;
        note("descents", line);
      }
      ++des_balance[descent_count(w)];
    }
    std::size_t hit = 0;
    for (const auto& t : targets) hit += seen.count(t);
    if (hit != targets.size()) {
      r.surjective = false;
      note("surjective", "n=" + std::to_string(n) + ": |source|=" +
                             std::to_string(source.size()) + " |target|=" +
                             std::to_string(target.size()) + ", " +
                             std::to_string(targets.size() - hit) + " target words missed");
    }
    if (b.preserves_descents)
      for (const auto& [k, bal] : des_balance)
        if (bal != 0) {
          r.descents = false;
          note("descents", "n=" + std::to_string(n) + ": descent multisets differ at k=" +
                               std::to_string(k));
        }
  }
  return r;
}

}  // namespace catwords
