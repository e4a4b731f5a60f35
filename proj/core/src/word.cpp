#include "catwords/word.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "catwords/errors.hpp"

namespace catwords {

CatalanWord CatalanWord::validate(std::span<const long long> seq) {
  std::vector<Letter> letters;
  letters.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const long long v = seq[i];
    if (v < 0) throw NotCatalan(i);
    if (i == 0 && v != 0) throw NotCatalan(i);
    if (i > 0 && v > seq[i - 1] + 1) throw NotCatalan(i);
    letters.push_back(static_cast<Letter>(v));
  }
  return from_trusted(std::move(letters));
}

CatalanWord CatalanWord::validate(std::initializer_list<long long> seq) {
  return validate(std::span<const long long>(seq.begin(), seq.size()));
}

CatalanWord CatalanWord::parse(std::string_view text) {
  std::vector<long long> values;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                          s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "ε" || text == "eps") return {};

  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("bad letter in word: '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view tok = trim(text.substr(pos, comma - pos));
      long long v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("bad letter in word: '" + std::string(tok) + "'");
      values.push_back(v);
      pos = comma + 1;
    }
  }
  return validate(values);
}

std::vector<Letter> CatalanWord::shifted(Letter delta) const {
  std::vector<Letter> out(letters_);
  for (auto& l : out) l += delta;
  return out;
}

std::string CatalanWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::string CatalanWord::to_compact() const {
  std::string out;
  for (Letter l : letters_) {
    if (l >= 10) return to_string();
    out += static_cast<char>('0' + l);
  }
  return out;
}

std::size_t descent_count(std::span<const Letter> w) noexcept {
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) ++d;
  return d;
}

bool is_catalan(std::span<const Letter> w) noexcept {
  if (w.empty()) return true;
  if (w[0] != 0) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] > w[i - 1] + 1) return false;
  return true;
}

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("CATALAN_AVOID_CAP")) {
    std::size_t v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) return v;
  }
  return kDefaultEnumerationCap;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw ResourceLimit("length " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(cap));
}

namespace {

void extend(std::vector<Letter>& buf, std::size_t n, const WordVisitor& visit) {
  if (buf.size() == n) {
    visit(buf);
    return;
  }
  const Letter top = buf.back() + 1;
  for (Letter l = 0; l <= top; ++l) {
    buf.push_back(l);
    extend(buf, n, visit);
    buf.pop_back();
  }
}

}  // namespace

void for_each_word(std::size_t n, const WordVisitor& visit, std::size_t cap) {
  check_cap(n, cap);
  std::vector<Letter> buf;
  if (n == 0) {
    visit(buf);
    return;
  }
  buf.reserve(n);
  buf.push_back(0);
  extend(buf, n, visit);
}

std::vector<CatalanWord> generate_all(std::size_t n, std::size_t cap) {
  std::vector<CatalanWord> out;
  for_each_word(
      n,
      [&](std::span<const Letter> w) {
        out.push_back(CatalanWord::from_trusted({w.begin(), w.end()}));
      },
      cap);
  return out;
}

FirstReturn first_return_decompose(const CatalanWord& w) {
  if (w.empty()) throw EmptyWord();
  auto letters = w.letters();
  std::size_t ret = 1;
  while (ret < letters.size() && letters[ret] != 0) ++ret;
  std::vector<Letter> inner;
  inner.reserve(ret - 1);
  for (std::size_t i = 1; i < ret; ++i) inner.push_back(letters[i] - 1);
  std::vector<Letter> rest(letters.begin() + static_cast<std::ptrdiff_t>(ret), letters.end());
  return {CatalanWord::from_trusted(std::move(inner)), CatalanWord::from_trusted(std::move(rest))};
}

CatalanWord recompose(const CatalanWord& inner, const CatalanWord& rest) {
  std::vector<Letter> out;
  out.reserve(1 + inner.size() + rest.size());
  out.push_back(0);
  for (Letter l : inner.letters()) out.push_back(l + 1);
  out.insert(out.end(), rest.letters().begin(), rest.letters().end());
  return CatalanWord::from_trusted(std::move(out));
}

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
  long height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i] == Step::Up ? 1 : -1;
    if (height < 0)
      throw MalformedPath("path goes below the axis at step " + std::to_string(i));
  }
  if (height != 0) throw MalformedPath("path does not return to the axis");
  DyckPath p;
  p.steps_ = std::move(steps);
  return p;
}

DyckPath DyckPath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'U' || c == 'u')
      steps.push_back(Step::Up);
    else if (c == 'D' || c == 'd')
      steps.push_back(Step::Down);
    else
      throw MalformedPath(std::string("unexpected step character '") + c + "'");
  }
  return from_steps(std::move(steps));
}

std::string DyckPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += static_cast<char>(s);
  return out;
}

bool DyckPath::contains(std::string_view factor) const {
  return to_string().find(factor) != std::string::npos;
}

DyckPath to_dyck(const CatalanWord& w) {
  std::vector<Step> steps;
  steps.reserve(2 * w.size());
  Letter height = 0;
  for (Letter l : w.letters()) {
    for (; height > l; --height) steps.push_back(Step::Down);
    steps.push_back(Step::Up);
    height = l + 1;
  }
  for (; height > 0; --height) steps.push_back(Step::Down);
  return DyckPath::from_steps(std::move(steps));
}

CatalanWord from_dyck(const DyckPath& p) {
  std::vector<Letter> letters;
  letters.reserve(p.semilength());
  Letter height = 0;
  for (Step s : p.steps()) {
    if (s == Step::Up) {
      letters.push_back(height);
      ++height;
    } else {
      --height;
    }
  }
  return CatalanWord::from_trusted(std::move(letters));
}

}  // namespace catwords
