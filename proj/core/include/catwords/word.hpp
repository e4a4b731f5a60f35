#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catwords {

using Letter = std::uint32_t;

// A Catalan word: empty, or starts with 0 and every letter is at most one
// more than its predecessor. Instances are always valid.
class CatalanWord {
 public:
  CatalanWord() = default;

  // Throws NotCatalan on the first violating position.
  static CatalanWord validate(std::span<const long long> seq);
  static CatalanWord validate(std::initializer_list<long long> seq);

  // Skips validation; caller guarantees the invariant.
  static CatalanWord from_trusted(std::vector<Letter> letters) {
    CatalanWord w;
    w.letters_ = std::move(letters);
    return w;
  }

  // Accepts "0,1,2,2" or the compact digit form "0122".
  static CatalanWord parse(std::string_view text);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  // Adds `delta` to every letter (the w+1 operation of the first return
  // decomposition). The result is not a Catalan word in general, so it is
  // returned as raw letters.
  std::vector<Letter> shifted(Letter delta) const;

  // "0,1,2,2"
  std::string to_string() const;
  // "0122"; letters >= 10 fall back to the comma form.
  std::string to_compact() const;

  friend bool operator==(const CatalanWord&, const CatalanWord&) = default;
  friend auto operator<=>(const CatalanWord&, const CatalanWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// Number of positions i with w_i > w_{i+1}.
std::size_t descent_count(std::span<const Letter> w) noexcept;
inline std::size_t descent_count(const CatalanWord& w) noexcept {
  return descent_count(w.letters());
}

// Checks the growth rule on raw letters (no throw).
bool is_catalan(std::span<const Letter> w) noexcept;

// Default enumeration cap; CATALAN_AVOID_CAP overrides it.
inline constexpr std::size_t kDefaultEnumerationCap = 20;
std::size_t enumeration_cap();

// Throws ResourceLimit when n exceeds `cap`.
void check_cap(std::size_t n, std::size_t cap);

// Visits every word of length n in lexicographic order. The span passed to
// the visitor is only valid for the duration of the call.
using WordVisitor = std::function<void(std::span<const Letter>)>;
void for_each_word(std::size_t n, const WordVisitor& visit,
                   std::size_t cap = enumeration_cap());

std::vector<CatalanWord> generate_all(std::size_t n,
                                      std::size_t cap = enumeration_cap());

// w = 0 (w'+1) w''. Throws EmptyWord on ε.
struct FirstReturn {
  CatalanWord inner;  // w'
  CatalanWord rest;   // w''
};
FirstReturn first_return_decompose(const CatalanWord& w);
CatalanWord recompose(const CatalanWord& inner, const CatalanWord& rest);

// Dyck paths.
enum class Step : char { Up = 'U', Down = 'D' };

class DyckPath {
 public:
  DyckPath() = default;

  // Throws MalformedPath for a negative prefix, an unbalanced total, or a
  // character outside {U, D}.
  static DyckPath parse(std::string_view text);
  static DyckPath from_steps(std::vector<Step> steps);

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t semilength() const noexcept { return steps_.size() / 2; }
  std::string to_string() const;

  // Whether `factor` (e.g. "DUDU") occurs as a contiguous run of steps.
  bool contains(std::string_view factor) const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

DyckPath to_dyck(const CatalanWord& w);
CatalanWord from_dyck(const DyckPath& p);

}  // namespace catwords
