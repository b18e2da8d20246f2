#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>

#include "sqmodel/density.hpp"

namespace sqm {

enum class ModelKind { PositiveSquare, Square };

std::string to_string(ModelKind model);
ModelKind model_from_string(std::string_view text);

// A generator or its inverse, encoded as a nonzero integer: +k is the k-th
// generator, -k its inverse.
class Letter {
 public:
  Letter() : code_(1) {}
  explicit Letter(int code) : code_(code) {}
  static Letter make(int generator, int sign) { return Letter(sign * generator); }

  int generator() const { return code_ < 0 ? -code_ : code_; }
  int sign() const { return code_ < 0 ? -1 : 1; }
  int code() const { return code_; }
  Letter inverse() const { return Letter(-code_); }

  friend bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
  friend bool operator!=(Letter a, Letter b) { return a.code_ != b.code_; }
  friend bool operator<(Letter a, Letter b) { return a.code_ < b.code_; }

 private:
  int code_;
};

// Relators in both models are words of length exactly four.
struct Relator {
  std::array<Letter, 4> letters;

  bool positive() const {
    for (const Letter l : letters)
      if (l.sign() < 0) return false;
    return true;
  }

  friend bool operator==(const Relator& a, const Relator& b) { return a.letters == b.letters; }
  friend auto operator<=>(const Relator& a, const Relator& b) {
    for (int i = 0; i < 4; ++i)
      if (a.letters[i].code() != b.letters[i].code())
        return a.letters[i].code() <=> b.letters[i].code();
    return std::strong_ordering::equal;
  }
};

std::string to_string(const Relator& r);
std::ostream& operator<<(std::ostream& os, const Relator& r);

struct RelatorHash {
  std::size_t operator()(const Relator& r) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (const Letter l : r.letters) {
      h ^= static_cast<std::uint64_t>(static_cast<std::int64_t>(l.code())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// True iff no position (including the wraparound pair) carries a letter next
// to its own inverse.
bool is_cyclically_reduced(std::span<const Letter> word);
bool is_cyclically_reduced(const Relator& r);

// Size of the admissible word universe: n^4 positive words, or the exact
// count of cyclically reduced length-4 words in the square model.  Small n
// are counted by direct enumeration, larger n by the closed form
// (2n-1)^4 + (2n-1), which the test suite validates against enumeration.
std::uint64_t count_words(std::uint64_t n, ModelKind model);

// floor(n^{4d}) respectively floor((2n-1)^{4d}).  Evaluated in extended
// precision and then verified exactly: with 4d = a/b in lowest terms the
// result r is the unique integer with r^b <= base^a < (r+1)^b, checked in
// integer arithmetic.  Exact for the supported range n <= 10^4.
std::uint64_t num_relators(std::uint64_t n, const Density& d, ModelKind model);

}  // namespace sqm
