#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sqm {

// Density d in (0, 1), kept as an exact decimal fraction numerator/10^digits.
// Relator counts are floors of powers with exponent 4d, and those floors must
// be bit-identical across platforms, so d is never round-tripped through a
// binary float.  The canonical text (trailing zeros stripped) doubles as the
// serialization and as the key for per-trial seed derivation.
class Density {
 public:
  // Accepts "0.3", ".25", "0.6500" (at most 6 fractional digits, value in (0,1)).
  static Density parse(std::string_view text);

  std::int64_t numerator() const { return numerator_; }
  std::int64_t denominator() const { return denominator_; }
  const std::string& text() const { return text_; }
  double value() const { return static_cast<double>(numerator_) / static_cast<double>(denominator_); }

  friend bool operator==(const Density& a, const Density& b) {
    return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
  }
  friend bool operator<(const Density& a, const Density& b) {
    return a.numerator_ * b.denominator_ < b.numerator_ * a.denominator_;
  }

 private:
  Density(std::int64_t num, std::int64_t den, std::string text)
      : numerator_(num), denominator_(den), text_(std::move(text)) {}

  std::int64_t numerator_;
  std::int64_t denominator_;  // power of ten
  std::string text_;
};

std::ostream& operator<<(std::ostream& os, const Density& d);

}  // namespace sqm
