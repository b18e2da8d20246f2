#include "sqmodel/words.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sqm {

std::string to_string(ModelKind model) {
  return model == ModelKind::PositiveSquare ? "positive" : "square";
}

ModelKind model_from_string(std::string_view text) {
  if (text == "positive") return ModelKind::PositiveSquare;
  if (text == "square") return ModelKind::Square;
  throw std::invalid_argument("unknown model '" + std::string(text) + "'");
}

std::string to_string(const Relator& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Relator& r) {
  for (int i = 0; i < 4; ++i) {
    if (i) os << ' ';
    os << r.letters[i].code();
  }
  return os;
}

bool is_cyclically_reduced(std::span<const Letter> word) {
  const std::size_t len = word.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (word[i] == word[(i + 1) % len].inverse()) return false;
  }
  return true;
}

bool is_cyclically_reduced(const Relator& r) {
  return is_cyclically_reduced(std::span<const Letter>(r.letters));
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(base), exp);
  if (!v.fits_ulong_p())
    throw std::overflow_error("word count exceeds 64-bit range");
  return static_cast<std::uint64_t>(v.get_ui());
}

// Exhaustive count of cyclically reduced length-4 words over 2n letters.
std::uint64_t count_square_words_enumerated(std::uint64_t n) {
  const int k = static_cast<int>(2 * n);
  std::uint64_t count = 0;
  std::array<Letter, 4> w;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          const auto decode = [&](int v) {
            return v < static_cast<int>(n) ? Letter(v + 1) : Letter(-(v - static_cast<int>(n) + 1));
          };
          w = {decode(a), decode(b), decode(c), decode(d)};
          if (is_cyclically_reduced(std::span<const Letter>(w))) ++count;
        }
  return count;
}

}  // namespace

std::uint64_t count_words(std::uint64_t n, ModelKind model) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (model == ModelKind::PositiveSquare) return checked_pow(n, 4);
  // Enumeration budget (2n)^4 <= 65536.
  if (n <= 8) return count_square_words_enumerated(n);
  const std::uint64_t m = 2 * n - 1;
  return checked_pow(m, 4) + m;
}

std::uint64_t num_relators(std::uint64_t n, const Density& d, ModelKind model) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const std::uint64_t base = model == ModelKind::PositiveSquare ? n : 2 * n - 1;
  if (base == 1) return 1;  // 1^{4d} = 1

  // Exponent 4d = a/b in lowest terms; b divides 4 * 10^6.
  std::int64_t a = 4 * d.numerator();
  std::int64_t b = d.denominator();
  const std::int64_t g = std::gcd(a, b);
  a /= g;
  b /= g;

  mpz_class power;  // base^a
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(a));
  if (b == 1) {
    if (!power.fits_ulong_p()) throw std::overflow_error("relator count exceeds 64-bit range");
    return static_cast<std::uint64_t>(power.get_ui());
  }

  const long double x = std::pow(static_cast<long double>(base),
                                 static_cast<long double>(a) / static_cast<long double>(b));
  if (x >= 1.8e19L) throw std::overflow_error("relator count exceeds 64-bit range");
  std::uint64_t r = static_cast<std::uint64_t>(std::floor(x));

  const auto pow_b = [&](std::uint64_t v) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(b));
    return p;
  };
  // Slide to the exact floor; the extended-precision guess is off by at most
  // a few units even in the worst case.
  while (r > 0 && pow_b(r) > power) --r;
  while (pow_b(r + 1) <= power) ++r;
  return r;
}

}  // namespace sqm
