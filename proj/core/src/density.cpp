#include "sqmodel/density.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace sqm {

Density Density::parse(std::string_view text) {
  std::string_view rest = text;
  if (!rest.empty() && rest.front() == '0') rest.remove_prefix(1);
  if (rest.empty() || rest.front() != '.')
    throw std::invalid_argument("density must be a decimal in (0,1): '" + std::string(text) + "'");
  rest.remove_prefix(1);
  if (rest.empty() || rest.size() > 6)
    throw std::invalid_argument("density must have 1..6 fractional digits: '" + std::string(text) + "'");

  std::int64_t num = 0;
  std::int64_t den = 1;
  for (const char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed density: '" + std::string(text) + "'");
    num = num * 10 + (c - '0');
    den *= 10;
  }
  while (num % 10 == 0 && den > 10) {
    num /= 10;
    den /= 10;
  }
  if (num <= 0 || num >= den)
    throw std::invalid_argument("density must lie strictly in (0,1): '" + std::string(text) + "'");

  std::string canonical = "0.";
  std::string digits = std::to_string(num);
  std::int64_t places = 0;
  for (std::int64_t d = den; d > 1; d /= 10) ++places;
  canonical.append(static_cast<std::size_t>(places) - digits.size(), '0');
  canonical += digits;
  return Density(num, den, std::move(canonical));
}

std::ostream& operator<<(std::ostream& os, const Density& d) { return os << d.text(); }

}  // namespace sqm
