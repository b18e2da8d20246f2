#include "sqmodel/presentation.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "sqmodel/rng.hpp"

namespace sqm {

namespace {

Letter draw_letter(SplitMix64& rng, std::uint64_t n, ModelKind model) {
  if (model == ModelKind::PositiveSquare) return Letter(static_cast<int>(rng.below(n)) + 1);
  const std::uint64_t v = rng.below(2 * n);
  return v < n ? Letter(static_cast<int>(v) + 1) : Letter(-(static_cast<int>(v - n) + 1));
}

}  // namespace

Presentation sample_presentation(std::uint64_t n, const Density& d, ModelKind model,
                                 std::uint64_t seed) {
  const std::uint64_t m = num_relators(n, d, model);
  const std::uint64_t universe = count_words(n, model);
  if (m > universe)
    throw std::invalid_argument("requested relator set larger than the word universe");

  Presentation p{model, n, d, seed, {}};
  p.relators.reserve(m);
  std::unordered_set<Relator, RelatorHash> seen;
  seen.reserve(2 * m);

  std::uint64_t attempt = 0;
  while (p.relators.size() < m) {
    SplitMix64 rng(derive_seed(seed, attempt++));
    Relator r;
    for (int i = 0; i < 4; ++i) r.letters[i] = draw_letter(rng, n, model);
    if (model == ModelKind::Square && !is_cyclically_reduced(r)) continue;
    if (seen.insert(r).second) p.relators.push_back(r);
  }
  return p;
}

std::vector<Relator> positive_subset(const Presentation& p) {
  std::vector<Relator> out;
  for (const Relator& r : p.relators)
    if (r.positive()) out.push_back(r);
  return out;
}

void write_presentation(std::ostream& os, const Presentation& p) {
  os << "square-model v1\n";
  os << "model=" << to_string(p.model) << " n=" << p.n << " d=" << p.d.text()
     << " seed=" << p.seed << "\n";
  for (const Relator& r : p.relators) os << r << "\n";
}

Presentation read_presentation(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "square-model v1")
    throw std::runtime_error("presentation file: missing 'square-model v1' header");
  if (!std::getline(is, line))
    throw std::runtime_error("presentation file: missing parameter line");

  std::istringstream params(line);
  std::string field;
  std::string model_text, d_text;
  std::uint64_t n = 0, seed = 0;
  bool have_model = false, have_n = false, have_d = false, have_seed = false;
  while (params >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("presentation file: malformed parameter '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "model") {
      model_text = value;
      have_model = true;
    } else if (key == "n") {
      n = std::stoull(value);
      have_n = true;
    } else if (key == "d") {
      d_text = value;
      have_d = true;
    } else if (key == "seed") {
      seed = std::stoull(value);
      have_seed = true;
    } else {
      throw std::runtime_error("presentation file: unknown parameter '" + key + "'");
    }
  }
  if (!(have_model && have_n && have_d && have_seed))
    throw std::runtime_error("presentation file: parameter line needs model, n, d, seed");

  Presentation p{model_from_string(model_text), n, Density::parse(d_text), seed, {}};
  std::size_t lineno = 2;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    Relator r;
    for (int i = 0; i < 4; ++i) {
      int code = 0;
      if (!(row >> code) || code == 0 ||
          static_cast<std::uint64_t>(code < 0 ? -code : code) > p.n)
        throw std::runtime_error("presentation file: bad relator at line " + std::to_string(lineno));
      r.letters[i] = Letter(code);
    }
    int extra;
    if (row >> extra)
      throw std::runtime_error("presentation file: trailing data at line " + std::to_string(lineno));
    p.relators.push_back(r);
  }
  return p;
}

void save_presentation(const std::string& path, const Presentation& p) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_presentation(os, p);
}

Presentation load_presentation(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  return read_presentation(is);
}

}  // namespace sqm
