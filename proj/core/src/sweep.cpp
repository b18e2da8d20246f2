#include "sqmodel/sweep.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sqmodel/analyze.hpp"
#include "sqmodel/rng.hpp"

namespace sqm {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& is) {
  SweepConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("sweep config: expected key=value at line " + std::to_string(lineno));
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "model") {
      cfg.model = model_from_string(value);
    } else if (key == "n") {
      for (const auto& v : split(value, ',')) cfg.n_values.push_back(std::stoull(v));
    } else if (key == "d") {
      for (const auto& v : split(value, ',')) cfg.d_values.push_back(Density::parse(v));
    } else if (key == "trials") {
      cfg.trials = std::stoi(value);
    } else if (key == "seed") {
      cfg.seed = std::stoull(value);
    } else if (key == "dprime") {
      cfg.dprime = Density::parse(value);
    } else if (key == "detectors") {
      cfg.detect_trivial = cfg.detect_free = cfg.hypergraph = cfg.leafless = false;
      for (const auto& v : split(value, ',')) {
        if (v == "trivial")
          cfg.detect_trivial = true;
        else if (v == "free")
          cfg.detect_free = true;
        else if (v == "hypergraph")
          cfg.hypergraph = true;
        else if (v == "leafless")
          cfg.leafless = true;
        else
          throw std::runtime_error("sweep config: unknown detector '" + v + "'");
      }
    } else {
      throw std::runtime_error("sweep config: unknown key '" + key + "'");
    }
  }
  if (cfg.n_values.empty() || cfg.d_values.empty())
    throw std::runtime_error("sweep config: n and d lists must be nonempty");
  if (cfg.trials < 1) throw std::runtime_error("sweep config: trials must be >= 1");
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  return parse_sweep_config(is);
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  std::vector<SweepRow> rows;
  for (const std::uint64_t n : cfg.n_values) {
    for (const Density& d : cfg.d_values) {
      SweepRow row;
      row.n = n;
      row.d = d.text();
      row.model = cfg.model;
      row.trials = cfg.trials;
      row.seed = cfg.seed;
      row.num_relators = num_relators(n, d, cfg.model);

      int trivial_hits = 0, free_hits = 0, embedded_hits = 0, leafless_hits = 0, pf_hits = 0;
      std::int64_t rank_sum = 0;
      const std::uint64_t threshold =
          cfg.dprime ? num_relators(n, *cfg.dprime, ModelKind::PositiveSquare) : 0;

      for (int t = 0; t < cfg.trials; ++t) {
        const std::uint64_t trial_seed =
            SeedChain(cfg.seed).fold(n).fold(d.text()).fold(static_cast<std::uint64_t>(t)).value();
        const Presentation p = sample_presentation(n, d, cfg.model, trial_seed);
        if (cfg.detect_trivial &&
            detect_trivial(p).status == TrivialityStatus::Certified)
          ++trivial_hits;
        if (cfg.detect_free) {
          const FreenessResult f = detect_free(p);
          if (f.certified()) {
            ++free_hits;
            rank_sum += f.certificate->rank;
          }
        }
        if (cfg.hypergraph && hypergraph_stats(p).all_embedded_trees) ++embedded_hits;
        if (cfg.leafless && generators_occurring_once(p).empty()) ++leafless_hits;
        if (cfg.dprime && positive_subset(p).size() > threshold) ++pf_hits;
      }

      const double trials = static_cast<double>(cfg.trials);
      row.trivial_rate = trivial_hits / trials;
      row.free_rate = free_hits / trials;
      row.mean_certified_rank = free_hits > 0 ? static_cast<double>(rank_sum) / free_hits : 0.0;
      row.embedded_tree_rate = embedded_hits / trials;
      row.leafless_rate = leafless_hits / trials;
      if (cfg.dprime) row.positive_fraction_rate = pf_hits / trials;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

std::string format_rate(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "n,d,model,trials,seed,num_relators,trivial_rate,free_rate,mean_certified_rank,"
        "embedded_tree_rate,leafless_rate,positive_fraction_rate\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.d << ',' << to_string(r.model) << ',' << r.trials << ',' << r.seed
       << ',' << r.num_relators << ',' << format_rate(r.trivial_rate) << ','
       << format_rate(r.free_rate) << ',' << format_rate(r.mean_certified_rank) << ','
       << format_rate(r.embedded_tree_rate) << ',' << format_rate(r.leafless_rate) << ',';
    if (r.positive_fraction_rate) os << format_rate(*r.positive_fraction_rate);
    os << '\n';
  }
}

double positive_fraction_experiment(std::uint64_t n, const Density& d, const Density& dprime,
                                    int trials, std::uint64_t seed) {
  if (!(dprime < d)) throw std::invalid_argument("d' must be smaller than d");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const std::uint64_t threshold = num_relators(n, dprime, ModelKind::PositiveSquare);
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed =
        SeedChain(seed).fold(n).fold(d.text()).fold(static_cast<std::uint64_t>(t)).value();
    const Presentation p = sample_presentation(n, d, ModelKind::Square, trial_seed);
    if (positive_subset(p).size() > threshold) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace sqm
