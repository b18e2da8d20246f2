#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqmodel/density.hpp"
#include "sqmodel/words.hpp"

namespace sqm {

// Monte Carlo sweep over an (n, d) grid.  Flat key-value config file:
//   model=positive
//   n=50,100
//   d=0.4,0.5,0.65
//   trials=100
//   seed=7
//   detectors=trivial,free,hypergraph,leafless
//   dprime=0.3        (optional; enables the positive-fraction experiment)
struct SweepConfig {
  ModelKind model = ModelKind::PositiveSquare;
  std::vector<std::uint64_t> n_values;
  std::vector<Density> d_values;
  int trials = 1;
  std::uint64_t seed = 0;
  bool detect_trivial = true;
  bool detect_free = true;
  bool hypergraph = true;
  bool leafless = true;
  std::optional<Density> dprime;
};

SweepConfig parse_sweep_config(std::istream& is);
SweepConfig load_sweep_config(const std::string& path);

struct SweepRow {
  std::uint64_t n = 0;
  std::string d;
  ModelKind model = ModelKind::PositiveSquare;
  int trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t num_relators = 0;
  double trivial_rate = 0.0;
  double free_rate = 0.0;
  double mean_certified_rank = 0.0;
  double embedded_tree_rate = 0.0;
  double leafless_rate = 0.0;
  std::optional<double> positive_fraction_rate;
};

// One row per (n, d) cell; trial t of a cell draws its presentation from the
// seed chain (master seed, n, d text, t), so rows do not depend on the grid
// order or on how trials are scheduled.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

// Exact CSV column set, in SweepRow field order.
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);

// Fraction of square-model samples at (n, d) whose positive part exceeds
// n^{4 d'}; requires d' < d.
double positive_fraction_experiment(std::uint64_t n, const Density& d, const Density& dprime,
                                    int trials, std::uint64_t seed);

}  // namespace sqm
