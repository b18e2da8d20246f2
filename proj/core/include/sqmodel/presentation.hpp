#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sqmodel/density.hpp"
#include "sqmodel/words.hpp"

namespace sqm {

// A sampled group presentation <a_1..a_n | relators> together with the
// parameters that produced it.  Immutable after construction.
struct Presentation {
  ModelKind model = ModelKind::PositiveSquare;
  std::uint64_t n = 1;
  Density d = Density::parse("0.5");
  std::uint64_t seed = 0;
  std::vector<Relator> relators;  // duplicate-free, in draw order
};

// Uniform sample without replacement of num_relators(n,d,model) words from
// the model's word universe.  Rejection sampling with dedup: attempt k draws
// its letters from the substream derive_seed(seed, k), so the result is a
// pure function of (n, d, model, seed).
Presentation sample_presentation(std::uint64_t n, const Density& d, ModelKind model,
                                 std::uint64_t seed);

// The relators whose letters are all positive.
std::vector<Relator> positive_subset(const Presentation& p);

// Line-based presentation file:
//   square-model v1
//   model=<positive|square> n=<int> d=<decimal> seed=<u64>
//   <4 signed integers per relator line>
void write_presentation(std::ostream& os, const Presentation& p);
Presentation read_presentation(std::istream& is);
void save_presentation(const std::string& path, const Presentation& p);
Presentation load_presentation(const std::string& path);

}  // namespace sqm
