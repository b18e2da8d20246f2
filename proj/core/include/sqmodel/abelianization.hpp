#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "sqmodel/presentation.hpp"

namespace sqm {

// Exponent-sum matrix: one row per relator, one column per generator.
// Entries are bounded by the relator length, so they fit in int64; all
// arithmetic past this point is arbitrary precision.
struct RelationMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> entries;  // row major

  std::int64_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

RelationMatrix relation_matrix(const Presentation& p);

// Diagonal of the Smith normal form: min(rows, cols) nonnegative entries,
// each dividing the next, zeros trailing.  Exact integer arithmetic
// throughout; unimodular row accumulation first keeps the working set at
// most cols x cols.
std::vector<mpz_class> smith_normal_form(const RelationMatrix& m);

struct AbelianInvariants {
  std::int64_t free_rank = 0;
  std::vector<mpz_class> torsion;  // entries > 1, divisibility chain

  bool torsion_free() const { return torsion.empty(); }
  std::string to_string() const;  // e.g. "Z^2 x Z/4"
};

AbelianInvariants abelian_invariants(const Presentation& p);

}  // namespace sqm
