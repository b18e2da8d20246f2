#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqmodel/presentation.hpp"
#include "sqmodel/square_complex.hpp"

namespace sqm {

// One step of the removal procedure: an edgeful hypergraph that was an
// embedded tree, the one-cells dual to it and its carrier two-cells.
struct RemovalStep {
  std::vector<int> component_vertices;          // removed one-cells
  std::vector<std::pair<int, int>> component_edges;  // (one-cell, one-cell) snapshot
  std::vector<int> carrier_two_cells;           // removed two-cells
};

// Witness of freeness: cutting along each hypergraph splits off a Z factor,
// so the fundamental group is free of the recorded rank.
struct FreenessCertificate {
  std::vector<RemovalStep> removals;
  int leftover_loops = 0;  // one-cells surviving all removals
  int rank = 0;            // removals.size() + leftover_loops
};

// Failure carries the first non-embedded-tree component found.
struct FreenessWitness {
  int component_id = -1;
  std::vector<int> component_vertices;
  EmbeddedTreeCheck check;
};

struct FreenessResult {
  std::optional<FreenessCertificate> certificate;
  std::optional<FreenessWitness> witness;

  bool certified() const { return certificate.has_value(); }
};

// Certifies freeness when every hypergraph of the presentation complex is an
// embedded tree: repeatedly removes the edgeful component with the smallest
// id together with its dual one-cells and carrier two-cells, counting one Z
// factor per removal plus one per leftover loop.  The embedded-tree property
// is re-asserted after every removal.
FreenessResult detect_free(const Presentation& p);

// Same procedure with a randomized choice of which edgeful component to
// remove; the certified rank must not depend on the order.
FreenessResult detect_free_randomized(const Presentation& p, std::uint64_t order_seed);

// Euler bookkeeping: a certified rank always equals n - |relators|.
bool certified_rank_identity(const FreenessCertificate& cert, const Presentation& p);

}  // namespace sqm
