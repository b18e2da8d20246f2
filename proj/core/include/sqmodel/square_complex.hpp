#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sqmodel/presentation.hpp"

namespace sqm {

// A 2-complex whose faces are squares, given combinatorially: one-cells with
// endpoint vertices, two-cells as cyclic sequences of 4 directed one-cells.
struct SquareComplex {
  struct TwoCell {
    std::array<int, 4> side;  // one-cell ids
    std::array<int, 4> dir;   // +1 forward, -1 reversed
  };

  int vertex_count = 0;
  std::vector<std::pair<int, int>> one_cells;  // endpoint vertex ids
  std::vector<TwoCell> two_cells;
};

// One vertex, a loop per generator, a square per relator whose boundary
// spells the relator (inverse letters traverse the loop backwards).
SquareComplex build_presentation_complex(const Presentation& p);

// The dual graph Gamma: vertices are one-cells, and every two-cell
// contributes two edges joining its opposite sides (pair 0: sides 1 and 3,
// pair 1: sides 2 and 4).
struct HypergraphGraph {
  struct Edge {
    int a, b;      // one-cell ids
    int two_cell;  // owning square
    int pair;      // 0 or 1
  };

  int one_cell_count = 0;
  std::vector<Edge> edges;
};

HypergraphGraph build_hypergraph_graph(const SquareComplex& x);

// A hypergraph is a connected component of Gamma (isolated vertices included).
struct Hypergraph {
  int id = 0;               // index in smallest-vertex order
  std::vector<int> vertices;     // one-cell ids, sorted
  std::vector<int> edge_indices;  // indices into HypergraphGraph::edges
};

std::vector<Hypergraph> hypergraphs(const HypergraphGraph& gamma);

// Embedded tree test: acyclic as a multigraph and no two edges mapped to the
// same two-cell.  On failure carries the offending cycle or two-cell.
struct EmbeddedTreeCheck {
  enum class Failure { None, Cycle, SharedTwoCell };

  bool ok = true;
  Failure failure = Failure::None;
  std::vector<int> cycle;  // closed vertex walk witnessing a cycle
  int two_cell = -1;       // two-cell carrying two edges of the component
};

EmbeddedTreeCheck is_embedded_tree(const Hypergraph& h, const HypergraphGraph& gamma);

// The two-cells the hypergraph's edges pass through, sorted, deduplicated.
std::vector<int> carrier(const Hypergraph& h, const HypergraphGraph& gamma);

// Generators whose total occurrence count across all relators is exactly 1;
// these are precisely the degree-1 vertices (leaves) of Gamma.
std::vector<int> generators_occurring_once(const Presentation& p);

// Per-presentation hypergraph statistics reported by the analyze pipeline.
struct HypergraphStats {
  int components = 0;
  int trees = 0;           // acyclic components
  int embedded_trees = 0;  // acyclic and two-cell injective
  int leaves = 0;          // degree-1 Gamma vertices
  bool all_embedded_trees = false;
};

HypergraphStats hypergraph_stats(const Presentation& p);

}  // namespace sqm
