#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqmodel/density.hpp"
#include "sqmodel/words.hpp"

namespace sqm {

// An abstract diagram: a van Kampen diagram with the relators forgotten.
// Faces are cyclic lists of l signed edge references (the sign is the
// traversal direction relative to the edge's intrinsic direction); edges are
// identification classes of one or two face slots.  Every face remembers its
// relator class, orientation and start offset (which slot carries letter 1).
// Fixed edges carry letters that any fulfillment must reproduce.
//
// All face boundaries are read with the same (counterclockwise) rotation, so
// a consistently glued internal edge is traversed in opposite directions by
// its two slots; validate() enforces this.
struct AbstractDiagram {
  struct Face {
    int id = 0;
    std::vector<int> sides;  // signed edge ids, size = relator_len
    int cls = 1;
    int orientation = 1;  // +1 or -1
    int start = 0;        // slot index carrying relator letter 1
  };

  int relator_len = 4;
  std::vector<Face> faces;
  std::vector<std::pair<int, Letter>> fixed_edges;  // (edge id, intrinsic letter)

  // Position k (1-based) of the relator letter carried by slot `pos` of `face`.
  int letter_position(const Face& f, int pos) const;
  // Sign s such that the edge's intrinsic letter is w_k^s when the face bears w.
  int letter_sign(const Face& f, int pos) const;
};

// Slot bookkeeping shared by the structural checks and the search.
struct DiagramEdges {
  struct Slot {
    int face;  // index into faces
    int pos;   // slot index within the face
    int dir;   // traversal sign
  };
  struct Edge {
    int id = 0;
    std::vector<Slot> slots;  // size 1 (boundary) or 2 (internal)
    std::optional<Letter> fixed;
  };

  std::vector<Edge> edges;        // sorted by id
  std::map<int, int> index_of;    // edge id -> index

  bool boundary(int idx) const { return edges[idx].slots.size() == 1; }
};

DiagramEdges collect_edges(const AbstractDiagram& d);

// Derived vertex structure: classes of edge endpoints under the corner
// identifications.  Used for the Euler check and the parity test.
struct DiagramVertices {
  int count = 0;
  std::vector<int> tail_class;  // per edge index
  std::vector<int> head_class;
  std::vector<int> valence;          // per vertex class
  std::vector<bool> on_boundary;     // touches a boundary edge
};

DiagramVertices derive_vertices(const AbstractDiagram& d, const DiagramEdges& e);

// Structural validation: slot multiplicities, rotation-system consistency,
// connectivity and Euler characteristic 1.  Defects are descriptions, not
// exceptions.
std::vector<std::string> validate(const AbstractDiagram& d);

struct DiagramStats {
  int faces = 0;
  int boundary_length = 0;
  int fixed_edges = 0;
  int relator_len = 4;
  int total_boundary_sum = 0;  // l * |faces|
};

DiagramStats diagram_stats(const AbstractDiagram& d);

// No edge is adjacent to two faces of the same class with opposite
// orientations such that the edge is the k-th edge of both.
bool is_reduced(const AbstractDiagram& d);

// Ownership of internal edges by the lexicographic (class rank, position)
// rule; fixed edges belong to every adjacent face.  Classes are ranked by
// decreasing multiplicity.
struct OwnershipReport {
  std::vector<int> class_order;    // class ids, rank 1 first
  std::vector<int> multiplicity;   // m_i per rank
  std::vector<int> kappa;          // max delta over faces of the class, per rank
  std::vector<int> delta;          // owned-edge count per face index
  std::vector<std::vector<int>> owners;  // per edge index: owning face indices
  std::vector<int> never_fulfillable;    // edge ids where a letter would equal its own inverse
};

OwnershipReport ownership(const AbstractDiagram& d);

// True iff |boundary| >= 4 (1 - 2 d - eps) |faces|.
bool iso_check(const DiagramStats& stats, const Density& d, double eps);

// Exponent e with fulfillment probability <= base^e, base n in the positive
// model and 2n-1 in the square model.  Nonnegative exponents are vacuous.
double bound_exponent(const DiagramStats& stats, const Density& d, int relator_len);

struct FulfillmentBound {
  double exponent = 0.0;
  double probability = 1.0;
  bool vacuous = true;
};

FulfillmentBound fulfillment_bound(const DiagramStats& stats, std::uint64_t n, const Density& d,
                                   ModelKind model);

// Internal vertices of odd valence; any one of them rules out fulfillment by
// positive relators.
std::vector<int> parity_defects(const AbstractDiagram& d);

// One consistent assignment of relators to classes.
struct Fulfillment {
  std::vector<std::pair<int, Relator>> by_class;  // (class id, relator)
};

// Backtracking search over classes in ownership order; distinct classes
// receive distinct relators, every edge must end up with a single consistent
// letter and fixed letters must match.  Exhaustive up to max_results.
std::vector<Fulfillment> find_fulfillments(const AbstractDiagram& d,
                                           std::span<const Relator> relators,
                                           std::size_t max_results);

// Diagram file I/O:
//   l=<int>
//   face <id> <e+-1> ... <e+-l>
//   class <face> <cid>
//   orient <face> <+|->
//   start <face> <0..l-1>
//   fixed <edge> <+-gen>
AbstractDiagram read_diagram(std::istream& is);
void write_diagram(std::ostream& os, const AbstractDiagram& d);
AbstractDiagram load_diagram(const std::string& path);
void save_diagram(const std::string& path, const AbstractDiagram& d);

}  // namespace sqm
