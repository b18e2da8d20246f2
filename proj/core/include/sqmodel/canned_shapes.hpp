#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqmodel/diagram.hpp"
#include "sqmodel/presentation.hpp"

namespace sqm {

// A diagram shape shipped as a fixture, possibly with faces removed whose
// letters are re-imposed as fixed edges at scan time.  Removed faces record
// all of their slots; slots whose edge survives in the remaining diagram
// become fixed edges, slots whose edge vanished still constrain the letters
// of the relator borne by the removed face.
// A concrete orientation/rotation choice for one removed face.
struct CornerChoice {
  int orientation = 1;  // +1 or -1
  int start = 0;        // 0..3
};

struct CannedShape {
  struct SlotMark {
    int edge_id = 0;
    int pos = 0;
    int dir = 1;
    bool survives = false;
  };
  struct RemovedFace {
    int face_id = 0;
    std::vector<SlotMark> slots;
  };

  std::string name;
  AbstractDiagram diagram;
  std::vector<RemovedFace> removed;
  // Instantiation used for the shipped fixture files and the bound
  // experiments; chosen so positive fulfillments are not sign-blocked.
  std::vector<CornerChoice> default_choices;
};

// Exhaustive enumeration of the 2-collared disc diagrams with the given face
// and boundary count, up to face relabeling, rotation and reflection.  The
// interesting sizes are (2,4) and (4,6); everything else returns empty.
std::vector<AbstractDiagram> enumerate_two_collared(int faces, int boundary_len);

// Corner faces of a 2-collared diagram: the two faces crossed by both
// collaring segments.  Empty when the diagram is not 2-collared.
std::vector<int> collared_corners(const AbstractDiagram& d);

// Gluing equality up to face relabeling, rotation and reflection; relator
// classes, orientations and start offsets are ignored.
bool same_gluing(const AbstractDiagram& a, const AbstractDiagram& b);

// The three 2-collared diagrams: a (two faces), b and c (four faces, c being
// the one with an odd-valence internal vertex).
const std::vector<CannedShape>& collared_diagrams();

// a', b' (corner removed from a resp. b) and b'' (corner and the opposite
// face removed from b); the shapes whose fulfillment probability the
// fixed-edge bound controls.
const std::vector<CannedShape>& corner_shapes();

// Removes one face, exposing its slots as fixed-edge marks.
CannedShape remove_face(const CannedShape& shape, int face_id, const std::string& new_name);

// Fixes the removed faces' letters as dictated by r under the given choices;
// nullopt when the imposed letters clash (e.g. a vanished self-glued edge
// would need a letter equal to its own inverse).
std::optional<AbstractDiagram> instantiate_shape(const CannedShape& shape, const Relator& r,
                                                 std::span<const CornerChoice> choices);

// For each shape: is there a choice of consecutive letters of r (8 per
// removed face) under which the shape is fulfillable by relators of p other
// than r itself?
std::vector<bool> corner_scan(const Presentation& p, const Relator& r,
                              std::span<const CannedShape> shapes);

}  // namespace sqm
