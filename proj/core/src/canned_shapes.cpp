#include "sqmodel/canned_shapes.hpp"

#include "sqmodel/square_complex.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sqm {

namespace {

// ---------------------------------------------------------------------------
// Gluing candidates: mate[slot] = partner slot, -1 for boundary.  Slot s of
// face s/4 at position s%4.
// ---------------------------------------------------------------------------

struct MiniUF {
  std::array<int, 64> parent;
  void init(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Cheap disc filter on the raw pairing: Euler characteristic 1 via corner
// identifications, connectivity over faces, then the 2-collared boundary
// pattern (simple boundary cycle, exactly two pole vertices with 0 or 2
// internal edge ends, all other boundary vertices with exactly one).  All on
// stack arrays so the full diagram machinery only runs on real candidates.
bool disc_prefilter(const std::vector<int>& mate, int faces) {
  const int slots = 4 * faces;
  MiniUF corners;
  corners.init(slots);
  MiniUF face_uf;
  face_uf.init(faces);
  int edges = 0;
  for (int s = 0; s < slots; ++s) {
    const int m = mate[s];
    if (m < 0) {
      ++edges;
      continue;
    }
    if (m < s) continue;
    ++edges;
    const int f1 = s / 4, t1 = s % 4;
    const int f2 = m / 4, t2 = m % 4;
    corners.unite(4 * f1 + t1, 4 * f2 + (t2 + 1) % 4);
    corners.unite(4 * f1 + (t1 + 1) % 4, 4 * f2 + t2);
    face_uf.unite(f1, f2);
  }
  for (int f = 1; f < faces; ++f)
    if (face_uf.find(f) != face_uf.find(0)) return false;
  int vertices = 0;
  for (int s = 0; s < slots; ++s)
    if (corners.find(s) == s) ++vertices;
  if (vertices - edges + faces != 1) return false;

  // Per-vertex boundary-end and internal-end counts; vertex = corner class.
  std::array<int, 64> boundary_ends{};
  std::array<int, 64> internal_ends{};
  for (int s = 0; s < slots; ++s) {
    const int f = s / 4, t = s % 4;
    const int a = corners.find(4 * f + t);
    const int b = corners.find(4 * f + (t + 1) % 4);
    if (mate[static_cast<std::size_t>(s)] < 0) {
      ++boundary_ends[static_cast<std::size_t>(a)];
      ++boundary_ends[static_cast<std::size_t>(b)];
    } else if (mate[static_cast<std::size_t>(s)] > s) {
      ++internal_ends[static_cast<std::size_t>(a)];
      ++internal_ends[static_cast<std::size_t>(b)];
    }
  }
  int poles = 0;
  for (int v = 0; v < slots; ++v) {
    if (corners.find(v) != v) continue;
    if (boundary_ends[static_cast<std::size_t>(v)] == 0) continue;
    if (boundary_ends[static_cast<std::size_t>(v)] != 2) return false;  // pinched boundary
    const int ends = internal_ends[static_cast<std::size_t>(v)];
    if (ends == 1) continue;
    if (ends != 0 && ends != 2) return false;
    ++poles;
  }
  return poles == 2;
}

AbstractDiagram diagram_from_mate(const std::vector<int>& mate, int faces) {
  AbstractDiagram d;
  d.relator_len = 4;
  d.faces.resize(faces);
  for (int f = 0; f < faces; ++f) {
    d.faces[f].id = f + 1;
    d.faces[f].cls = f + 1;
    d.faces[f].sides.assign(4, 0);
  }
  int next_edge = 1;
  for (int s = 0; s < 4 * faces; ++s) {
    if (d.faces[s / 4].sides[s % 4] != 0) continue;
    const int m = mate[s];
    d.faces[s / 4].sides[s % 4] = next_edge;
    if (m >= 0) d.faces[m / 4].sides[m % 4] = -next_edge;
    ++next_edge;
  }
  return d;
}

// Gamma graph of a diagram: vertices are the diagram's edges (its 1-cells),
// one dual edge per opposite side pair of every face.
HypergraphGraph diagram_gamma(const AbstractDiagram& d, const DiagramEdges& e) {
  HypergraphGraph g;
  g.one_cell_count = static_cast<int>(e.edges.size());
  for (std::size_t fi = 0; fi < d.faces.size(); ++fi) {
    const auto& sides = d.faces[fi].sides;
    const auto idx = [&](int pos) { return e.index_of.at(std::abs(sides[pos])); };
    g.edges.push_back({idx(0), idx(2), static_cast<int>(fi), 0});
    g.edges.push_back({idx(1), idx(3), static_cast<int>(fi), 1});
  }
  return g;
}

struct BoundaryPattern {
  bool ok = false;
  std::vector<int> cycle;          // vertex classes in boundary order
  std::vector<int> internal_ends;  // per cycle position
  std::vector<std::vector<int>> end_edges;  // internal edge indices ending there
};

BoundaryPattern boundary_pattern(const DiagramEdges& e, const DiagramVertices& v) {
  BoundaryPattern out;
  std::map<int, std::vector<std::pair<int, int>>> incidence;  // vertex -> (edge idx, other end)
  int boundary_edges = 0;
  for (std::size_t i = 0; i < e.edges.size(); ++i) {
    if (!e.boundary(static_cast<int>(i))) continue;
    ++boundary_edges;
    const int a = v.tail_class[i], b = v.head_class[i];
    incidence[a].emplace_back(static_cast<int>(i), b);
    incidence[b].emplace_back(static_cast<int>(i), a);
  }
  if (boundary_edges == 0) return out;
  for (const auto& [vertex, inc] : incidence)
    if (inc.size() != 2) return out;  // pinched or branched boundary

  // Walk the unique cycle through degree-2 incidences.
  const int start = incidence.begin()->first;
  std::vector<int> cycle{start};
  int prev_edge = -1;
  int cur = start;
  for (int step = 0; step < boundary_edges; ++step) {
    const auto& inc = incidence[cur];
    const auto& next = (inc[0].first != prev_edge) ? inc[0] : inc[1];
    prev_edge = next.first;
    cur = next.second;
    if (step + 1 < boundary_edges) cycle.push_back(cur);
  }
  if (cur != start) return out;                       // open walk: not a single cycle
  if (static_cast<int>(cycle.size()) != boundary_edges) return out;
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;
  if (static_cast<int>(incidence.size()) != boundary_edges) return out;

  out.cycle = cycle;
  out.internal_ends.assign(cycle.size(), 0);
  out.end_edges.assign(cycle.size(), {});
  std::map<int, int> pos_of;
  for (std::size_t i = 0; i < cycle.size(); ++i) pos_of[cycle[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < e.edges.size(); ++i) {
    if (e.boundary(static_cast<int>(i))) continue;
    for (const int c : {v.tail_class[i], v.head_class[i]}) {
      const auto it = pos_of.find(c);
      if (it == pos_of.end()) continue;
      ++out.internal_ends[static_cast<std::size_t>(it->second)];
      out.end_edges[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    }
  }
  out.ok = true;
  return out;
}

// A multiset of Gamma edges forms a simple path iff there are no loops, all
// degrees are at most 2, exactly two vertices have degree 1, and the vertex
// count exceeds the edge count by one (which rules out extra cycles).
bool is_simple_gamma_path(const int* edge_ids, int count, const HypergraphGraph& gamma) {
  if (count == 0) return false;
  std::array<int, 32> degree{};
  std::uint32_t seen = 0;
  for (int i = 0; i < count; ++i) {
    const auto& e = gamma.edges[static_cast<std::size_t>(edge_ids[i])];
    if (e.a == e.b) return false;
    ++degree[static_cast<std::size_t>(e.a)];
    ++degree[static_cast<std::size_t>(e.b)];
    seen |= (1u << e.a) | (1u << e.b);
  }
  int ends = 0, vertices = 0;
  for (int v = 0; v < 32; ++v) {
    if (!(seen & (1u << v))) continue;
    ++vertices;
    if (degree[static_cast<std::size_t>(v)] > 2) return false;
    if (degree[static_cast<std::size_t>(v)] == 1) ++ends;
  }
  return ends == 2 && vertices == count + 1;
}

struct CollarResult {
  bool ok = false;
  std::vector<int> corner_faces;  // face indices
};

CollarResult find_collar(const AbstractDiagram& d, const DiagramEdges& e,
                         const DiagramVertices& v) {
  CollarResult result;
  const BoundaryPattern pattern = boundary_pattern(e, v);
  if (!pattern.ok) return result;

  std::vector<int> poles;
  for (std::size_t i = 0; i < pattern.cycle.size(); ++i) {
    const int ends = pattern.internal_ends[i];
    if (ends == 1) continue;
    if (ends != 0 && ends != 2) return result;
    poles.push_back(static_cast<int>(i));
  }
  if (poles.size() != 2) return result;

  const HypergraphGraph gamma = diagram_gamma(d, e);
  const int faces = static_cast<int>(d.faces.size());
  const int boundary_len = static_cast<int>(pattern.cycle.size());
  // Each segment edge sits in a distinct face except at the two corners, so
  // |l1| + |l2| = faces + 2 must equal the boundary length.
  if (boundary_len != faces + 2) return result;
  if (faces > 12) return result;  // keeps the vertex bitmasks within 32 bits

  // Arc membership: positions strictly between the poles, in cycle order.
  std::vector<int> arc_of(pattern.cycle.size(), -1);
  {
    int arc = 0;
    for (int off = 1; off < boundary_len; ++off) {
      const int pos = (poles[0] + off) % boundary_len;
      if (pos == poles[1]) {
        arc = 1;
        continue;
      }
      arc_of[static_cast<std::size_t>(pos)] = arc;
    }
  }

  // Enumerate segment assignments: corners take one Gamma edge per segment,
  // every other face contributes exactly one edge to exactly one segment.
  // Face f's two Gamma edges are 2f and 2f+1.
  std::array<int, 8> l1{}, l2{};
  const auto vertex_mask = [&](const int* ids, int count) {
    std::uint32_t m = 0;
    for (int i = 0; i < count; ++i) {
      const auto& ge = gamma.edges[static_cast<std::size_t>(ids[i])];
      m |= (1u << ge.a) | (1u << ge.b);
    }
    return m;
  };

  for (int ca = 0; ca < faces; ++ca) {
    for (int cb = ca + 1; cb < faces; ++cb) {
      std::array<int, 8> others{};
      int other_count = 0;
      for (int f = 0; f < faces; ++f)
        if (f != ca && f != cb) others[static_cast<std::size_t>(other_count++)] = f;

      // 2 bits per corner (which edge goes to l1), 2 bits per other face
      // (which edge is used, which segment takes it).
      const int combos = 4 << (2 * other_count);
      for (int combo = 0; combo < combos; ++combo) {
        int bits = combo;
        int n1 = 0, n2 = 0;
        const int swap_a = bits & 1;
        const int swap_b = (bits >> 1) & 1;
        bits >>= 2;
        l1[static_cast<std::size_t>(n1++)] = 2 * ca + swap_a;
        l2[static_cast<std::size_t>(n2++)] = 2 * ca + 1 - swap_a;
        l1[static_cast<std::size_t>(n1++)] = 2 * cb + swap_b;
        l2[static_cast<std::size_t>(n2++)] = 2 * cb + 1 - swap_b;
        for (int i = 0; i < other_count; ++i, bits >>= 2) {
          const int edge = 2 * others[static_cast<std::size_t>(i)] + (bits & 1);
          if (bits & 2)
            l2[static_cast<std::size_t>(n2++)] = edge;
          else
            l1[static_cast<std::size_t>(n1++)] = edge;
        }

        if (!is_simple_gamma_path(l1.data(), n1, gamma) ||
            !is_simple_gamma_path(l2.data(), n2, gamma))
          continue;

        const std::uint32_t visited1 = vertex_mask(l1.data(), n1);
        const std::uint32_t visited2 = vertex_mask(l2.data(), n2);

        // Duality: arc vertices' internal edges lie on their segment; pole
        // edges lie on both segments.
        for (const int swap_arcs : {0, 1}) {
          bool ok = true;
          for (std::size_t i = 0; i < pattern.cycle.size() && ok; ++i) {
            const int arc = arc_of[i];
            for (const int ei : pattern.end_edges[i]) {
              const std::uint32_t bit = 1u << ei;
              if (arc < 0) {
                if (!(visited1 & bit) || !(visited2 & bit)) ok = false;
              } else if (arc == swap_arcs) {
                if (!(visited2 & bit)) ok = false;
              } else if (!(visited1 & bit)) {
                ok = false;
              }
            }
          }
          if (ok) {
            result.ok = true;
            result.corner_faces = {ca, cb};
            return result;
          }
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Canonical form under face permutation, per-face rotation, global reflection.
// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> mate_pairs(const std::vector<int>& mate) {
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < static_cast<int>(mate.size()); ++s)
    if (mate[s] > s) pairs.emplace_back(s, mate[s]);
  return pairs;
}

std::vector<std::pair<int, int>> canonical_pairs(const std::vector<int>& mate, int faces) {
  const std::vector<std::pair<int, int>> base = mate_pairs(mate);
  const int count = static_cast<int>(base.size());

  std::vector<int> perm(faces);
  std::iota(perm.begin(), perm.end(), 0);
  std::array<std::pair<int, int>, 16> pairs{};
  std::array<std::pair<int, int>, 16> best{};
  bool have = false;
  do {
    for (int refl = 0; refl < 2; ++refl) {
      std::vector<int> rot(faces, 0);
      for (;;) {
        const auto map_slot = [&](int s) {
          const int f = s / 4, t = s % 4;
          const int tt = refl ? (4 - t) % 4 : t;
          return 4 * perm[f] + (tt + rot[f]) % 4;
        };
        for (int i = 0; i < count; ++i) {
          int x = map_slot(base[static_cast<std::size_t>(i)].first);
          int y = map_slot(base[static_cast<std::size_t>(i)].second);
          if (x > y) std::swap(x, y);
          pairs[static_cast<std::size_t>(i)] = {x, y};
        }
        std::sort(pairs.begin(), pairs.begin() + count);
        if (!have || std::lexicographical_compare(pairs.begin(), pairs.begin() + count,
                                                  best.begin(), best.begin() + count)) {
          best = pairs;
          have = true;
        }
        // Odometer over per-face rotations.
        int f = 0;
        while (f < faces && ++rot[f] == 4) rot[f++] = 0;
        if (f == faces) break;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::vector<std::pair<int, int>>(best.begin(), best.begin() + count);
}

std::vector<int> mate_from_pairs(const std::vector<std::pair<int, int>>& pairs, int faces) {
  std::vector<int> mate(4 * faces, -1);
  for (const auto& [a, b] : pairs) {
    mate[static_cast<std::size_t>(a)] = b;
    mate[static_cast<std::size_t>(b)] = a;
  }
  return mate;
}

}  // namespace

std::vector<int> collared_corners(const AbstractDiagram& d) {
  const DiagramEdges e = collect_edges(d);
  const DiagramVertices v = derive_vertices(d, e);
  const CollarResult collar = find_collar(d, e, v);
  std::vector<int> ids;
  for (const int f : collar.corner_faces) ids.push_back(d.faces[static_cast<std::size_t>(f)].id);
  return ids;
}

namespace {

std::vector<int> mate_of_diagram(const AbstractDiagram& d) {
  const DiagramEdges e = collect_edges(d);
  std::vector<int> mate(4 * d.faces.size(), -1);
  for (const auto& edge : e.edges) {
    if (edge.slots.size() != 2) continue;
    const int s0 = 4 * edge.slots[0].face + edge.slots[0].pos;
    const int s1 = 4 * edge.slots[1].face + edge.slots[1].pos;
    mate[static_cast<std::size_t>(s0)] = s1;
    mate[static_cast<std::size_t>(s1)] = s0;
  }
  return mate;
}

}  // namespace

bool same_gluing(const AbstractDiagram& a, const AbstractDiagram& b) {
  if (a.faces.size() != b.faces.size() || a.relator_len != b.relator_len) return false;
  if (a.relator_len != 4) return false;
  const int faces = static_cast<int>(a.faces.size());
  return canonical_pairs(mate_of_diagram(a), faces) == canonical_pairs(mate_of_diagram(b), faces);
}

std::vector<AbstractDiagram> enumerate_two_collared(int faces, int boundary_len) {
  const int slots = 4 * faces;
  const int pairs = (slots - boundary_len) / 2;
  if (pairs < 0 || 2 * pairs + boundary_len != slots) return {};

  std::vector<AbstractDiagram> found;
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<int> mate(static_cast<std::size_t>(slots), -2);

  const std::function<void(int, int, int)> gen = [&](int from, int pairs_left, int boundary_left) {
    int s = from;
    while (s < slots && mate[static_cast<std::size_t>(s)] != -2) ++s;
    if (s == slots) {
      if (pairs_left != 0 || boundary_left != 0) return;
      if (!disc_prefilter(mate, faces)) return;
      AbstractDiagram d = diagram_from_mate(mate, faces);
      const DiagramEdges e = collect_edges(d);
      const DiagramVertices v = derive_vertices(d, e);
      if (!find_collar(d, e, v).ok) return;
      if (!validate(d).empty()) return;
      const auto canon = canonical_pairs(mate, faces);
      if (seen.insert(canon).second)
        found.push_back(diagram_from_mate(mate_from_pairs(canon, faces), faces));
      return;
    }
    if (boundary_left > 0) {
      mate[static_cast<std::size_t>(s)] = -1;
      gen(s + 1, pairs_left, boundary_left - 1);
      mate[static_cast<std::size_t>(s)] = -2;
    }
    if (pairs_left > 0) {
      for (int t = s + 1; t < slots; ++t) {
        if (mate[static_cast<std::size_t>(t)] != -2) continue;
        mate[static_cast<std::size_t>(s)] = t;
        mate[static_cast<std::size_t>(t)] = s;
        gen(s + 1, pairs_left - 1, boundary_left);
        mate[static_cast<std::size_t>(s)] = -2;
        mate[static_cast<std::size_t>(t)] = -2;
      }
    }
  };
  gen(0, pairs, boundary_len);
  return found;
}

// ---------------------------------------------------------------------------
// Shipped shapes.
// ---------------------------------------------------------------------------

namespace {

AbstractDiagram make_diagram(std::vector<std::array<int, 4>> face_sides) {
  AbstractDiagram d;
  d.relator_len = 4;
  for (std::size_t f = 0; f < face_sides.size(); ++f) {
    AbstractDiagram::Face face;
    face.id = static_cast<int>(f) + 1;
    face.cls = static_cast<int>(f) + 1;
    face.sides.assign(face_sides[f].begin(), face_sides[f].end());
    d.faces.push_back(std::move(face));
  }
  return d;
}

}  // namespace

const std::vector<CannedShape>& collared_diagrams() {
  // Output of enumerate_two_collared, canonicalized: a is the unique 2-face
  // diagram (two squares sharing two adjacent edges), b and c the two 4-face
  // diagrams; c is the one with odd-valence internal vertices.  On a and b
  // the face orientations alternate across shared edges, as they do in every
  // van Kampen diagram over a positive presentation; c admits no such
  // assignment (its face adjacency graph has triangles).
  static const std::vector<CannedShape> shapes = [] {
    std::vector<CannedShape> out;
    AbstractDiagram a = make_diagram({{1, 2, 3, 4},
                                      {-1, 5, 6, -2}});
    a.faces[1].orientation = -1;
    out.push_back({"a", std::move(a), {}, {}});

    AbstractDiagram b = make_diagram({{1, 2, 3, 4},
                                      {-1, 5, 6, -2},
                                      {-3, 7, 8, 9},
                                      {-6, 10, 11, -7}});
    b.faces[1].orientation = -1;
    b.faces[2].orientation = -1;
    out.push_back({"b", std::move(b), {}, {}});

    out.push_back({"c",
                   make_diagram({{1, 2, 3, 4},
                                 {-1, 5, 6, 7},
                                 {-2, -7, 8, 9},
                                 {-3, -9, 10, 11}}),
                   {},
                   {}});
    return out;
  }();
  return shapes;
}

const std::vector<CannedShape>& corner_shapes() {
  static const std::vector<CannedShape> shapes = [] {
    const auto& full = collared_diagrams();
    const CannedShape& a = full[0];
    const CannedShape& b = full[1];

    const auto corner_of = [](const CannedShape& s) {
      const std::vector<int> corners = collared_corners(s.diagram);
      if (corners.size() != 2) throw std::logic_error("shape is not 2-collared");
      return std::min(corners[0], corners[1]);
    };

    std::vector<CannedShape> out;
    CannedShape a1 = remove_face(a, corner_of(a), "a1");
    a1.default_choices = {CornerChoice{1, 0}};
    out.push_back(std::move(a1));

    CannedShape b1 = remove_face(b, corner_of(b), "b1");
    b1.default_choices = {CornerChoice{-1, 0}};
    out.push_back(b1);

    // The only face that can bear the corner's relator again is the one not
    // adjacent to the corner in b.
    const int corner = corner_of(b);
    std::set<int> adjacent;
    const DiagramEdges be = collect_edges(b.diagram);
    for (const auto& edge : be.edges) {
      if (edge.slots.size() != 2) continue;
      const int f1 = b.diagram.faces[static_cast<std::size_t>(edge.slots[0].face)].id;
      const int f2 = b.diagram.faces[static_cast<std::size_t>(edge.slots[1].face)].id;
      if (f1 == corner) adjacent.insert(f2);
      if (f2 == corner) adjacent.insert(f1);
    }
    std::vector<int> free_faces;
    for (const auto& f : b.diagram.faces)
      if (f.id != corner && !adjacent.count(f.id)) free_faces.push_back(f.id);
    if (free_faces.size() != 1)
      throw std::logic_error("expected a unique face not adjacent to the corner of b");
    CannedShape b2 = remove_face(b1, free_faces[0], "b2");
    b2.default_choices = {CornerChoice{-1, 0}, CornerChoice{-1, 0}};
    out.push_back(std::move(b2));
    return out;
  }();
  return shapes;
}

CannedShape remove_face(const CannedShape& shape, int face_id, const std::string& new_name) {
  const auto it = std::find_if(shape.diagram.faces.begin(), shape.diagram.faces.end(),
                               [&](const auto& f) { return f.id == face_id; });
  if (it == shape.diagram.faces.end())
    throw std::invalid_argument("no face with id " + std::to_string(face_id));

  CannedShape out;
  out.name = new_name;
  out.removed = shape.removed;
  out.diagram.relator_len = shape.diagram.relator_len;
  for (const auto& f : shape.diagram.faces)
    if (f.id != face_id) out.diagram.faces.push_back(f);
  out.diagram.fixed_edges = shape.diagram.fixed_edges;

  const DiagramEdges remaining = collect_edges(out.diagram);
  CannedShape::RemovedFace removed;
  removed.face_id = face_id;
  for (std::size_t pos = 0; pos < it->sides.size(); ++pos) {
    const int ref = it->sides[pos];
    CannedShape::SlotMark mark;
    mark.edge_id = std::abs(ref);
    mark.pos = static_cast<int>(pos);
    mark.dir = ref < 0 ? -1 : 1;
    mark.survives = remaining.index_of.count(mark.edge_id) > 0;
    removed.slots.push_back(mark);
  }
  out.removed.push_back(std::move(removed));
  return out;
}

std::optional<AbstractDiagram> instantiate_shape(const CannedShape& shape, const Relator& r,
                                                 std::span<const CornerChoice> choices) {
  if (choices.size() != shape.removed.size())
    throw std::invalid_argument("one corner choice required per removed face");

  std::map<int, Letter> imposed;
  for (const auto& [id, letter] : shape.diagram.fixed_edges) imposed.emplace(id, letter);

  const int l = shape.diagram.relator_len;
  for (std::size_t i = 0; i < shape.removed.size(); ++i) {
    const auto& choice = choices[i];
    for (const auto& mark : shape.removed[i].slots) {
      const int j = choice.orientation > 0 ? ((mark.pos - choice.start) % l + l) % l
                                           : ((choice.start - mark.pos) % l + l) % l;
      const Letter base = r.letters[static_cast<std::size_t>(j)];
      const Letter want = (mark.dir * choice.orientation) > 0 ? base : base.inverse();
      const auto [it, inserted] = imposed.emplace(mark.edge_id, want);
      if (!inserted && !(it->second == want)) return std::nullopt;
    }
  }

  AbstractDiagram inst = shape.diagram;
  const DiagramEdges e = collect_edges(inst);
  inst.fixed_edges.clear();
  for (const auto& [id, letter] : imposed)
    if (e.index_of.count(id)) inst.fixed_edges.emplace_back(id, letter);
  return inst;
}

std::vector<bool> corner_scan(const Presentation& p, const Relator& r,
                              std::span<const CannedShape> shapes) {
  std::vector<Relator> others;
  for (const Relator& rel : p.relators)
    if (!(rel == r)) others.push_back(rel);

  std::vector<bool> results;
  for (const CannedShape& shape : shapes) {
    bool fulfillable = false;
    std::vector<CornerChoice> choices(shape.removed.size());
    const std::function<void(std::size_t)> iterate = [&](std::size_t depth) {
      if (fulfillable) return;
      if (depth == choices.size()) {
        const auto inst = instantiate_shape(shape, r, choices);
        if (inst && !find_fulfillments(*inst, others, 1).empty()) fulfillable = true;
        return;
      }
      for (const int o : {1, -1})
        for (int s = 0; s < shape.diagram.relator_len; ++s) {
          choices[depth] = CornerChoice{o, s};
          iterate(depth + 1);
          if (fulfillable) return;
        }
    };
    iterate(0);
    results.push_back(fulfillable);
  }
  return results;
}

}  // namespace sqm
