#include "doctest.h"

#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "sqmodel/diagram.hpp"
#include "sqmodel/rng.hpp"
#include "test_util.hpp"

using namespace sqm;
using testutil::relator;

namespace {

AbstractDiagram single_square() {
  AbstractDiagram d;
  d.relator_len = 4;
  AbstractDiagram::Face f;
  f.id = 1;
  f.sides = {1, 2, 3, 4};
  d.faces.push_back(f);
  return d;
}

AbstractDiagram two_squares_one_edge() {
  AbstractDiagram d;
  d.relator_len = 4;
  AbstractDiagram::Face f1{1, {1, 2, 3, 4}, 1, 1, 0};
  AbstractDiagram::Face f2{2, {-1, 5, 6, 7}, 2, 1, 0};
  d.faces = {f1, f2};
  return d;
}

}  // namespace

TEST_CASE("validate fixed shapes") {
  CHECK(validate(single_square()).empty());

  const AbstractDiagram pair = two_squares_one_edge();
  CHECK(validate(pair).empty());
  const DiagramEdges e = collect_edges(pair);
  const DiagramVertices v = derive_vertices(pair, e);
  CHECK(v.count == 6);
  CHECK(e.edges.size() == 7);

  // An edge with three slots is rejected.
  AbstractDiagram bad = two_squares_one_edge();
  bad.faces[1].sides = {-1, 1, 5, 6};
  const auto defects = validate(bad);
  CHECK_FALSE(defects.empty());

  // Same-direction gluing breaks the rotation system.
  AbstractDiagram twisted = two_squares_one_edge();
  twisted.faces[1].sides = {1, 5, 6, 7};
  CHECK_FALSE(validate(twisted).empty());

  // Two disjoint squares: disconnected, and the Euler count is 2.
  AbstractDiagram split = single_square();
  AbstractDiagram::Face f2{2, {5, 6, 7, 8}, 2, 1, 0};
  split.faces.push_back(f2);
  CHECK_FALSE(validate(split).empty());
}

TEST_CASE("stats and the boundary identity on fixed shapes") {
  const DiagramStats s1 = diagram_stats(single_square());
  CHECK(s1.faces == 1);
  CHECK(s1.boundary_length == 4);
  CHECK(s1.total_boundary_sum == 4);

  const DiagramStats s2 = diagram_stats(two_squares_one_edge());
  CHECK(s2.faces == 2);
  CHECK(s2.boundary_length == 6);
  CHECK(s2.total_boundary_sum == 8);
}

TEST_CASE("letter positions respect orientation and start") {
  AbstractDiagram d = single_square();
  d.faces[0].start = 2;
  d.faces[0].orientation = 1;
  // Slots 2,3,0,1 carry letters 1,2,3,4.
  CHECK(d.letter_position(d.faces[0], 2) == 1);
  CHECK(d.letter_position(d.faces[0], 3) == 2);
  CHECK(d.letter_position(d.faces[0], 0) == 3);
  CHECK(d.letter_position(d.faces[0], 1) == 4);
  d.faces[0].orientation = -1;
  // Reading backwards: slots 2,1,0,3 carry letters 1,2,3,4.
  CHECK(d.letter_position(d.faces[0], 2) == 1);
  CHECK(d.letter_position(d.faces[0], 1) == 2);
  CHECK(d.letter_position(d.faces[0], 0) == 3);
  CHECK(d.letter_position(d.faces[0], 3) == 4);
}

TEST_CASE("reducedness") {
  // Mirror gluing: same class, opposite orientations, same position.
  AbstractDiagram d = two_squares_one_edge();
  d.faces[1].cls = 1;
  d.faces[1].orientation = -1;
  // Shared edge 1 sits at slot 0 of face 1 (k=1 with orientation +, start 0)
  // and slot 0 of face 2 (k=1 with orientation -, start 0).
  CHECK_FALSE(is_reduced(d));

  d.faces[1].start = 1;  // shifts the position: k differs now
  CHECK(is_reduced(d));

  d.faces[1].cls = 2;
  d.faces[1].start = 0;
  CHECK(is_reduced(d));  // distinct classes

  CHECK(is_reduced(single_square()));
}

TEST_CASE("ownership report") {
  AbstractDiagram d = two_squares_one_edge();
  d.faces[0].cls = 1;
  d.faces[1].cls = 2;
  // Shared edge 1: face 1 gives (class-rank of 1, k=1), face 2 gives
  // (rank of 2, k=1).  Ranks follow class ids here (equal multiplicity), so
  // the class-2 face owns the edge.
  const OwnershipReport rep = ownership(d);
  CHECK(rep.class_order == std::vector<int>{1, 2});
  CHECK(rep.multiplicity == std::vector<int>{1, 1});
  CHECK(rep.delta[0] == 0);
  CHECK(rep.delta[1] == 1);
  CHECK(rep.kappa == std::vector<int>{0, 1});
  CHECK(rep.never_fulfillable.empty());

  // Fixing the shared edge hands it to both faces.
  d.fixed_edges = {{1, Letter(1)}};
  const OwnershipReport both = ownership(d);
  CHECK(both.delta[0] == 1);
  CHECK(both.delta[1] == 1);

  // Single face, no fixed edges: all deltas zero.
  const OwnershipReport single = ownership(single_square());
  CHECK(single.delta == std::vector<int>{0});
}

TEST_CASE("ownership rejects non-reduced diagrams") {
  AbstractDiagram d = two_squares_one_edge();
  d.faces[1].cls = 1;
  d.faces[1].orientation = -1;  // mirror pair on the shared edge
  REQUIRE_FALSE(is_reduced(d));
  CHECK_THROWS_AS(ownership(d), std::invalid_argument);
}

TEST_CASE("iso_check requires relator length 4") {
  DiagramStats s;
  s.relator_len = 6;
  s.faces = 1;
  s.boundary_length = 6;
  CHECK_THROWS_AS(iso_check(s, Density::parse("0.2"), 0.0), std::invalid_argument);
}

TEST_CASE("never fulfillable edges short-circuit") {
  AbstractDiagram d = two_squares_one_edge();
  d.faces[1].cls = 1;
  d.faces[1].orientation = 1;  // same class, same orientation, same k
  const OwnershipReport rep = ownership(d);
  REQUIRE(rep.never_fulfillable.size() == 1);
  CHECK(rep.never_fulfillable[0] == 1);

  const std::vector<Relator> relators{relator(1, 2, 3, 4), relator(2, 2, 3, 3)};
  CHECK(find_fulfillments(d, relators, 10).empty());
}

TEST_CASE("iso check substitutions") {
  DiagramStats s;
  s.relator_len = 4;
  s.faces = 2;
  s.boundary_length = 6;
  CHECK(iso_check(s, Density::parse("0.25"), 0.05));  // 6 >= 3.6
  s.faces = 4;
  s.boundary_length = 4;
  CHECK_FALSE(iso_check(s, Density::parse("0.3"), 0.1));  // 4 < 4.8
  s.faces = 1;
  s.boundary_length = 4;
  CHECK(iso_check(s, Density::parse("0.49"), 0.0));
}

TEST_CASE("bound exponent") {
  DiagramStats s;
  s.relator_len = 4;
  s.faces = 2;
  s.boundary_length = 6;
  s.fixed_edges = 2;
  CHECK(bound_exponent(s, Density::parse("0.3"), 4) == doctest::Approx(-0.3));
  s.boundary_length = 4;
  s.fixed_edges = 0;
  CHECK(bound_exponent(s, Density::parse("0.2"), 4) == doctest::Approx(-0.2));
  s.boundary_length = 6;
  CHECK(bound_exponent(s, Density::parse("0.3"), 4) == doctest::Approx(0.7));
  const FulfillmentBound vac = fulfillment_bound(s, 5, Density::parse("0.3"), ModelKind::PositiveSquare);
  CHECK(vac.vacuous);
  CHECK(vac.probability == 1.0);

  s.boundary_length = 4;
  const FulfillmentBound pos = fulfillment_bound(s, 4, Density::parse("0.2"), ModelKind::PositiveSquare);
  CHECK_FALSE(pos.vacuous);
  CHECK(pos.probability == doctest::Approx(std::pow(4.0, -0.2)));
  const FulfillmentBound sq = fulfillment_bound(s, 4, Density::parse("0.2"), ModelKind::Square);
  CHECK(sq.probability == doctest::Approx(std::pow(7.0, -0.2)));
}

TEST_CASE("parity defects") {
  // A single square has no internal vertices.
  CHECK(parity_defects(single_square()).empty());
  CHECK(parity_defects(two_squares_one_edge()).empty());
}

TEST_CASE("fulfillment search on fixed examples") {
  const std::vector<Relator> one{relator(1, 2, 3, 4)};
  {
    const auto results = find_fulfillments(single_square(), one, 10);
    REQUIRE(results.size() == 1);
    CHECK(results[0].by_class.size() == 1);
    CHECK(results[0].by_class[0].second == relator(1, 2, 3, 4));
  }
  {
    // Fixed letter a2 where the relator puts a1.
    AbstractDiagram d = single_square();
    d.fixed_edges = {{1, Letter(2)}};
    CHECK(find_fulfillments(d, one, 10).empty());
    d.fixed_edges = {{1, Letter(1)}};
    CHECK(find_fulfillments(d, one, 10).size() == 1);
  }
  {
    // Orientation -1 reads the relator backwards with inverted letters.
    AbstractDiagram d = single_square();
    d.faces[0].orientation = -1;
    d.fixed_edges = {{1, Letter(-1)}};
    CHECK(find_fulfillments(d, one, 10).size() == 1);
    d.fixed_edges = {{1, Letter(1)}};
    CHECK(find_fulfillments(d, one, 10).empty());
  }
  {
    // Distinct classes must use distinct relators.
    AbstractDiagram d = two_squares_one_edge();
    const std::vector<Relator> relators{relator(1, 2, 3, 4), relator(-1, 1, 2, 3)};
    // Edge 1: face 1 needs w1 of its relator, face 2 needs (w'1)^-1.
    const auto results = find_fulfillments(d, relators, 10);
    for (const auto& f : results) {
      REQUIRE(f.by_class.size() == 2);
      CHECK_FALSE(f.by_class[0].second == f.by_class[1].second);
    }
  }
}

TEST_CASE("fulfillment replay and class relabeling invariance on random diagrams") {
  SplitMix64 rng(1313);
  int searched = 0;
  for (int trial = 0; trial < 200 && searched < 60; ++trial) {
    const int faces = 1 + static_cast<int>(rng.below(3));
    AbstractDiagram d = testutil::random_disc_diagram(rng, faces, faces, 0, 2);
    if (!validate(d).empty()) continue;
    ++searched;

    // Relators over a 2-letter alphabet so matches are likely.
    std::vector<Relator> relators;
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int c = 1; c <= 2; ++c)
          for (int e = 1; e <= 2; ++e) relators.push_back(relator(a, b, c, e));

    const auto results = find_fulfillments(d, relators, 200);
    const DiagramEdges edges = collect_edges(d);
    for (const auto& f : results) {
      // Replay: every slot must read its relator letter consistently.
      std::map<int, Relator> by_class(f.by_class.begin(), f.by_class.end());
      for (const auto& edge : edges.edges) {
        std::optional<Letter> label = edge.fixed;
        for (const auto& slot : edge.slots) {
          const auto& face = d.faces[static_cast<std::size_t>(slot.face)];
          const Relator& w = by_class.at(face.cls);
          const int k = d.letter_position(face, slot.pos);
          const int s = d.letter_sign(face, slot.pos);
          const Letter expect =
              s > 0 ? w.letters[static_cast<std::size_t>(k - 1)]
                    : w.letters[static_cast<std::size_t>(k - 1)].inverse();
          if (label.has_value()) {
            CHECK(*label == expect);
          } else {
            label = expect;
          }
        }
      }
    }

    // Relabeling the class ids cannot change the number of fulfillments.
    AbstractDiagram relabeled = d;
    for (auto& face : relabeled.faces) face.cls += 17;
    CHECK(find_fulfillments(relabeled, relators, 200).size() == results.size());
  }
  CHECK(searched >= 40);
}

TEST_CASE("delta identity on random reduced diagrams") {
  SplitMix64 rng(5150);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    const int faces = 1 + static_cast<int>(rng.below(5));
    const int classes = 1 + static_cast<int>(rng.below(3));
    const int fixed = static_cast<int>(rng.below(3));
    AbstractDiagram d = testutil::random_disc_diagram(rng, faces, classes, fixed, 3);
    if (!validate(d).empty()) continue;
    if (!is_reduced(d)) continue;
    OwnershipReport rep;
    try {
      rep = ownership(d);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!rep.never_fulfillable.empty()) continue;  // unowned edges break the identity
    ++checked;

    const DiagramStats s = diagram_stats(d);
    int delta_sum = 0;
    for (const int dv : rep.delta) delta_sum += dv;
    CHECK(s.boundary_length - 2 * s.fixed_edges == 4 * s.faces - 2 * delta_sum);
  }
  CHECK(checked >= 100);
}

TEST_CASE("diagram file round trip") {
  AbstractDiagram d = two_squares_one_edge();
  d.faces[1].orientation = -1;
  d.faces[1].start = 3;
  d.fixed_edges = {{5, Letter(-2)}};
  std::stringstream buf;
  write_diagram(buf, d);
  AbstractDiagram q = read_diagram(buf);
  CHECK(q.relator_len == 4);
  REQUIRE(q.faces.size() == 2);
  CHECK(q.faces[1].sides == d.faces[1].sides);
  CHECK(q.faces[1].orientation == -1);
  CHECK(q.faces[1].start == 3);
  REQUIRE(q.fixed_edges.size() == 1);
  CHECK(q.fixed_edges[0].first == 5);
  CHECK(q.fixed_edges[0].second == Letter(-2));

  std::istringstream bad("l=4\nface 1 1 2 3\n");
  CHECK_THROWS(read_diagram(bad));
}

TEST_CASE("random disc diagrams satisfy the Euler relation") {
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    const int faces = 1 + static_cast<int>(rng.below(6));
    const AbstractDiagram d = testutil::random_disc_diagram(rng, faces, 2, 0, 2);
    CHECK(validate(d).empty());
    const DiagramEdges e = collect_edges(d);
    const DiagramVertices v = derive_vertices(d, e);
    CHECK(v.count - static_cast<int>(e.edges.size()) + static_cast<int>(d.faces.size()) == 1);
  }
}
