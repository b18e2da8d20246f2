#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqmodel/presentation.hpp"
#include "sqmodel/random_graph.hpp"

namespace sqm {

// Graph on the n^2 ordered generator pairs (i,j).  Every positive relator
// a_i a_j a_k a_l contributes one edge (i,j)--(k,l); relators of the form
// a_i a_j a_i a_j become self-loops.  An edge encodes the group relation
// a_i a_j = (a_k a_l)^{-1}, so even paths force equality of 2-letter words
// and odd closed walks force w = w^{-1}.
struct WordPairGraph {
  struct Edge {
    int u, v;           // pair vertices, index (i-1)*n + (j-1)
    int relator_index;  // position in the presentation's relator list
  };

  std::uint64_t n = 0;
  std::vector<Edge> edges;  // multiset; parallel edges kept
  int r0_count = 0;         // relators of the a_i a_j a_i a_j form

  std::uint64_t vertex_count() const { return n * n; }
};

WordPairGraph build_word_pair_graph(const Presentation& p);

enum class TrivialityStatus { Certified, Unknown };

// Certificate that all 2-letter positive words are equal: a spanning
// traversal tree of the word-pair graph plus one odd closed walk.  Certified
// means the group is Z4 in the positive model, Z4 or Z2 in the square model.
// Unknown is not a disproof.
struct TrivialityVerdict {
  TrivialityStatus status = TrivialityStatus::Unknown;
  std::vector<std::pair<int, int>> spanning_tree;  // (parent, child) vertex pairs
  Walk odd_walk;
};

TrivialityVerdict detect_trivial(const Presentation& p);

}  // namespace sqm
