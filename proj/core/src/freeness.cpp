#include "sqmodel/freeness.hpp"

#include <algorithm>
#include <stdexcept>

#include "sqmodel/rng.hpp"

namespace sqm {

namespace {

// The live sub-complex during the removal procedure.
struct LiveComplex {
  std::vector<bool> one_cell_alive;
  std::vector<bool> two_cell_alive;
  const SquareComplex* full;

  HypergraphGraph gamma() const {
    HypergraphGraph g;
    g.one_cell_count = static_cast<int>(one_cell_alive.size());
    for (std::size_t c = 0; c < full->two_cells.size(); ++c) {
      if (!two_cell_alive[c]) continue;
      const auto& cell = full->two_cells[c];
      g.edges.push_back({cell.side[0], cell.side[2], static_cast<int>(c), 0});
      g.edges.push_back({cell.side[1], cell.side[3], static_cast<int>(c), 1});
    }
    return g;
  }

  // Components of the live part of Gamma, in smallest-one-cell order.
  std::vector<Hypergraph> components(const HypergraphGraph& g) const {
    std::vector<Hypergraph> all = hypergraphs(g);
    std::vector<Hypergraph> live;
    for (Hypergraph& h : all) {
      const bool alive = std::all_of(h.vertices.begin(), h.vertices.end(),
                                     [&](int v) { return one_cell_alive[v]; });
      if (alive) {
        h.id = static_cast<int>(live.size());
        live.push_back(std::move(h));
      } else if (!h.edge_indices.empty() ||
                 std::any_of(h.vertices.begin(), h.vertices.end(),
                             [&](int v) { return one_cell_alive[v]; })) {
        throw std::logic_error("dead one-cell still referenced by a live component");
      }
    }
    return live;
  }
};

FreenessResult run_detect_free(const Presentation& p, SplitMix64* order_rng) {
  const SquareComplex x = build_presentation_complex(p);
  LiveComplex live{std::vector<bool>(x.one_cells.size(), true),
                   std::vector<bool>(x.two_cells.size(), true), &x};

  FreenessResult result;
  FreenessCertificate cert;
  bool first_pass = true;

  for (;;) {
    const HypergraphGraph gamma = live.gamma();
    const std::vector<Hypergraph> comps = live.components(gamma);

    std::vector<int> edgeful;
    for (const Hypergraph& h : comps) {
      const EmbeddedTreeCheck check = is_embedded_tree(h, gamma);
      if (!check.ok) {
        if (!first_pass)
          throw std::logic_error("embedded-tree condition lost during removal");
        result.witness = FreenessWitness{h.id, h.vertices, check};
        return result;
      }
      if (!h.edge_indices.empty()) edgeful.push_back(h.id);
    }
    first_pass = false;

    if (edgeful.empty()) {
      cert.leftover_loops = static_cast<int>(
          std::count(live.one_cell_alive.begin(), live.one_cell_alive.end(), true));
      cert.rank = static_cast<int>(cert.removals.size()) + cert.leftover_loops;
      result.certificate = std::move(cert);
      return result;
    }

    const int pick = order_rng == nullptr
                         ? edgeful.front()
                         : edgeful[order_rng->below(edgeful.size())];
    const Hypergraph& h = comps[pick];

    RemovalStep step;
    step.component_vertices = h.vertices;
    for (const int ei : h.edge_indices)
      step.component_edges.emplace_back(gamma.edges[ei].a, gamma.edges[ei].b);
    step.carrier_two_cells = carrier(h, gamma);
    for (const int v : h.vertices) live.one_cell_alive[v] = false;
    for (const int c : step.carrier_two_cells) live.two_cell_alive[c] = false;
    cert.removals.push_back(std::move(step));

    if (cert.removals.size() > p.n)
      throw std::logic_error("removal procedure failed to terminate in n steps");
  }
}

}  // namespace

FreenessResult detect_free(const Presentation& p) { return run_detect_free(p, nullptr); }

FreenessResult detect_free_randomized(const Presentation& p, std::uint64_t order_seed) {
  SplitMix64 rng(derive_seed(order_seed, 0x6f72646572ULL));
  return run_detect_free(p, &rng);
}

bool certified_rank_identity(const FreenessCertificate& cert, const Presentation& p) {
  return cert.rank == static_cast<int>(p.n) - static_cast<int>(p.relators.size());
}

}  // namespace sqm
