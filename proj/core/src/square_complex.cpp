#include "sqmodel/square_complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sqm {

SquareComplex build_presentation_complex(const Presentation& p) {
  SquareComplex x;
  x.vertex_count = 1;
  x.one_cells.assign(p.n, {0, 0});
  x.two_cells.reserve(p.relators.size());
  for (const Relator& r : p.relators) {
    SquareComplex::TwoCell cell{};
    for (int i = 0; i < 4; ++i) {
      cell.side[i] = r.letters[i].generator() - 1;
      cell.dir[i] = r.letters[i].sign();
    }
    x.two_cells.push_back(cell);
  }
  return x;
}

HypergraphGraph build_hypergraph_graph(const SquareComplex& x) {
  HypergraphGraph g;
  g.one_cell_count = static_cast<int>(x.one_cells.size());
  g.edges.reserve(2 * x.two_cells.size());
  for (std::size_t c = 0; c < x.two_cells.size(); ++c) {
    const auto& cell = x.two_cells[c];
    g.edges.push_back({cell.side[0], cell.side[2], static_cast<int>(c), 0});
    g.edges.push_back({cell.side[1], cell.side[3], static_cast<int>(c), 1});
  }
  return g;
}

std::vector<Hypergraph> hypergraphs(const HypergraphGraph& gamma) {
  const int n = gamma.one_cell_count;
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge index)
  for (std::size_t i = 0; i < gamma.edges.size(); ++i) {
    const auto& e = gamma.edges[i];
    adj[e.a].emplace_back(e.b, static_cast<int>(i));
    if (e.a != e.b) adj[e.b].emplace_back(e.a, static_cast<int>(i));
  }

  std::vector<Hypergraph> out;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    Hypergraph h;
    h.id = id;
    comp[root] = id;
    stack.assign(1, root);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      h.vertices.push_back(u);
      for (const auto& [v, ei] : adj[u]) {
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(h.vertices.begin(), h.vertices.end());
    out.push_back(std::move(h));
  }
  for (std::size_t i = 0; i < gamma.edges.size(); ++i)
    out[comp[gamma.edges[i].a]].edge_indices.push_back(static_cast<int>(i));
  return out;
}

EmbeddedTreeCheck is_embedded_tree(const Hypergraph& h, const HypergraphGraph& gamma) {
  EmbeddedTreeCheck check;

  // Two edges of the component on one two-cell break the embedding.
  {
    std::vector<int> cells;
    cells.reserve(h.edge_indices.size());
    for (const int ei : h.edge_indices) cells.push_back(gamma.edges[ei].two_cell);
    std::sort(cells.begin(), cells.end());
    const auto dup = std::adjacent_find(cells.begin(), cells.end());
    if (dup != cells.end()) {
      check.ok = false;
      check.failure = EmbeddedTreeCheck::Failure::SharedTwoCell;
      check.two_cell = *dup;
    }
  }

  // Self-loops are cycles of length one.
  for (const int ei : h.edge_indices) {
    const auto& e = gamma.edges[ei];
    if (e.a == e.b) {
      check.ok = false;
      check.failure = EmbeddedTreeCheck::Failure::Cycle;
      check.cycle = {e.a, e.a};
      return check;
    }
  }

  // DFS over the component; a non-tree edge closes a cycle.
  std::vector<std::vector<std::pair<int, int>>> adj;
  std::vector<int> local(gamma.one_cell_count, -1);
  for (std::size_t i = 0; i < h.vertices.size(); ++i) local[h.vertices[i]] = static_cast<int>(i);
  adj.resize(h.vertices.size());
  for (const int ei : h.edge_indices) {
    const auto& e = gamma.edges[ei];
    adj[local[e.a]].emplace_back(local[e.b], ei);
    adj[local[e.b]].emplace_back(local[e.a], ei);
  }
  std::vector<int> parent(h.vertices.size(), -1), parent_edge(h.vertices.size(), -1),
      depth(h.vertices.size(), -1);
  std::vector<int> stack{0};
  depth[0] = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const auto& [v, ei] : adj[u]) {
      if (ei == parent_edge[u]) continue;
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        parent[v] = u;
        parent_edge[v] = ei;
        stack.push_back(v);
      } else {
        // Non-tree edge (u,v): close a cycle through the tree paths to the
        // lowest common ancestor.
        std::vector<int> up, vp;
        int a = u, b = v;
        while (depth[a] > depth[b]) {
          up.push_back(a);
          a = parent[a];
        }
        while (depth[b] > depth[a]) {
          vp.push_back(b);
          b = parent[b];
        }
        while (a != b) {
          up.push_back(a);
          vp.push_back(b);
          a = parent[a];
          b = parent[b];
        }
        check.ok = false;
        check.failure = EmbeddedTreeCheck::Failure::Cycle;
        check.cycle.clear();
        for (const int w : up) check.cycle.push_back(h.vertices[w]);  // u .. below lca
        check.cycle.push_back(h.vertices[a]);                        // lca
        for (auto it = vp.rbegin(); it != vp.rend(); ++it) check.cycle.push_back(h.vertices[*it]);
        check.cycle.push_back(h.vertices[u]);  // close via the non-tree edge
        return check;
      }
    }
  }
  return check;
}

std::vector<int> carrier(const Hypergraph& h, const HypergraphGraph& gamma) {
  std::vector<int> cells;
  cells.reserve(h.edge_indices.size());
  for (const int ei : h.edge_indices) cells.push_back(gamma.edges[ei].two_cell);
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

std::vector<int> generators_occurring_once(const Presentation& p) {
  std::vector<int> count(p.n, 0);
  for (const Relator& r : p.relators)
    for (const Letter l : r.letters) ++count[l.generator() - 1];
  std::vector<int> once;
  for (std::size_t g = 0; g < p.n; ++g)
    if (count[g] == 1) once.push_back(static_cast<int>(g) + 1);
  return once;
}

HypergraphStats hypergraph_stats(const Presentation& p) {
  const SquareComplex x = build_presentation_complex(p);
  const HypergraphGraph gamma = build_hypergraph_graph(x);
  const std::vector<Hypergraph> comps = hypergraphs(gamma);

  HypergraphStats stats;
  stats.components = static_cast<int>(comps.size());
  stats.all_embedded_trees = true;
  for (const Hypergraph& h : comps) {
    const EmbeddedTreeCheck check = is_embedded_tree(h, gamma);
    if (check.ok) {
      ++stats.embedded_trees;
      ++stats.trees;
    } else {
      stats.all_embedded_trees = false;
      // SharedTwoCell failures are reported only after the cycle scan passed,
      // so the component is still acyclic.
      if (check.failure == EmbeddedTreeCheck::Failure::SharedTwoCell) ++stats.trees;
    }
  }

  std::vector<int> degree(gamma.one_cell_count, 0);
  for (const auto& e : gamma.edges) {
    ++degree[e.a];
    ++degree[e.b];
  }
  stats.leaves = static_cast<int>(std::count(degree.begin(), degree.end(), 1));
  return stats;
}

}  // namespace sqm
