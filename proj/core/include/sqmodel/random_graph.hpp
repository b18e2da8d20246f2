#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace sqm {

// A walk is a vertex sequence; consecutive entries are joined by edges.
// Closed walks repeat the base vertex at the end.  Walk length = size() - 1.
using Walk = std::vector<int>;

// Simple undirected graph; self-loops allowed, multi-edges not.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_self_loop(int v) const { return self_loop_[v]; }

  // Returns false if the edge was already present.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;

 private:
  std::uint64_t key(int u, int v) const;

  int n_;
  std::vector<std::pair<int, int>> edges_;  // normalized u <= v
  std::vector<std::vector<int>> adj_;
  std::vector<bool> self_loop_;
  std::unordered_set<std::uint64_t> keys_;
};

// Erdos-Renyi G(n, m): uniform over loop-free simple graphs with m edges.
SimpleGraph sample_gnm(int n, std::uint64_t m, std::uint64_t seed);

// Gilbert G(n, p): each of the n(n-1)/2 pairs independently with probability p.
SimpleGraph sample_gnp(int n, double p, std::uint64_t seed);

bool is_connected(const SimpleGraph& g);

// An odd closed walk when the graph is non-bipartite (a self-loop counts,
// giving a walk of length 1); nullopt otherwise.
std::optional<Walk> odd_cycle(const SimpleGraph& g);

// An even-length walk from x to y, when one exists.  Built as in the
// constructive argument: tree paths through the component, with a detour
// around an odd closed walk when the parities disagree.
std::optional<Walk> even_path(const SimpleGraph& g, int x, int y);

// Walk replay helpers used by tests and certificate checks.
bool walk_is_valid(const SimpleGraph& g, const Walk& w);
bool walk_is_closed(const Walk& w);

enum class GraphProperty { Connected, OddCycle };

// Fraction of `trials` samples of G(n, n^{delta-1}) satisfying the property;
// trial t uses the substream derive_seed(seed, t).
double estimate_threshold(int n, double delta, int trials, GraphProperty property,
                          std::uint64_t seed);

}  // namespace sqm
