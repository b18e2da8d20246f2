#include "sqmodel/random_graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "sqmodel/rng.hpp"

namespace sqm {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(n), self_loop_(n, false) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

std::uint64_t SimpleGraph::key(int u, int v) const {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v);
}

bool SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (!keys_.insert(key(u, v)).second) return false;
  if (u > v) std::swap(u, v);
  edges_.emplace_back(u, v);
  adj_[u].push_back(v);
  if (u != v)
    adj_[v].push_back(u);
  else
    self_loop_[u] = true;
  return true;
}

bool SimpleGraph::has_edge(int u, int v) const { return keys_.count(key(u, v)) > 0; }

SimpleGraph sample_gnm(int n, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t max_edges =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  if (m > max_edges) throw std::invalid_argument("m exceeds the number of vertex pairs");
  SimpleGraph g(n);
  SplitMix64 rng(derive_seed(seed, 0));
  while (g.edge_count() < m) {
    const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    g.add_edge(u, v);
  }
  return g;
}

SimpleGraph sample_gnp(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0,1]");
  SimpleGraph g(n);
  SplitMix64 rng(derive_seed(seed, 0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

namespace {

struct BfsTree {
  std::vector<int> parent;  // -1 for root / unreached
  std::vector<int> depth;   // -1 for unreached
};

BfsTree bfs(const SimpleGraph& g, int root) {
  BfsTree t{std::vector<int>(g.vertex_count(), -1), std::vector<int>(g.vertex_count(), -1)};
  std::queue<int> q;
  t.depth[root] = 0;
  q.push(root);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (const int v : g.neighbors(u)) {
      if (t.depth[v] < 0) {
        t.depth[v] = t.depth[u] + 1;
        t.parent[v] = u;
        q.push(v);
      }
    }
  }
  return t;
}

Walk path_from_root(const BfsTree& t, int v) {
  Walk w;
  for (int u = v; u >= 0; u = t.parent[u]) w.push_back(u);
  std::reverse(w.begin(), w.end());
  return w;
}

// Odd closed walk based at `root`, restricted to root's BFS component;
// nullopt when that component is bipartite and loop-free.
std::optional<Walk> odd_walk_at(const SimpleGraph& g, const BfsTree& t) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (t.depth[v] < 0 || !g.has_self_loop(v)) continue;
    Walk down = path_from_root(t, v);
    Walk w = down;
    w.push_back(v);  // traverse the loop
    for (auto it = down.rbegin() + 1; it != down.rend(); ++it) w.push_back(*it);
    return w;
  }
  for (const auto& [u, v] : g.edges()) {
    if (u == v || t.depth[u] < 0 || t.depth[v] < 0) continue;
    if ((t.depth[u] & 1) != (t.depth[v] & 1)) continue;
    Walk w = path_from_root(t, u);
    Walk back = path_from_root(t, v);
    w.push_back(v);
    for (auto it = back.rbegin() + 1; it != back.rend(); ++it) w.push_back(*it);
    return w;
  }
  return std::nullopt;
}

}  // namespace

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return true;
  const BfsTree t = bfs(g, 0);
  return std::none_of(t.depth.begin(), t.depth.end(), [](int d) { return d < 0; });
}

std::optional<Walk> odd_cycle(const SimpleGraph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    const BfsTree t = bfs(g, root);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (t.depth[v] >= 0) seen[v] = true;
    if (auto w = odd_walk_at(g, t)) return w;
  }
  return std::nullopt;
}

std::optional<Walk> even_path(const SimpleGraph& g, int x, int y) {
  if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count())
    throw std::out_of_range("vertex out of range");
  if (x == y) return Walk{x};
  const BfsTree t = bfs(g, x);
  if (t.depth[y] < 0) return std::nullopt;
  if (t.depth[y] % 2 == 0) return path_from_root(t, y);
  // Parities mismatch: go around an odd closed walk based at x first.
  auto loop = odd_walk_at(g, t);
  if (!loop) return std::nullopt;
  Walk w = *loop;
  const Walk tail = path_from_root(t, y);
  w.insert(w.end(), tail.begin() + 1, tail.end());
  return w;
}

bool walk_is_valid(const SimpleGraph& g, const Walk& w) {
  if (w.empty()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!g.has_edge(w[i], w[i + 1])) return false;
  return true;
}

bool walk_is_closed(const Walk& w) { return !w.empty() && w.front() == w.back(); }

double estimate_threshold(int n, double delta, int trials, GraphProperty property,
                          std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const double p = std::min(1.0, std::pow(static_cast<double>(n), delta - 1.0));
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    const SimpleGraph g = sample_gnp(n, p, derive_seed(seed, static_cast<std::uint64_t>(t)));
    const bool ok = property == GraphProperty::Connected ? is_connected(g)
                                                         : odd_cycle(g).has_value();
    hits += ok ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace sqm
