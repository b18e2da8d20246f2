#include "sqmodel/word_pair_graph.hpp"

#include <algorithm>
#include <queue>

namespace sqm {

WordPairGraph build_word_pair_graph(const Presentation& p) {
  WordPairGraph g;
  g.n = p.n;
  const int n = static_cast<int>(p.n);
  for (std::size_t idx = 0; idx < p.relators.size(); ++idx) {
    const Relator& r = p.relators[idx];
    if (!r.positive()) continue;
    const int u = (r.letters[0].generator() - 1) * n + (r.letters[1].generator() - 1);
    const int v = (r.letters[2].generator() - 1) * n + (r.letters[3].generator() - 1);
    g.edges.push_back({u, v, static_cast<int>(idx)});
    if (u == v) ++g.r0_count;
  }
  return g;
}

TrivialityVerdict detect_trivial(const Presentation& p) {
  const WordPairGraph g = build_word_pair_graph(p);
  const int nv = static_cast<int>(g.vertex_count());

  std::vector<std::vector<int>> adj(nv);
  std::vector<int> loop_vertex;
  for (const auto& e : g.edges) {
    if (e.u == e.v) {
      loop_vertex.push_back(e.u);
      continue;
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  TrivialityVerdict verdict;
  std::vector<int> parent(nv, -1), depth(nv, -1);
  std::queue<int> q;
  depth[0] = 0;
  q.push(0);
  int reached = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (const int v : adj[u]) {
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        parent[v] = u;
        verdict.spanning_tree.emplace_back(u, v);
        q.push(v);
        ++reached;
      }
    }
  }
  if (reached != nv) {
    verdict.spanning_tree.clear();  // partial tree is not a certificate
    return verdict;
  }

  const auto path_to_root = [&](int v) {
    Walk w;
    for (int u = v; u >= 0; u = parent[u]) w.push_back(u);
    std::reverse(w.begin(), w.end());
    return w;  // root .. v
  };

  Walk odd;
  if (!loop_vertex.empty()) {
    const int v = *std::min_element(loop_vertex.begin(), loop_vertex.end());
    Walk down = path_to_root(v);
    odd = down;
    odd.push_back(v);
    for (auto it = down.rbegin() + 1; it != down.rend(); ++it) odd.push_back(*it);
  } else {
    for (const auto& e : g.edges) {
      if (e.u == e.v || (depth[e.u] & 1) != (depth[e.v] & 1)) continue;
      Walk down = path_to_root(e.u);
      Walk back = path_to_root(e.v);
      odd = down;
      odd.push_back(e.v);
      for (auto it = back.rbegin() + 1; it != back.rend(); ++it) odd.push_back(*it);
      break;
    }
  }
  if (odd.empty()) return verdict;  // bipartite: Unknown

  verdict.status = TrivialityStatus::Certified;
  verdict.odd_walk = std::move(odd);
  return verdict;
}

}  // namespace sqm
