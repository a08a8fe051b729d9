#include "tilings/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tilings {

Graph Graph::from_edges(
    std::uint32_t n,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  Graph g;
  g.n = n;
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop in graph");
    if (u >= n || v >= n) throw std::invalid_argument("vertex id out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);

  g.offsets.assign(n + 1, 0);
  for (const auto& [u, v] : g.edges) {
    ++g.offsets[u + 1];
    ++g.offsets[v + 1];
  }
  for (std::uint32_t i = 0; i < n; ++i) g.offsets[i + 1] += g.offsets[i];
  g.neighbors.resize(g.edges.size() * 2);
  std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [u, v] : g.edges) {
    g.neighbors[cursor[u]++] = v;
    g.neighbors[cursor[v]++] = u;
  }
  for (std::uint32_t v = 0; v < n; ++v)
    std::sort(g.neighbors.begin() + g.offsets[v],
              g.neighbors.begin() + g.offsets[v + 1]);
  return g;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  std::vector<std::int32_t> d = bfs_distances(g, 0);
  for (std::uint32_t v = 0; v < g.n; ++v)
    if (d[v] < 0) return false;
  return true;
}

std::vector<std::int32_t> bfs_distances(const Graph& g, std::uint32_t src,
                                        std::int64_t max_radius) {
  std::vector<std::int32_t> dist(g.n, -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(g.n);
  dist[src] = 0;
  queue.push_back(src);
  std::size_t head = 0;
  while (head < queue.size()) {
    std::uint32_t v = queue[head++];
    std::int32_t dv = dist[v];
    if (max_radius >= 0 && dv >= max_radius) continue;
    for (std::uint32_t w : g.adj(v)) {
      if (dist[w] < 0) {
        dist[w] = dv + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::int64_t eccentricity(const Graph& g, std::uint32_t src) {
  auto d = bfs_distances(g, src);
  std::int64_t e = 0;
  for (std::uint32_t v = 0; v < g.n; ++v) e = std::max<std::int64_t>(e, d[v]);
  return e;
}

Graph subdivide(const Graph& g, int m) {
  if (m < 1) throw std::invalid_argument("subdivision order must be >= 1");
  if (m == 1) return g;
  const std::uint64_t extra =
      static_cast<std::uint64_t>(m - 1) * g.edges.size();
  const std::uint64_t total = g.n + extra;
  if (total > UINT32_MAX) throw std::invalid_argument("subdivision too large");

  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(static_cast<std::size_t>(m) * g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    std::uint32_t base = g.n + static_cast<std::uint32_t>(e * (m - 1));
    std::uint32_t prev = u;
    for (int t = 0; t < m - 1; ++t) {
      edges.emplace_back(prev, base + t);
      prev = base + t;
    }
    edges.emplace_back(prev, v);
  }
  return Graph::from_edges(static_cast<std::uint32_t>(total),
                           std::move(edges));
}

}  // namespace tilings
