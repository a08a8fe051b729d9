#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tilings {

// Undirected simple graph with a CSR view for traversal.
struct Graph {
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v, sorted
  std::vector<std::uint32_t> offsets;                          // n + 1
  std::vector<std::uint32_t> neighbors;

  static Graph from_edges(
      std::uint32_t n,
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::span<const std::uint32_t> adj(std::uint32_t v) const {
    return {neighbors.data() + offsets[v], neighbors.data() + offsets[v + 1]};
  }
  std::uint32_t degree(std::uint32_t v) const {
    return offsets[v + 1] - offsets[v];
  }
  std::size_t edge_count() const { return edges.size(); }
};

bool is_connected(const Graph& g);

// BFS distances from src; -1 for unreached. max_radius < 0 means unbounded.
std::vector<std::int32_t> bfs_distances(const Graph& g, std::uint32_t src,
                                        std::int64_t max_radius = -1);

// Largest finite distance from src (requires connected for a true ecc).
std::int64_t eccentricity(const Graph& g, std::uint32_t src);

// Replace each edge by a path of m edges. Interior vertices of edge e get the
// ids n + e*(m-1) ... n + e*(m-1) + (m-2), ordered from the smaller endpoint,
// so ids are reproducible from the sorted edge list.
Graph subdivide(const Graph& g, int m);

}  // namespace tilings
