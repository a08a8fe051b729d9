#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilings/graph.hpp"
#include "tilings/numeric.hpp"
#include "tilings/tiling.hpp"

namespace tilings {

// Tangency graph of a tiling: an edge whenever two tiles share a face of
// positive (d-1)-volume. Each edge carries the axis (0-based) on which the
// closed intervals touch; those labels partition the edge set.
struct TangencyGraph {
  Graph graph;
  int dim = 0;
  std::vector<std::uint8_t> edge_dir;  // parallel to graph.edges

  std::size_t edge_count() const { return graph.edges.size(); }
};

// Sweep over shared face coordinates; exact integer comparisons throughout.
// Throws if the resulting graph is disconnected (the constructions here
// always yield connected graphs) unless require_connected is false.
TangencyGraph build_tangency_graph(const Tiling& t,
                                   bool require_connected = true);

// All-pairs oracle, guarded by tile count.
TangencyGraph brute_force_tangency(const Tiling& t,
                                   std::size_t guard = 20000,
                                   bool require_connected = true);

// Same labeled edge sets.
bool same_labeled_edges(const TangencyGraph& a, const TangencyGraph& b);

// Aspect statistics controlling degrees and growth constants.
struct AlphaStats {
  Rational alpha;                        // max over directions
  std::vector<Rational> alpha_per_dir;   // per edge direction
  Rational max_side;                     // L_T
  std::uint32_t max_degree = 0;
  std::uint32_t max_degree_vertex = 0;
};

AlphaStats alpha_stats(const Tiling& t, const TangencyGraph& g);

struct DegreeBoundCheck {
  bool ok = false;
  Rational bound;  // 3^d * alpha^(2d)
  std::uint32_t max_degree = 0;
  std::uint32_t witness = 0;  // a vertex of maximum degree
};

DegreeBoundCheck check_degree_bound(const Tiling& t, const TangencyGraph& g);

}  // namespace tilings
