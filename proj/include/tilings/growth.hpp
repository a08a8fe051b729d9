#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tilings/graph.hpp"
#include "tilings/tangency.hpp"
#include "tilings/tiling.hpp"

namespace tilings {

// B_G(v,R) and S_G(v,R) as sorted vertex sets; sizes via bounded BFS.
std::vector<std::uint32_t> ball_vertices(const Graph& g, std::uint32_t v,
                                         std::int64_t radius);
std::vector<std::uint32_t> sphere_vertices(const Graph& g, std::uint32_t v,
                                           std::int64_t radius);
std::uint64_t ball_size(const Graph& g, std::uint32_t v, std::int64_t radius);
std::uint64_t sphere_size(const Graph& g, std::uint32_t v,
                          std::int64_t radius);

struct DiameterResult {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool exact = false;
  std::uint64_t bfs_count = 0;

  std::int64_t value() const { return lower; }
};

// Exact diameter by pruned eccentricity search (double sweep start, then
// levels in decreasing order with the 2*level cutoff). Every computed number
// is a plain BFS eccentricity, the cutoff only skips provably dominated ones.
DiameterResult diameter_exact(const Graph& g);

// Certified interval [max ecc found, 2 * min ecc found] from a double sweep
// plus seeded sample eccentricities.
DiameterResult diameter_bounds(const Graph& g, std::uint64_t seed = 1,
                               int samples = 8);

// Exact when |V| <= exact_guard, certified interval otherwise.
DiameterResult diameter(const Graph& g, std::size_t exact_guard = 100000,
                        std::uint64_t seed = 1, int samples = 8);

struct GrowthSample {
  std::uint32_t vertex = 0;
  std::int64_t radius = 0;
  std::uint64_t ball = 0;
};

struct GrowthProfile {
  std::vector<GrowthSample> samples;
  double fitted_k = 0.0;
  double min_vertex_slope = 0.0;
  double max_vertex_slope = 0.0;
  // Smallest C with C^-1 R^k <= |B| <= C R^k over all samples, at k_theory
  // when known, else at fitted_k.
  double sandwich_C = 0.0;
  std::optional<double> k_theory;
};

struct GrowthOptions {
  int sample_count = 64;
  std::uint64_t seed = 1;
  std::vector<std::int64_t> radii;
  // Exhaustive vertex enumeration below this size.
  std::size_t full_enumeration_below = 10000;
  // BFS jobs parallelize over sample vertices; results are keyed by sample
  // index, so the profile does not depend on the thread count.
  int threads = 1;
};

// Seeded deterministic vertex sample; exhaustive on small graphs.
std::vector<std::uint32_t> sample_vertices(std::uint32_t n,
                                           const GrowthOptions& opt);

GrowthProfile growth_profile(const Graph& g, const GrowthOptions& opt,
                             std::optional<double> k_theory = std::nullopt);

// |B(v, (d+1) b^j)| >= (|gamma|^(d))^j for j = 0..n, on sampled vertices.
struct IngredientReport {
  bool ok = true;
  std::vector<std::string> violations;
};
IngredientReport check_growth_lower_ingredient(
    const Tiling& t, const Graph& g,
    const std::vector<std::uint32_t>& samples);

// |B(X, 1/(alpha_S^(2d) L_T))| <= (3 alpha_S^2)^(d^2) (d+1) |T| on sampled X
// in the product S o T.
IngredientReport check_growth_upper_ingredient(
    const Tiling& S, const Tiling& T,
    const std::vector<std::uint32_t>& samples, const BuildLimits& limits = {});

}  // namespace tilings
