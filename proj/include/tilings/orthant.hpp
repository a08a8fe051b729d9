#pragma once

#include <cstdint>
#include <vector>

#include "tilings/gamma.hpp"
#include "tilings/graph.hpp"
#include "tilings/tiling.hpp"

namespace tilings {

// Local windows into the infinite orthant tangency graph. Rescaled tilings
// at consecutive levels nest literally (one corner pinned at the origin), so
// a cube is identified across levels by its absolute coordinates.

// The cube with the same geometry as tile v of `from`, as an id in `to`.
// Both tilings must be rescaled tilings of the same gamma; `to` at the same
// or a higher power.
std::uint32_t lift_tile(const Tiling& from, const Tiling& to, std::uint32_t v);

// Smallest level n such that the 2R-ball around v provably avoids every
// tile outside level n: the coordinate gap to each growing face of the
// level-n region exceeds 2R+1 (all cube sides are at most 1). No BFS.
int level_for_radius(const GammaSequence& gamma, int d, const Tiling& home,
                     std::uint32_t v, std::int64_t radius);

struct LocalView {
  int level = 0;
  bool certified = false;
  std::uint32_t center = 0;    // id in the level tiling
  std::int64_t radius = 0;
  std::vector<std::uint32_t> vertices;  // level tile ids, sorted
  Graph induced;                        // over positions in `vertices`
  std::vector<std::int32_t> dist;       // from the center, per position

  std::uint64_t ball_size() const { return vertices.size(); }
};

// Ball of the infinite graph around v, materialized inside the certified
// finite level. Growth and separator analyses run unchanged on `induced`.
LocalView orthant_ball(const GammaSequence& gamma, int d, const Tiling& home,
                       std::uint32_t v, std::int64_t radius,
                       const BuildLimits& limits = {});

// Same, at a caller-chosen level >= the certified one (level-stability
// experiments).
LocalView orthant_ball_at_level(const GammaSequence& gamma, int d,
                                const Tiling& home, std::uint32_t v,
                                std::int64_t radius, int level,
                                const BuildLimits& limits = {});

}  // namespace tilings
