#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilings/gamma.hpp"
#include "tilings/graph.hpp"
#include "tilings/numeric.hpp"
#include "tilings/qfloat.hpp"
#include "tilings/tangency.hpp"
#include "tilings/tiling.hpp"

namespace tilings {

// Rescaled realization of T_{gamma^(x)n} as a packing of axis-parallel
// cubes: layer j gets side sigma_1/sigma_j with the bottom layer at side 1,
// layers stacked one cube thick, one corner at the origin.
struct CubePacking {
  Tiling cubes;
  TangencyGraph graph;
  GammaSequence gamma;
  int power = 0;
  bool neat = false;
  Rational aspect;  // max side ratio over touching cubes

  std::size_t size() const { return cubes.size(); }
  Rational cube_side(std::size_t i) const { return cubes.side(i, 0); }
};

// Requires integral ratios and gamma_1 = gamma_b; verifies that the cube
// tangency graph matches the tiling tangency graph index-for-index.
CubePacking cube_packing(const GammaSequence& gamma, int n, int d,
                         const BuildLimits& limits = {});

// The bare rescaled cube tiling (one corner at the origin, bottom layer at
// side 1), without graphs or neatness checks.
Tiling rescaled_tiling(const GammaSequence& gamma, int n, int d,
                       const BuildLimits& limits = {});

struct NeatCheck {
  bool ok = true;
  std::vector<std::array<std::uint32_t, 2>> violations;
};

// Neat tangency: for every tangent pair, one of the two touching facets is
// contained in the intersection. Exact integer comparisons.
NeatCheck check_neat(const Tiling& cubes, const TangencyGraph& g);

enum class SphereRole : std::uint8_t { kHub = 0, kChain = 1, kLeaf = 2 };

struct SphereTag {
  std::uint32_t cube = 0;
  SphereRole role = SphereRole::kHub;
  std::uint32_t edge = UINT32_MAX;  // tangency edge owning the contact point
  std::uint32_t chain_pos = 0;      // 1..k from the hub (chain spheres only)
};

// A contact point on a cube facet, exact.
struct ContactPoint {
  std::vector<Rational> point;
  std::uint32_t edge = 0;  // graph edge id this contact realizes
};

struct StarSphere {
  std::array<qreal, 4> center{};
  qreal radius = 0;
  SphereRole role = SphereRole::kHub;
  std::uint32_t contact_index = UINT32_MAX;  // index into the contact list
  std::uint32_t chain_pos = 0;
};

struct StarResult {
  std::vector<StarSphere> spheres;  // hub, then per contact: chain 1..k, leaf
  std::vector<std::pair<std::uint32_t, std::uint32_t>> tangencies;
  int chain_len = 0;  // k
  qreal min_radius = 0;
  qreal min_interchain_gap = 0;  // min distance between chain segments
  qreal min_segment_len = 0;     // min |z_p - z'_p|
  qreal max_segment_len = 0;
};

// Star of spheres inside one cube: hub of radius l/4, a leaf of radius
// eps*l/8 tangent to the boundary at each contact point, and a chain of
// k = ceil(6d/eps) equal spheres joining hub to leaf along the segment,
// centered at odd multiples (2i-1) r_p of the chain radius.
// All preconditions (contacts on exactly one facet, eps*l from the others,
// pairwise >= eps*l apart, eps <= 1/2) are verified exactly in rationals.
StarResult star_spheres(int d, const std::vector<Rational>& corner,
                        const Rational& side,
                        const std::vector<ContactPoint>& contacts,
                        const Rational& eps);

struct SpherePacking {
  int dim = 0;
  std::vector<qreal> centers;  // size() * dim
  std::vector<qreal> radii;
  std::vector<SphereTag> tags;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> tangencies;

  // construction context, kept for validation
  std::uint32_t cube_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cube_edges;
  int chain_len = 0;  // k
  Rational eps;
  Rational alpha;
  std::vector<qreal> cube_corner;  // cube_count * dim
  std::vector<qreal> cube_side;

  std::size_t size() const { return radii.size(); }
  int subdivision_order() const { return 2 * chain_len + 3; }
  qreal center_at(std::size_t i, int axis) const {
    return centers[i * dim + axis];
  }
};

// Fuse per-cube stars at shared contact points; eps = 1/(2 alpha).
SpherePacking sphere_pack(const CubePacking& packing);

struct PackingReport {
  bool tangency_ok = true;      // declared tangencies at |gap| <= tol
  bool disjoint_ok = true;      // no overlapping pair beyond tol
  bool separated_ok = true;     // non-declared pairs have positive gap
  bool containment_ok = true;   // spheres inside their cubes
  bool iso_ok = true;           // tangency graph == (2k+3)-subdivision
  bool m_ok = true;             // radius ratios <= 120 alpha^2 d
  double M_realized = 1.0;
  double M_bound = 0.0;
  double worst_tangency_gap = 0.0;  // relative
  double min_pair_gap = 0.0;        // relative, over non-tangent pairs
  double min_radius_ratio_60d = 0.0;  // min over cubes of r_min/(eps*l/(60d))
  std::vector<std::string> violations;

  bool ok() const {
    return tangency_ok && disjoint_ok && separated_ok && containment_ok &&
           iso_ok && m_ok;
  }
};

PackingReport validate_packing(const SpherePacking& s, double tol);

}  // namespace tilings
