#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilings/graph.hpp"
#include "tilings/numeric.hpp"
#include "tilings/tangency.hpp"
#include "tilings/tiling.hpp"

namespace tilings {

// Projection onto the last d-1 coordinates (the first axis is dropped).
// Each base tile owns the ordered stack of tiles projecting onto it.
struct FiberFamily {
  Tiling base;                                      // dimension d-1
  std::vector<std::vector<std::uint32_t>> fibers;   // ordered along axis 1
  std::vector<std::uint32_t> tile_to_base;          // tile id -> base id

  std::size_t fiber_count() const { return fibers.size(); }
};

FiberFamily project(const Tiling& t);

struct FiberPathCheck {
  bool is_path = false;
  std::vector<std::uint32_t> order;  // bottom-to-top along axis 1
  std::string violation;
};

// The induced subgraph on a fiber must be a simple path in axis-1 order.
FiberPathCheck fiber_is_path(const FiberFamily& family, const TangencyGraph& g,
                             std::uint32_t base_id);

// d_G-diameter of the fiber (certified by the distance of its two ends)
// against the bound 1/L_T - 1.
struct FiberDiameterCheck {
  bool ok = false;
  std::int64_t end_distance = 0;
  Rational bound;
};
FiberDiameterCheck fiber_diameter_bound(const Tiling& t,
                                        const FiberFamily& family,
                                        const TangencyGraph& g,
                                        std::uint32_t base_id);

// Disjoint fiber paths crossing the annulus around v, from the copy of
// T_{gamma^(x)h} containing v, h = floor(log_b(R/(d+1))).
struct AnnulusCertificate {
  std::uint32_t center = 0;
  std::int64_t radius = 0;
  std::int64_t h = -1;              // -1: radius below d+1, empty certificate
  std::vector<std::uint32_t> fiber_ids;
  BigInt required_count;            // (|gamma|^(d-1))^h
  bool count_ok = false;
  bool fibers_disjoint = false;
  bool fibers_meet_ball = false;    // every listed fiber intersects B(v,R)
  std::string note;

  bool sound() const {
    return h >= 0 && count_ok && fibers_disjoint && fibers_meet_ball;
  }
};

AnnulusCertificate annulus_path_certificate(const Tiling& t,
                                            const TangencyGraph& g,
                                            const FiberFamily& family,
                                            std::uint32_t v, std::int64_t R);

// Regime bound for pairing a certificate with R': R' < (1/L - 1)/2, which
// guarantees every certified fiber crosses S(v,R').
bool annulus_regime_ok(const Tiling& t, std::int64_t R_prime);

// Maximum number of fully vertex-disjoint S1 -> S2 paths (Menger oracle).
struct CutCertificate {
  std::int64_t path_count = 0;
  std::vector<std::uint32_t> min_cut;               // vertex ids
  std::vector<std::vector<std::uint32_t>> paths;    // original vertex ids
  bool menger_ok = false;                           // path_count == |min_cut|
};

CutCertificate disjoint_path_count(const Graph& g,
                                   const std::vector<std::uint32_t>& s1,
                                   const std::vector<std::uint32_t>& s2,
                                   std::size_t guard = 500000,
                                   bool want_paths = false);

// Minimum-cardinality U inside B(v,R') \ B(v,R) disconnecting S(v,R) from
// S(v,R'). Ball vertices are uncuttable, so the cut consists of annulus
// vertices (sphere R' included).
struct MinSeparatorResult {
  std::vector<std::uint32_t> separator;
  std::int64_t path_count = 0;      // equals |separator| (Menger)
  bool menger_ok = false;
  bool empty_target = false;        // S(v,R') empty: nothing to separate
  // min_{R < r < R'} |S(v,r)|, the cheap sphere-separator upper bound
  std::optional<std::uint64_t> sphere_bound;
};

MinSeparatorResult min_annular_separator(const Graph& g, std::uint32_t v,
                                         std::int64_t R, std::int64_t R_prime,
                                         std::size_t guard = 500000);

}  // namespace tilings
