#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilings/gamma.hpp"
#include "tilings/numeric.hpp"

namespace tilings {

struct BuildLimits {
  std::int64_t max_tiles = 10'000'000;
};

// Construction tag: the tiling is T_{gamma^{(x)power}} in dimension dim.
struct Provenance {
  GammaSequence gamma;
  int power = 1;
};

// A finite set of interior-disjoint axis-parallel boxes with exact rational
// coordinates. Per axis, every coordinate is stored as an integer numerator
// over a shared denominator, so all comparisons are exact int64 arithmetic.
// Tiles are kept in canonical order: lexicographic by
// (p_d, p_1, ..., p_{d-1}), stacking axis first.
class Tiling {
 public:
  Tiling() = default;

  static Tiling from_scaled(int dim, std::vector<std::int64_t> den,
                            std::vector<std::int64_t> lo,
                            std::vector<std::int64_t> len,
                            std::optional<Provenance> prov);

  // Test/interop path: arbitrary rational boxes; computes shared axis
  // denominators (must fit int64).
  static Tiling from_rational_tiles(
      int dim, const std::vector<std::vector<Rational>>& corners,
      const std::vector<std::vector<Rational>>& sides);

  int dim() const { return dim_; }
  std::size_t size() const { return len_.size() / dim_; }

  std::int64_t den(int axis) const { return den_[axis]; }
  std::int64_t lo(std::size_t t, int axis) const { return lo_[t * dim_ + axis]; }
  std::int64_t len(std::size_t t, int axis) const {
    return len_[t * dim_ + axis];
  }
  std::int64_t hi(std::size_t t, int axis) const {
    return lo(t, axis) + len(t, axis);
  }

  Rational corner(std::size_t t, int axis) const {
    return make_rational(lo(t, axis), den_[axis]);
  }
  Rational side(std::size_t t, int axis) const {
    return make_rational(len(t, axis), den_[axis]);
  }
  Rational upper(std::size_t t, int axis) const {
    return make_rational(hi(t, axis), den_[axis]);
  }
  Rational volume(std::size_t t) const;

  const std::optional<Provenance>& provenance() const { return prov_; }
  void set_provenance(std::optional<Provenance> p) { prov_ = std::move(p); }
  // Flattened sequence gamma^{(x)power} for provenance-tagged tilings.
  GammaSequence flattened_gamma() const;

  // Minimal shared denominators (divide out common factors per axis).
  void normalize();

  // Exact per-axis bounding box, scaled.
  std::int64_t bbox_lo(int axis) const;
  std::int64_t bbox_hi(int axis) const;

  std::string describe() const;

 private:
  int dim_ = 0;
  std::vector<std::int64_t> den_;
  std::vector<std::int64_t> lo_;
  std::vector<std::int64_t> len_;
  std::optional<Provenance> prov_;

  void canonical_sort();
};

// {[0,1]^d}, the two-sided identity of the tile product.
Tiling identity_tiling(int d);

// T^(d)_gamma: layer i is a gamma_i x ... x gamma_i grid slab of height 1/b.
Tiling layered_tiling(int d, const GammaSequence& gamma,
                      const BuildLimits& limits = {});

// T^(d)_{gamma^{(x)n}} with provenance tag (gamma, n).
Tiling power_tiling(int d, const GammaSequence& gamma, int n,
                    const BuildLimits& limits = {});

// Replace every tile of S by a scaled copy of T.
Tiling tile_product(const Tiling& S, const Tiling& T,
                    const BuildLimits& limits = {});

// Exact tile-set equality (canonical order + normalized denominators).
bool same_tile_set(const Tiling& a, const Tiling& b);

struct ValidationReport {
  bool disjoint_ok = true;
  bool volume_ok = true;
  // Sum of tile volumes (exact).
  Rational total_volume;
  // Volume of the exact bounding box.
  Rational bbox_volume;
  std::vector<Rational> bbox_corner;
  std::vector<Rational> bbox_upper;
  // Offending pairs (tile indices); duplicates are a special case of overlap.
  std::vector<std::array<std::uint32_t, 2>> overlap_pairs;
  std::size_t overlap_pair_count = 0;

  bool ok() const { return disjoint_ok && volume_ok; }
  std::string summary() const;
};

// Exact interior-disjointness of all pairs plus the volume-vs-region check.
ValidationReport validate_tiling(const Tiling& t);

}  // namespace tilings
