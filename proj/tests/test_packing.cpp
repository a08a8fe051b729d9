#include <doctest.h>

#include <cmath>

#include "tilings/packing.hpp"

using namespace tilings;

TEST_CASE("cube packing structure") {
  GammaSequence gamma({3, 6, 3});
  CubePacking cp = cube_packing(gamma, 1, 3);
  CHECK(cp.size() == 54);
  CHECK(cp.neat);
  CHECK(cp.aspect == Rational(2));

  // three one-cube-thick layers with sides 1, 1/2, 1 and height 5/2
  CHECK(cp.cube_side(0) == Rational(1));
  ValidationReport rep = validate_tiling(cp.cubes);
  CHECK(rep.ok());
  CHECK(rep.bbox_upper[0] == Rational(3));
  CHECK(rep.bbox_upper[1] == Rational(3));
  CHECK(rep.bbox_upper[2] == Rational(5, 2));

  // every cube really is a cube
  for (std::size_t i = 0; i < cp.size(); ++i)
    for (int a = 1; a < 3; ++a)
      CHECK(cp.cubes.side(i, a) == cp.cubes.side(i, 0));

  // single cube
  CubePacking one = cube_packing(GammaSequence({1}), 1, 3);
  CHECK(one.size() == 1);
  CHECK(one.aspect == Rational(1));

  // power 2 keeps the aspect
  CubePacking cp2 = cube_packing(gamma, 2, 3);
  CHECK(cp2.size() == 2916);
  CHECK(cp2.aspect == Rational(2));
  CHECK(cp2.neat);

  // refusals
  CHECK_THROWS_AS(cube_packing(GammaSequence({2, 3, 2}), 1, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(cube_packing(GammaSequence({3, 6, 4}), 1, 3),
                  std::invalid_argument);
}

TEST_CASE("neatness violations are caught") {
  // two unit cubes offset by 1/2 along a shared face
  std::vector<std::vector<Rational>> corners = {
      {Rational(0), Rational(0), Rational(0)},
      {Rational(1), Rational(1, 2), Rational(0)},
  };
  std::vector<std::vector<Rational>> sides = {
      {Rational(1), Rational(1), Rational(1)},
      {Rational(1), Rational(1), Rational(1)},
  };
  Tiling t = Tiling::from_rational_tiles(3, corners, sides);
  TangencyGraph g = build_tangency_graph(t);
  REQUIRE(g.edge_count() == 1);
  NeatCheck chk = check_neat(t, g);
  CHECK(!chk.ok);
  REQUIRE(chk.violations.size() == 1);
  CHECK(chk.violations[0][0] == 0);
  CHECK(chk.violations[0][1] == 1);
}

TEST_CASE("star of spheres") {
  std::vector<Rational> corner = {Rational(0), Rational(0), Rational(0)};
  Rational side(1);
  Rational eps(1, 4);

  // no contacts: just the hub
  StarResult hub_only = star_spheres(3, corner, side, {}, eps);
  CHECK(hub_only.spheres.size() == 1);
  CHECK(to_double(hub_only.spheres[0].radius) == 0.25);
  CHECK(hub_only.tangencies.empty());

  // one contact at a facet center
  ContactPoint p;
  p.point = {Rational(1), Rational(1, 2), Rational(1, 2)};
  p.edge = 0;
  StarResult one = star_spheres(3, corner, side, {p}, eps);
  CHECK(one.chain_len == 72);
  CHECK(one.spheres.size() == 1 + 72 + 1);
  CHECK(one.tangencies.size() == 73);  // k+1 edges per hub-leaf arc
  CHECK(to_double(one.spheres[0].radius) == 0.25);
  // leaf radius eps*l/8 = 1/32
  CHECK(to_double(one.spheres.back().radius) == doctest::Approx(1.0 / 32));
  // chain radius (1/4 - eps/4)/(2k) = 1/768 at the facet-center contact
  CHECK(to_double(one.spheres[1].radius) ==
        doctest::Approx(1.0 / 768).epsilon(1e-15));
  // segment length within [l/8, sqrt(d) l]
  CHECK(to_double(one.min_segment_len) >= 0.125);
  CHECK(to_double(one.max_segment_len) <= std::sqrt(3.0));
  // consecutive chain spheres are tangent by construction
  for (std::size_t e = 0; e < one.tangencies.size(); ++e) {
    auto [a, b] = one.tangencies[e];
    qreal dist = 0;
    for (int ax = 0; ax < 3; ++ax) {
      qreal t = one.spheres[a].center[ax] - one.spheres[b].center[ax];
      dist += t * t;
    }
    double gap = to_double(qsqrt(dist) -
                           (one.spheres[a].radius + one.spheres[b].radius));
    CHECK(std::abs(gap) < 1e-30);
  }

  // two antipodal contacts: chains stay eps/(2 sqrt(d)) apart
  ContactPoint q;
  q.point = {Rational(0), Rational(1, 2), Rational(1, 2)};
  q.edge = 1;
  StarResult two = star_spheres(3, corner, side, {p, q}, eps);
  CHECK(two.spheres.size() == 1 + 2 * 73);
  CHECK(to_double(two.min_interchain_gap) >=
        to_double(to_qreal(eps)) / (2 * std::sqrt(3.0)));

  // violations carry the offending point or pair
  ContactPoint edge_point;
  edge_point.point = {Rational(1), Rational(0), Rational(1, 2)};
  CHECK_THROWS_WITH_AS(star_spheres(3, corner, side, {edge_point}, eps),
                       doctest::Contains("facets"), std::invalid_argument);

  ContactPoint near_edge;
  near_edge.point = {Rational(1), Rational(1, 8), Rational(1, 2)};
  CHECK_THROWS_WITH_AS(star_spheres(3, corner, side, {near_edge}, eps),
                       doctest::Contains("closer than eps*l"),
                       std::invalid_argument);

  ContactPoint close1, close2;
  close1.point = {Rational(1), Rational(1, 2), Rational(1, 2)};
  close2.point = {Rational(1), Rational(1, 2) + Rational(1, 8), Rational(1, 2)};
  CHECK_THROWS_WITH_AS(star_spheres(3, corner, side, {close1, close2}, eps),
                       doctest::Contains("closer than eps*l"),
                       std::invalid_argument);

  CHECK_THROWS_AS(star_spheres(3, corner, side, {}, Rational(3, 4)),
                  std::invalid_argument);
}

TEST_CASE("sphere packing of the gamma tiling") {
  GammaSequence gamma({3, 6, 3});
  CubePacking cp = cube_packing(gamma, 1, 3);
  SpherePacking sp = sphere_pack(cp);

  const std::size_t edges = cp.graph.edge_count();
  CHECK(edges == 156);
  CHECK(sp.chain_len == 72);
  CHECK(sp.subdivision_order() == 147);  // 2k+3
  // one hub per cube plus (k+1) spheres per cube-contact
  CHECK(sp.size() == 54 + 2 * edges * 73);
  // arcs: (k+1) per contact plus one fusing edge per tangency
  CHECK(sp.tangencies.size() == 2 * edges * 73 + edges);
  CHECK(sp.tangencies.size() == edges * 147);

  PackingReport rep = validate_packing(sp, 1e-9);
  CHECK(rep.tangency_ok);
  CHECK(rep.disjoint_ok);
  CHECK(rep.separated_ok);
  CHECK(rep.containment_ok);
  CHECK(rep.iso_ok);
  CHECK(rep.m_ok);
  CHECK(rep.ok());
  CHECK(rep.M_bound == doctest::Approx(1440.0));
  CHECK(rep.M_realized <= 1440.0);
  // worst hub/chain ratio: (l/4) / (l(1-eps)/(8k)) = 2k/(1-eps) = 192
  CHECK(rep.M_realized == doctest::Approx(192.0).epsilon(1e-9));
  CHECK(rep.worst_tangency_gap < 1e-25);
  // the nominal per-cube floor eps*l/(60d) is missed by exactly 720/768 at
  // facet-center contacts; the report carries the measured ratio
  CHECK(rep.min_radius_ratio_60d == doctest::Approx(0.9375).epsilon(1e-9));

  // deterministic construction
  SpherePacking sp2 = sphere_pack(cp);
  CHECK(sp.centers == sp2.centers);
  CHECK(sp.radii == sp2.radii);
  CHECK(sp.tangencies == sp2.tangencies);
}

TEST_CASE("single cube packs to a lone hub") {
  CubePacking one = cube_packing(GammaSequence({1}), 1, 3);
  SpherePacking sp = sphere_pack(one);
  CHECK(sp.size() == 1);
  CHECK(sp.tangencies.empty());
  CHECK(validate_packing(sp, 1e-9).ok());
}

TEST_CASE("uniform grid packing works at alpha = 1") {
  CubePacking cp = cube_packing(GammaSequence({2, 2}), 1, 3);
  CHECK(cp.aspect == Rational(1));
  SpherePacking sp = sphere_pack(cp);
  CHECK(sp.eps == Rational(1, 2));
  CHECK(sp.chain_len == 36);  // ceil(6*3 / (1/2))
  CHECK(validate_packing(sp, 1e-9).ok());
}

TEST_CASE("validation flags constructed violations") {
  GammaSequence gamma({3, 6, 3});
  CubePacking cp = cube_packing(gamma, 1, 3);
  SpherePacking sp = sphere_pack(cp);

  SUBCASE("perturbed radius breaks a declared tangency") {
    sp.radii[sp.tangencies[0].first] *= 1.001;
    PackingReport rep = validate_packing(sp, 1e-9);
    CHECK(!rep.tangency_ok);
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations[0].find(
              std::to_string(sp.tangencies[0].first)) != std::string::npos);
  }

  SUBCASE("inflated sphere overlaps its neighbors") {
    sp.radii[0] = sp.cube_side[0];
    PackingReport rep = validate_packing(sp, 1e-9);
    CHECK(!rep.disjoint_ok);
  }

  SUBCASE("moved sphere breaks the subdivision graph") {
    // translating a chain sphere far away breaks its declared tangencies
    sp.centers[sp.dim * 5] += 10;
    PackingReport rep = validate_packing(sp, 1e-9);
    CHECK(!rep.tangency_ok);
  }
}
