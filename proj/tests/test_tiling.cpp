#include <doctest.h>

#include <random>

#include "tilings/tiling.hpp"

using namespace tilings;

namespace {

GammaSequence seeded_gamma(std::mt19937_64& rng, int max_len, int max_val) {
  std::uniform_int_distribution<int> len_d(1, max_len), val_d(1, max_val);
  std::vector<std::int64_t> e(static_cast<std::size_t>(len_d(rng)));
  for (auto& v : e) v = val_d(rng);
  return GammaSequence(e);
}

}  // namespace

TEST_CASE("identity tiling") {
  Tiling t = identity_tiling(3);
  REQUIRE(t.size() == 1);
  for (int a = 0; a < 3; ++a) {
    CHECK(t.corner(0, a) == Rational(0));
    CHECK(t.side(0, a) == Rational(1));
  }
  CHECK(identity_tiling(2).size() == 1);
  CHECK_THROWS_AS(identity_tiling(1), std::invalid_argument);

  GammaSequence g({3, 6, 3});
  Tiling layered = layered_tiling(3, g);
  CHECK(same_tile_set(tile_product(identity_tiling(3), layered), layered));
  CHECK(same_tile_set(tile_product(layered, identity_tiling(3)), layered));
}

TEST_CASE("layered tiling structure") {
  GammaSequence g({3, 6, 3});
  Tiling t = layered_tiling(3, g);
  CHECK(t.size() == 54);  // 9 + 36 + 9

  // direct count oracle over constructed tiles, layer by layer
  std::size_t bottom = 0, middle = 0, top = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Rational z = t.corner(i, 2);
    if (z == Rational(0)) ++bottom;
    else if (z == Rational(1, 3)) ++middle;
    else if (z == Rational(2, 3)) ++top;
    CHECK(t.side(i, 2) == Rational(1, 3));
  }
  CHECK(bottom == 9);
  CHECK(middle == 36);
  CHECK(top == 9);

  ValidationReport rep = validate_tiling(t);
  CHECK(rep.ok());
  CHECK(rep.total_volume == Rational(1));
  for (int a = 0; a < 3; ++a) {
    CHECK(rep.bbox_corner[a] == Rational(0));
    CHECK(rep.bbox_upper[a] == Rational(1));
  }

  CHECK(same_tile_set(layered_tiling(2, GammaSequence({1})),
                      identity_tiling(2)));
  CHECK(layered_tiling(3, GammaSequence({4, 8, 8, 4})).size() == 160);
}

TEST_CASE("tile product counts and tensor identity") {
  GammaSequence g({3, 6, 3});
  Tiling s = layered_tiling(3, g);
  Tiling p = tile_product(s, s);
  CHECK(p.size() == 2916);
  CHECK(same_tile_set(p, layered_tiling(3, tensor(g, g))));
  CHECK(validate_tiling(p).ok());

  Tiling pw = power_tiling(3, g, 2);
  CHECK(same_tile_set(pw, p));
  REQUIRE(pw.provenance().has_value());
  CHECK(pw.provenance()->power == 2);
  CHECK(pw.flattened_gamma() == tensor(g, g));

  CHECK_THROWS_AS(tile_product(s, layered_tiling(2, g)),
                  std::invalid_argument);
}

TEST_CASE("tile product associativity on seeded sequences") {
  std::mt19937_64 rng(7171);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 4; ++trial) {
      Tiling S = layered_tiling(d, seeded_gamma(rng, 3, 4));
      Tiling T = layered_tiling(d, seeded_gamma(rng, 3, 4));
      Tiling U = layered_tiling(d, seeded_gamma(rng, 2, 3));
      Tiling left = tile_product(tile_product(S, T), U);
      Tiling right = tile_product(S, tile_product(T, U));
      CHECK(same_tile_set(left, right));
      CHECK(validate_tiling(left).ok());
    }
  }
}

TEST_CASE("layered of tensor equals product of layered") {
  std::mt19937_64 rng(4242);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 6; ++trial) {
      GammaSequence a = seeded_gamma(rng, 4, 6);
      GammaSequence b = seeded_gamma(rng, 4, 6);
      Tiling lhs = layered_tiling(d, tensor(a, b));
      Tiling rhs = tile_product(layered_tiling(d, a), layered_tiling(d, b));
      CHECK(same_tile_set(lhs, rhs));
    }
  }
}

TEST_CASE("validation catches violations") {
  // duplicated tile
  std::vector<std::vector<Rational>> corners = {
      {Rational(0), Rational(0)},
      {Rational(1, 2), Rational(0)},
      {Rational(1, 2), Rational(0)},
  };
  std::vector<std::vector<Rational>> sides = {
      {Rational(1, 2), Rational(1)},
      {Rational(1, 2), Rational(1)},
      {Rational(1, 2), Rational(1)},
  };
  Tiling dup = Tiling::from_rational_tiles(2, corners, sides);
  ValidationReport rep = validate_tiling(dup);
  CHECK(!rep.disjoint_ok);
  CHECK(!rep.volume_ok);
  REQUIRE(rep.overlap_pair_count == 1);
  // the duplicated pair is reported (canonical order puts them adjacent)
  CHECK(rep.overlap_pairs[0][0] != rep.overlap_pairs[0][1]);

  // partial overlap without duplication
  std::vector<std::vector<Rational>> c2 = {
      {Rational(0), Rational(0)},
      {Rational(2, 5), Rational(0)},
  };
  std::vector<std::vector<Rational>> s2 = {
      {Rational(3, 5), Rational(1)},
      {Rational(3, 5), Rational(1)},
  };
  ValidationReport rep2 = validate_tiling(Tiling::from_rational_tiles(2, c2, s2));
  CHECK(!rep2.disjoint_ok);
  CHECK(rep2.overlap_pair_count == 1);

  // gap: volumes don't fill the bounding box
  std::vector<std::vector<Rational>> c3 = {
      {Rational(0), Rational(0)},
      {Rational(3, 4), Rational(0)},
  };
  std::vector<std::vector<Rational>> s3 = {
      {Rational(1, 4), Rational(1)},
      {Rational(1, 4), Rational(1)},
  };
  ValidationReport rep3 = validate_tiling(Tiling::from_rational_tiles(2, c3, s3));
  CHECK(rep3.disjoint_ok);
  CHECK(!rep3.volume_ok);
}

TEST_CASE("budget refusal before construction") {
  GammaSequence g({3, 6, 3});
  CHECK_THROWS_AS(power_tiling(3, g, 5), budget_error);  // 54^5 tiles
  BuildLimits tight;
  tight.max_tiles = 10;
  CHECK_THROWS_AS(layered_tiling(3, g, tight), budget_error);
  CHECK_THROWS_AS(
      tile_product(layered_tiling(3, g), layered_tiling(3, g), tight),
      budget_error);
}

TEST_CASE("volume conservation on seeded constructions") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    Tiling t = tile_product(layered_tiling(d, seeded_gamma(rng, 3, 5)),
                            layered_tiling(d, seeded_gamma(rng, 3, 5)));
    ValidationReport rep = validate_tiling(t);
    CHECK(rep.ok());
    CHECK(rep.total_volume == Rational(1));
  }
}
