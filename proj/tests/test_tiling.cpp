#include <gtest/gtest.h>

#include "support.hpp"

using namespace tritile;

namespace {

std::array<long, 3> row(long a, long b, long c) { return {a, b, c}; }

TileShape half(const TileShape& t) {
  Rational h(1, 2);
  return make_tile_shape(h * t.side[0], h * t.side[1], h * t.side[2]);
}

}  // namespace

TEST(Generators, Three) {
  auto r = verify_tiling(gen_three());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.N, 3);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(r.dmatrix.row(i), row(0, 0, 1));
}

TEST(Generators, ThreeMSquared) {
  for (long m = 1; m <= 4; ++m) {
    auto r = verify_tiling(gen_3m2(m));
    EXPECT_TRUE(r.pass) << m;
    EXPECT_EQ(r.N, 3 * m * m);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(r.dmatrix.row(i), row(0, 0, m));
  }
  EXPECT_THROW(gen_3m2(0), AlgebraError);
}

TEST(Generators, TwentySeven) {
  auto r = verify_tiling(gen_27());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.N, 27);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(r.dmatrix.row(i), row(0, 0, 3));
  EXPECT_NE(canonical_form(gen_27()), canonical_form(gen_3m2(3)));
}

TEST(Generators, Quadratic) {
  for (long n = 1; n <= 4; ++n) {
    auto r = verify_tiling(gen_quadratic(gen_three().tile, n));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.N, n * n);
  }
}

TEST(Generators, Compose) {
  Tiling inner = gen_quadratic(half(gen_three().tile), 2);
  auto r = verify_tiling(compose(gen_three(), inner));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.N, 12);
  EXPECT_THROW(compose(gen_three(), gen_three()), AlgebraError);
}

TEST(Verify, DetectsMissingAndOverlappingTiles) {
  Tiling t = gen_3m2(2);
  Tiling missing = t;
  missing.tiles.pop_back();
  EXPECT_FALSE(verify_tiling(missing).pass);
  Tiling doubled = t;
  doubled.tiles.push_back(t.tiles.front());
  EXPECT_FALSE(verify_tiling(doubled).pass);
  Tiling moved = t;
  std::swap(moved.tiles[0].v[0], moved.tiles[1].v[1]);
  EXPECT_FALSE(verify_tiling(moved).pass);
}

TEST(Verify, CensusIdentities) {
  for (const Tiling& t : {gen_three(), gen_3m2(2), gen_27()}) {
    auto r = verify_tiling(t);
    long sn = 0, sm = 0, sl = 0;
    for (const auto& v : r.census.vertices) {
      sn += v.n;
      sm += v.m;
      sl += v.l;
    }
    EXPECT_EQ(r.census.P + sn, r.N);
    EXPECT_EQ(r.census.Q + sm, r.N);
    EXPECT_EQ(r.census.R + sl, r.N);
  }
}

TEST(Format, RoundTrip) {
  for (const Tiling& t : {gen_three(), gen_3m2(3), gen_27()}) {
    std::string s = save_tiling(t);
    Tiling u = load_tiling(s);
    EXPECT_EQ(canonical_form(u), canonical_form(t));
    EXPECT_EQ(save_tiling(u), s);
  }
}

TEST(Format, ParseErrors) {
  EXPECT_THROW(load_tiling(""), TilingParseError);
  EXPECT_THROW(load_tiling("garbage\n"), TilingParseError);
  std::string s = save_tiling(gen_three());
  EXPECT_THROW(load_tiling(s.substr(0, s.size() / 2)), TilingParseError);
}

TEST(Geometry, CongruenceAndOrientation) {
  Tiling t = gen_three();
  for (const auto& tri : t.tiles) EXPECT_TRUE(congruent_to(tri, t.tile).has_value());
  EXPECT_FALSE(congruent_to(t.boundary, t.tile).has_value());
  const auto& v = t.boundary.v;
  EXPECT_EQ(sign(orient(v[0], v[1], v[2])) * sign(orient(v[0], v[2], v[1])), -1);
}

TEST(Svg, Export) {
  std::string s = svg_export(gen_three());
  EXPECT_NE(s.find("<svg"), std::string::npos);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
}
