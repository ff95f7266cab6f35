// Exact planar geometry for triangle tilings with cyclotomic coordinates.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tritile/exactalg.hpp"

namespace tritile {

struct Point {
  CycloNum x, y;
  std::string key() const { return x.str() + "|" + y.str(); }
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

struct TriangleGeom {
  std::array<Point, 3> v;
};

// Sides a ≤ b ≤ c; angle i (α, β, γ) is opposite side i.
struct TileShape {
  std::array<CycloNum, 3> side;
  std::array<std::optional<Rational>, 3> angle_over_pi;  // empty when not a rational multiple
};

TileShape make_tile_shape(const CycloNum& s0, const CycloNum& s1, const CycloNum& s2);

struct Tiling {
  FieldRef field;
  TileShape tile;
  TriangleGeom boundary;
  std::vector<TriangleGeom> tiles;
  long order() const { return field->order(); }
};

struct TilingParseError : std::runtime_error {
  TilingParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

Tiling load_tiling(const std::string& text);
std::string save_tiling(const Tiling& t);
// tiles sorted, vertices rotated to a canonical start; for equality up to ordering
std::string canonical_form(const Tiling& t);

// label[i] ∈ {0,1,2}: which of α, β, γ sits at vertex i
struct Congruence {
  std::array<int, 3> label;
  bool mirror;
};
std::optional<Congruence> congruent_to(const TriangleGeom& tri, const TileShape& tile);

CycloNum orient(const Point& a, const Point& b, const Point& c);  // twice the signed area
CycloNum dist2(const Point& a, const Point& b);

struct DMatrix {
  // rows: sides X ≤ Y ≤ Z of ABC; columns: tile edges a, b, c
  std::array<std::array<long, 3>, 3> d{};
  std::array<long, 3> row(int i) const { return d[i]; }
};

struct CensusVertex {
  Point p;
  long n = 0, m = 0, l = 0;
  int k = 0;
};

struct VertexCensus {
  std::vector<CensusVertex> vertices;  // non-corner vertices
  std::array<std::array<long, 3>, 3> corner{};  // corner × (α, β, γ)
  long P = 0, Q = 0, R = 0;
};

struct VerifyReport {
  long N = 0;
  bool pass = false;
  DMatrix dmatrix;
  VertexCensus census;
  std::vector<std::string> failures;
  std::string str() const;
};

VerifyReport verify_tiling(const Tiling& t);

Tiling gen_three();
Tiling gen_quadratic(const TileShape& tile, long n);
Tiling compose(const Tiling& outer, const Tiling& inner);
Tiling gen_3m2(long m);
Tiling gen_27();
// the equilateral tile of side √3 that gen_three tiles
TileShape equilateral_shape(const CycloNum& side);

std::string svg_export(const Tiling& t);

}  // namespace tritile
