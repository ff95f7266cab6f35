#include "tritile/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace tritile {

namespace {

CycloNum sq(const CycloNum& x) { return x * x; }

bool is_pos(const CycloNum& x) { return sign(x) > 0; }

struct Box {
  double x0, x1, y0, y1;
};

Box box_of(const TriangleGeom& t) {
  Box b{1e300, -1e300, 1e300, -1e300};
  for (auto& p : t.v) {
    double x = p.x.to_double(), y = p.y.to_double();
    b.x0 = std::min(b.x0, x), b.x1 = std::max(b.x1, x);
    b.y0 = std::min(b.y0, y), b.y1 = std::max(b.y1, y);
  }
  return b;
}

// Some edge line of a or b weakly separates the two triangles.
bool interiors_disjoint(const TriangleGeom& a, const TriangleGeom& b) {
  for (int pass = 0; pass < 2; ++pass) {
    const TriangleGeom& s = pass ? b : a;
    const TriangleGeom& o = pass ? a : b;
    int so = sign(orient(s.v[0], s.v[1], s.v[2]));
    for (int e = 0; e < 3; ++e) {
      const Point& u = s.v[e];
      const Point& w = s.v[(e + 1) % 3];
      bool sep = true;
      for (auto& q : o.v)
        if (sign(orient(u, w, q)) * so > 0) {
          sep = false;
          break;
        }
      if (sep) return true;
    }
  }
  return false;
}

// p strictly inside segment uw, assuming collinearity
bool strictly_between(const Point& p, const Point& u, const Point& w) {
  CycloNum d1 = (p.x - u.x) * (w.x - u.x) + (p.y - u.y) * (w.y - u.y);
  CycloNum d2 = (p.x - w.x) * (u.x - w.x) + (p.y - w.y) * (u.y - w.y);
  return is_pos(d1) && is_pos(d2);
}

std::optional<Rational> identify_angle(const CycloNum& cosv) {
  long m = cosv.order();
  double c = cosv.to_double();
  for (long n = 1; n <= 4 * m; ++n)
    for (long k = 1; k < n; ++k) {
      if (gcd_l(k, n) != 1) continue;
      if (std::fabs(std::cos(M_PI * k / n) - c) > 1e-9) continue;
      FieldRef f = CycloField::make(lcm_l(m, trig_field_order(n)));
      if (cos_pi(k, n, f) == cosv.embed(f)) return frac(k, n);
    }
  return std::nullopt;
}

Point embed_pt(const Point& p, const FieldRef& f) { return {p.x.embed(f), p.y.embed(f)}; }

TriangleGeom embed_tri(const TriangleGeom& t, const FieldRef& f) {
  return {{embed_pt(t.v[0], f), embed_pt(t.v[1], f), embed_pt(t.v[2], f)}};
}

TileShape embed_shape(const TileShape& s, const FieldRef& f) {
  TileShape r = s;
  for (auto& x : r.side) x = x.embed(f);
  return r;
}

}  // namespace

CycloNum orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

CycloNum dist2(const Point& a, const Point& b) { return sq(a.x - b.x) + sq(a.y - b.y); }

TileShape make_tile_shape(const CycloNum& s0, const CycloNum& s1, const CycloNum& s2) {
  std::array<CycloNum, 3> s{s0, s1, s2};
  for (auto& x : s) {
    if (!x.is_real()) throw AlgebraError("tile side is not real");
    if (sign(x) <= 0) throw AlgebraError("tile side must be positive");
  }
  std::sort(s.begin(), s.end(), [](const CycloNum& a, const CycloNum& b) { return sign(b - a) > 0; });
  if (sign(s[0] + s[1] - s[2]) <= 0) throw AlgebraError("tile sides violate the triangle inequality");
  TileShape t;
  t.side = s;
  for (int i = 0; i < 3; ++i) {
    const CycloNum& a = s[i];
    const CycloNum& b = s[(i + 1) % 3];
    const CycloNum& c = s[(i + 2) % 3];
    CycloNum cosv = (sq(b) + sq(c) - sq(a)) * (Rational(2) * b * c).inv();
    t.angle_over_pi[i] = identify_angle(cosv);
  }
  return t;
}

std::optional<Congruence> congruent_to(const TriangleGeom& tri0, const TileShape& tile0) {
  TriangleGeom tri = tri0;
  TileShape tile = tile0;
  if (tri.v[0].x.order() != tile.side[0].order()) {
    FieldRef f = CycloField::make(lcm_l(tri.v[0].x.order(), tile.side[0].order()));
    tri = embed_tri(tri, f);
    tile = embed_shape(tile, f);
  }
  std::array<CycloNum, 3> s, t;
  for (int i = 0; i < 3; ++i) {
    s[i] = dist2(tri.v[(i + 1) % 3], tri.v[(i + 2) % 3]);
    t[i] = sq(tile.side[i]);
  }
  std::array<int, 3> p{0, 1, 2};
  do {
    if (s[0] == t[p[0]] && s[1] == t[p[1]] && s[2] == t[p[2]]) {
      std::array<int, 3> at{};  // at[label] = vertex
      for (int i = 0; i < 3; ++i) at[p[i]] = i;
      bool mirror = sign(orient(tri.v[at[0]], tri.v[at[1]], tri.v[at[2]])) < 0;
      return Congruence{p, mirror};
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------

VerifyReport verify_tiling(const Tiling& t) {
  VerifyReport rep;
  rep.N = static_cast<long>(t.tiles.size());
  auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
  TriangleGeom abc = t.boundary;
  CycloNum area_abc = orient(abc.v[0], abc.v[1], abc.v[2]);
  int sabc = sign(area_abc);
  if (sabc == 0) {
    fail("boundary triangle is degenerate");
    return rep;
  }
  if (sabc < 0) std::swap(abc.v[1], abc.v[2]);
  area_abc = sabc < 0 ? -area_abc : area_abc;
  if (t.tiles.empty()) fail("no tiles");

  std::vector<std::optional<Congruence>> cong(t.tiles.size());
  CycloNum area_sum(t.field, Rational(0));
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const auto& tri = t.tiles[i];
    CycloNum o = orient(tri.v[0], tri.v[1], tri.v[2]);
    int so = sign(o);
    if (so == 0) {
      fail("tile " + std::to_string(i) + ": degenerate");
      continue;
    }
    area_sum += so > 0 ? o : -o;
    cong[i] = congruent_to(tri, t.tile);
    if (!cong[i]) fail("tile " + std::to_string(i) + ": not congruent to the tile");
    for (int k = 0; k < 3; ++k)
      for (int e = 0; e < 3; ++e)
        if (sign(orient(abc.v[e], abc.v[(e + 1) % 3], tri.v[k])) < 0) {
          fail("tile " + std::to_string(i) + ": vertex " + std::to_string(k) + " outside ABC");
          e = 3;
        }
  }

  std::vector<Box> boxes;
  for (auto& tri : t.tiles) boxes.push_back(box_of(tri));
  for (std::size_t i = 0; i < t.tiles.size(); ++i)
    for (std::size_t j = i + 1; j < t.tiles.size(); ++j) {
      const Box &a = boxes[i], &b = boxes[j];
      const double eps = 1e-7;
      if (a.x1 < b.x0 - eps || b.x1 < a.x0 - eps || a.y1 < b.y0 - eps || b.y1 < a.y0 - eps) continue;
      bool deg = sign(orient(t.tiles[i].v[0], t.tiles[i].v[1], t.tiles[i].v[2])) == 0 ||
                 sign(orient(t.tiles[j].v[0], t.tiles[j].v[1], t.tiles[j].v[2])) == 0;
      if (deg) continue;
      if (!interiors_disjoint(t.tiles[i], t.tiles[j]))
        fail("tiles " + std::to_string(i) + " and " + std::to_string(j) + ": interiors overlap");
    }

  if (area_sum != area_abc)
    fail("area mismatch: tiles cover " + std::to_string(area_sum.to_double() / 2) + ", ABC has " +
         std::to_string(area_abc.to_double() / 2));

  // d-matrix: sides of ABC sorted by length (X opposite the smallest angle)
  std::array<int, 3> order{0, 1, 2};
  std::array<CycloNum, 3> side2;
  for (int i = 0; i < 3; ++i) side2[i] = dist2(abc.v[(i + 1) % 3], abc.v[(i + 2) % 3]);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sign(side2[b] - side2[a]) > 0; });
  for (int row = 0; row < 3; ++row) {
    int s = order[row];
    const Point& p1 = abc.v[(s + 1) % 3];
    const Point& p2 = abc.v[(s + 2) % 3];
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
      if (!cong[i]) continue;
      const auto& tri = t.tiles[i];
      for (int e = 0; e < 3; ++e) {
        const Point& u = tri.v[(e + 1) % 3];
        const Point& w = tri.v[(e + 2) % 3];
        if (orient(p1, p2, u).is_zero() && orient(p1, p2, w).is_zero())
          ++rep.dmatrix.d[row][cong[i]->label[e]];
      }
    }
    CycloNum len(t.field, Rational(0));
    for (int c = 0; c < 3; ++c) len += Rational(rep.dmatrix.d[row][c]) * t.tile.side[c];
    if (sq(len) != side2[s]) fail("d-matrix row " + std::to_string(row) + " does not add up to its side");
  }

  // vertex census
  std::map<std::string, std::size_t> index;
  struct Slot {
    Point p;
    std::array<long, 3> cnt{};
    int corner = -1;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    if (!cong[i]) continue;
    for (int k = 0; k < 3; ++k) {
      const Point& p = t.tiles[i].v[k];
      auto [it, fresh] = index.emplace(p.key(), slots.size());
      if (fresh) {
        Slot s{p, {}, -1};
        for (int c = 0; c < 3; ++c)
          if (abc.v[c] == p) s.corner = c;
        slots.push_back(s);
      }
      ++slots[it->second].cnt[cong[i]->label[k]];
    }
  }
  // unit vectors e^{iθ} for the three tile angles, used to check n·α+m·β+ℓ·γ = kπ
  std::optional<std::array<CycloNum, 3>> rot;
  for (std::size_t i = 0; i < t.tiles.size() && !rot; ++i) {
    if (!cong[i]) continue;
    FieldRef f = CycloField::make(lcm_l(t.order(), 4));
    CycloNum tw = orient(t.tiles[i].v[0], t.tiles[i].v[1], t.tiles[i].v[2]);
    if (sign(tw) < 0) tw = -tw;
    tw = tw.embed(f);
    CycloNum I = CycloNum::zeta(f, f->order() / 4);
    std::array<CycloNum, 3> r;
    for (int a = 0; a < 3; ++a) {
      CycloNum sa = t.tile.side[a].embed(f), sb = t.tile.side[(a + 1) % 3].embed(f),
               sc = t.tile.side[(a + 2) % 3].embed(f);
      CycloNum den = (sb * sc).inv();
      CycloNum c = Rational(1, 2) * (sq(sb) + sq(sc) - sq(sa)) * den;
      r[a] = c + I * tw * den;
    }
    rot = r;
  }
  auto& cen = rep.census;
  for (auto& s : slots) {
    if (s.corner >= 0) {
      cen.corner[s.corner] = s.cnt;
      continue;
    }
    CensusVertex v{s.p, s.cnt[0], s.cnt[1], s.cnt[2], 2};
    for (int e = 0; e < 3 && v.k == 2; ++e)
      if (orient(abc.v[e], abc.v[(e + 1) % 3], s.p).is_zero()) v.k = 1;
    for (std::size_t i = 0; i < t.tiles.size() && v.k == 2; ++i)
      for (int e = 0; e < 3; ++e) {
        const Point& u = t.tiles[i].v[e];
        const Point& w = t.tiles[i].v[(e + 1) % 3];
        if (orient(u, w, s.p).is_zero() && strictly_between(s.p, u, w)) {
          v.k = 1;
          break;
        }
      }
    if (rot) {
      CycloNum prod = (*rot)[0].pow(v.n) * (*rot)[1].pow(v.m) * (*rot)[2].pow(v.l);
      CycloNum want(prod.field(), Rational(v.k % 2 ? -1 : 1));
      if (prod != want) fail("vertex " + s.p.key() + ": angles do not sum to " + std::to_string(v.k) + "pi");
    }
    cen.vertices.push_back(v);
  }
  for (int c = 0; c < 3; ++c) {
    cen.P += cen.corner[c][0];
    cen.Q += cen.corner[c][1];
    cen.R += cen.corner[c][2];
  }
  if (rep.failures.empty()) {
    long sn = cen.P, sm = cen.Q, sl = cen.R;
    for (auto& v : cen.vertices) sn += v.n, sm += v.m, sl += v.l;
    if (sn != rep.N || sm != rep.N || sl != rep.N) fail("census totals differ from N");
  }
  rep.pass = rep.failures.empty();
  return rep;
}

std::string VerifyReport::str() const {
  std::ostringstream os;
  os << "verdict: " << (pass ? "pass" : "fail") << "\n";
  os << "N: " << N << "\n";
  os << "dmatrix:";
  const char* rows[3] = {"X", "Y", "Z"};
  for (int r = 0; r < 3; ++r)
    os << " " << rows[r] << "=(" << dmatrix.d[r][0] << "," << dmatrix.d[r][1] << "," << dmatrix.d[r][2] << ")";
  os << "\n";
  long sn = census.P, sm = census.Q, sl = census.R, k1 = 0, k2 = 0;
  for (auto& v : census.vertices) {
    sn += v.n, sm += v.m, sl += v.l;
    (v.k == 1 ? k1 : k2)++;
  }
  os << "census: P=" << census.P << " Q=" << census.Q << " R=" << census.R << " vertices=" << census.vertices.size()
     << " (k=1: " << k1 << ", k=2: " << k2 << ")\n";
  os << "census totals: P+sum(n)=" << sn << " Q+sum(m)=" << sm << " R+sum(l)=" << sl << "\n";
  if (failures.empty()) {
    os << "failures: none\n";
  } else {
    os << "failures: " << failures.size() << "\n";
    for (auto& f : failures) os << "  " << f << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Generators.

namespace {

FieldRef f12() { return CycloField::make(12); }

Point pt(const CycloNum& x, const CycloNum& y) { return {x, y}; }

CycloNum sqrt3(const FieldRef& f) { return Rational(2) * cos_pi(1, 6, f); }

Point affine(const Point& x, const Point& u0, const Point& w0, const std::array<CycloNum, 4>& L) {
  CycloNum dx = x.x - u0.x, dy = x.y - u0.y;
  return {w0.x + L[0] * dx + L[1] * dy, w0.y + L[2] * dx + L[3] * dy};
}

}  // namespace

TileShape equilateral_shape(const CycloNum& side) { return make_tile_shape(side, side, side); }

Tiling gen_three() {
  FieldRef f = f12();
  CycloNum r3 = sqrt3(f), zero(f, Rational(0)), one(f, Rational(1));
  CycloNum h = Rational(1, 2) * r3;
  auto q = [&](const Rational& v) { return CycloNum(f, v); };
  Tiling t;
  t.field = f;
  t.tile = make_tile_shape(one, one, r3);
  t.boundary = {{pt(zero, zero), pt(r3, zero), pt(h, q(Rational(3, 2)))}};
  Point apex = pt(h, q(Rational(1, 2)));
  t.tiles = {
      {{pt(zero, zero), pt(h, q(Rational(3, 2))), apex}},
      {{pt(h, q(Rational(3, 2))), apex, pt(r3, zero)}},
      {{pt(zero, zero), apex, pt(r3, zero)}},
  };
  return t;
}

Tiling gen_quadratic(const TileShape& tile0, long n) {
  if (n < 1) throw AlgebraError("gen_quadratic: n must be positive");
  // A at the origin with angle α (opposite a), B = (c, 0), C = b·(cos α, sin α)
  if (!tile0.angle_over_pi[0]) throw AlgebraError("gen_quadratic: tile angle is not a rational multiple of pi");
  Rational ang = *tile0.angle_over_pi[0];
  long k = ang.get_num().get_si(), d = ang.get_den().get_si();
  FieldRef f = CycloField::make(lcm_l(tile0.side[0].order(), trig_field_order(d)));
  TileShape tile = embed_shape(tile0, f);
  const CycloNum &b = tile.side[1], &c = tile.side[2];
  CycloNum N(f, Rational(n)), zero(f, Rational(0));
  Point A = pt(zero, zero), B = pt(N * c, zero);
  Point C = pt(N * b * cos_pi(k, d, f), N * b * sin_pi(k, d, f));
  auto P = [&](long i, long j) {
    Rational u = frac(i, n), v = frac(j, n);
    return pt(u * B.x + v * C.x, u * B.y + v * C.y);
  };
  Tiling t;
  t.field = f;
  t.tile = tile;
  t.boundary = {{A, B, C}};
  for (long i = 0; i < n; ++i)
    for (long j = 0; i + j < n; ++j) {
      t.tiles.push_back({{P(i, j), P(i + 1, j), P(i, j + 1)}});
      if (i + j + 2 <= n) t.tiles.push_back({{P(i + 1, j), P(i + 1, j + 1), P(i, j + 1)}});
    }
  return t;
}

Tiling compose(const Tiling& outer0, const Tiling& inner0) {
  FieldRef f = CycloField::make(lcm_l(outer0.order(), inner0.order()));
  Tiling outer = outer0, inner = inner0;
  auto lift = [&](Tiling& t) {
    if (t.order() == f->order()) return;
    t.field = f;
    t.tile = embed_shape(t.tile, f);
    t.boundary = embed_tri(t.boundary, f);
    for (auto& tri : t.tiles) tri = embed_tri(tri, f);
  };
  lift(outer);
  lift(inner);
  auto ci = congruent_to(inner.boundary, outer.tile);
  if (!ci) throw AlgebraError("compose: inner boundary is not congruent to the outer tile");
  std::array<int, 3> inner_at{};
  for (int i = 0; i < 3; ++i) inner_at[ci->label[i]] = i;
  const Point& u0 = inner.boundary.v[inner_at[0]];
  const Point& u1 = inner.boundary.v[inner_at[1]];
  const Point& u2 = inner.boundary.v[inner_at[2]];
  CycloNum e00 = u1.x - u0.x, e01 = u2.x - u0.x, e10 = u1.y - u0.y, e11 = u2.y - u0.y;
  CycloNum idet = (e00 * e11 - e01 * e10).inv();
  Tiling r;
  r.field = f;
  r.tile = inner.tile;
  r.boundary = outer.boundary;
  for (auto& ot : outer.tiles) {
    auto co = congruent_to(ot, outer.tile);
    if (!co) throw AlgebraError("compose: outer tiling has a tile not congruent to its shape");
    std::array<int, 3> at{};
    for (int i = 0; i < 3; ++i) at[co->label[i]] = i;
    const Point& w0 = ot.v[at[0]];
    const Point& w1 = ot.v[at[1]];
    const Point& w2 = ot.v[at[2]];
    CycloNum f00 = w1.x - w0.x, f01 = w2.x - w0.x, f10 = w1.y - w0.y, f11 = w2.y - w0.y;
    // L = F·E⁻¹ with E⁻¹ = adj(E)/det
    std::array<CycloNum, 4> L{(f00 * e11 - f01 * e10) * idet, (f01 * e00 - f00 * e01) * idet,
                              (f10 * e11 - f11 * e10) * idet, (f11 * e00 - f10 * e01) * idet};
    for (auto& it : inner.tiles)
      r.tiles.push_back({{affine(it.v[0], u0, w0, L), affine(it.v[1], u0, w0, L), affine(it.v[2], u0, w0, L)}});
  }
  return r;
}

Tiling gen_3m2(long m) {
  if (m < 1) throw AlgebraError("gen_3m2: m must be positive");
  Tiling three = gen_three();
  return compose(gen_quadratic(equilateral_shape(sqrt3(three.field)), m), three);
}

Tiling gen_27() {
  // Figure 2 lattice points (X, Y) stand for (X·√3/2, Y/2)
  static const int tri[27][6] = {
      {0, 0, 1, 1, 1, 3}, {0, 0, 2, 0, 1, 1}, {1, 1, 2, 0, 3, 1}, {1, 1, 2, 2, 2, 4}, {1, 1, 2, 4, 1, 3},
      {1, 1, 3, 1, 2, 2}, {1, 3, 2, 4, 2, 6}, {2, 0, 4, 0, 3, 1}, {2, 2, 3, 1, 2, 4}, {2, 4, 3, 1, 3, 3},
      {2, 4, 3, 3, 4, 4}, {2, 4, 3, 5, 3, 7}, {2, 4, 3, 7, 2, 6}, {2, 4, 4, 4, 3, 5}, {2, 6, 3, 7, 3, 9},
      {3, 1, 4, 0, 5, 1}, {3, 1, 4, 2, 4, 4}, {3, 1, 4, 4, 3, 3}, {3, 1, 5, 1, 4, 2}, {3, 5, 4, 4, 3, 7},
      {3, 7, 4, 4, 4, 6}, {3, 7, 4, 6, 3, 9}, {4, 0, 6, 0, 5, 1}, {4, 2, 5, 1, 4, 4}, {4, 4, 5, 1, 5, 3},
      {4, 4, 5, 3, 4, 6}, {5, 1, 6, 0, 5, 3}};
  FieldRef f = f12();
  CycloNum h = Rational(1, 2) * sqrt3(f), one(f, Rational(1));
  auto L = [&](int X, int Y) { return pt(Rational(X) * h, CycloNum(f, frac(Y, 2))); };
  Tiling t;
  t.field = f;
  t.tile = make_tile_shape(one, one, sqrt3(f));
  t.boundary = {{L(0, 0), L(6, 0), L(3, 9)}};
  for (auto& r : tri) t.tiles.push_back({{L(r[0], r[1]), L(r[2], r[3]), L(r[4], r[5])}});
  return t;
}

// ---------------------------------------------------------------------------
// I/O.

namespace {

std::string pt_str(const Point& p) { return "(" + p.x.str() + "|" + p.y.str() + ")"; }

std::string tri_str(const TriangleGeom& t) {
  return pt_str(t.v[0]) + " " + pt_str(t.v[1]) + " " + pt_str(t.v[2]);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

std::string save_tiling(const Tiling& t) {
  std::ostringstream os;
  os << "tiling v1\n";
  os << "field m=" << t.order() << "\n";
  os << "tile " << t.tile.side[0].str() << " " << t.tile.side[1].str() << " " << t.tile.side[2].str() << "\n";
  os << "boundary " << tri_str(t.boundary) << "\n";
  os << "tiles " << t.tiles.size() << "\n";
  for (auto& tri : t.tiles) os << tri_str(tri) << "\n";
  return os.str();
}

Tiling load_tiling(const std::string& text) {
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream is(text);
    std::string ln;
    int no = 0;
    while (std::getline(is, ln)) {
      ++no;
      auto h = ln.find('#');
      if (h != std::string::npos) ln.erase(h);
      while (!ln.empty() && std::isspace(static_cast<unsigned char>(ln.back()))) ln.pop_back();
      std::size_t b = 0;
      while (b < ln.size() && std::isspace(static_cast<unsigned char>(ln[b]))) ++b;
      ln.erase(0, b);
      if (!ln.empty()) lines.emplace_back(no, ln);
    }
  }
  std::size_t li = 0;
  auto next = [&](const std::string& what) -> std::pair<int, std::string> {
    if (li >= lines.size())
      throw TilingParseError(lines.empty() ? 1 : lines.back().first + 1, "unexpected end of file, expected " + what);
    return lines[li++];
  };
  auto [l1, s1] = next("header");
  if (s1 != "tiling v1") throw TilingParseError(l1, "expected 'tiling v1'");
  auto [l2, s2] = next("field line");
  if (s2.rfind("field m=", 0) != 0) throw TilingParseError(l2, "expected 'field m=<int>'");
  long m;
  try {
    std::size_t used = 0;
    m = std::stol(s2.substr(8), &used);
    if (used != s2.size() - 8 || m < 1 || m > 100000) throw std::invalid_argument("m");
  } catch (const std::exception&) {
    throw TilingParseError(l2, "bad field order");
  }
  FieldRef f = CycloField::make(m);
  auto real = [&](int line, const std::string& s) {
    CycloNum x;
    try {
      x = parse_cyclo(f, s);
    } catch (const AlgebraError& e) {
      throw TilingParseError(line, e.what());
    }
    if (!x.is_real()) throw TilingParseError(line, "coordinate '" + s + "' is not real");
    return x;
  };
  auto point = [&](int line, const std::string& s) {
    if (s.size() < 3 || s.front() != '(' || s.back() != ')') throw TilingParseError(line, "bad point '" + s + "'");
    auto bar = s.find('|');
    if (bar == std::string::npos) throw TilingParseError(line, "bad point '" + s + "'");
    return pt(real(line, s.substr(1, bar - 1)), real(line, s.substr(bar + 1, s.size() - bar - 2)));
  };
  auto triangle = [&](int line, const std::vector<std::string>& w, std::size_t off) {
    if (w.size() != off + 3) throw TilingParseError(line, "expected three points");
    return TriangleGeom{{point(line, w[off]), point(line, w[off + 1]), point(line, w[off + 2])}};
  };
  Tiling t;
  t.field = f;
  auto [l3, s3] = next("tile line");
  auto w3 = split_ws(s3);
  if (w3.size() != 4 || w3[0] != "tile") throw TilingParseError(l3, "expected 'tile <a> <b> <c>'");
  try {
    t.tile = make_tile_shape(real(l3, w3[1]), real(l3, w3[2]), real(l3, w3[3]));
  } catch (const AlgebraError& e) {
    throw TilingParseError(l3, e.what());
  }
  auto [l4, s4] = next("boundary line");
  auto w4 = split_ws(s4);
  if (w4.empty() || w4[0] != "boundary") throw TilingParseError(l4, "expected 'boundary <pt> <pt> <pt>'");
  t.boundary = triangle(l4, w4, 1);
  auto [l5, s5] = next("tiles line");
  auto w5 = split_ws(s5);
  long n;
  try {
    if (w5.size() != 2 || w5[0] != "tiles") throw std::invalid_argument("tiles");
    std::size_t used = 0;
    n = std::stol(w5[1], &used);
    if (used != w5[1].size() || n < 0) throw std::invalid_argument("n");
  } catch (const std::exception&) {
    throw TilingParseError(l5, "expected 'tiles <N>'");
  }
  for (long i = 0; i < n; ++i) {
    auto [li2, s] = next("tile triangle");
    t.tiles.push_back(triangle(li2, split_ws(s), 0));
  }
  if (li < lines.size()) throw TilingParseError(lines[li].first, "trailing content after the tile list");
  return t;
}

std::string canonical_form(const Tiling& t) {
  auto canon = [](const TriangleGeom& g) {
    std::array<std::string, 3> k{g.v[0].key(), g.v[1].key(), g.v[2].key()};
    std::sort(k.begin(), k.end());
    return k[0] + " " + k[1] + " " + k[2];
  };
  std::vector<std::string> tiles;
  for (auto& g : t.tiles) tiles.push_back(canon(g));
  std::sort(tiles.begin(), tiles.end());
  std::string s = "m=" + std::to_string(t.order()) + "\nboundary " + canon(t.boundary) + "\n";
  for (auto& x : tiles) s += x + "\n";
  return s;
}

std::string svg_export(const Tiling& t) {
  auto coords = [](const TriangleGeom& g) {
    std::array<std::pair<double, double>, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = {g.v[i].x.to_double(), g.v[i].y.to_double()};
    return r;
  };
  auto bc = coords(t.boundary);
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (auto& [x, y] : bc) x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
  double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double W = 400, pad = 10;
  double s = (W - 2 * pad) / span;
  char buf[64];
  auto P = [&](double x, double y) {
    std::snprintf(buf, sizeof buf, "%.4f,%.4f", pad + (x - x0) * s, pad + (y1 - y) * s);
    return std::string(buf);
  };
  std::ostringstream os;
  int h = static_cast<int>(std::ceil(2 * pad + (y1 - y0) * s));
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << static_cast<int>(W) << "\" height=\""
     << h << "\">\n";
  for (auto& g : t.tiles) {
    auto c = coords(g);
    os << "  <polygon points=\"" << P(c[0].first, c[0].second) << " " << P(c[1].first, c[1].second) << " "
       << P(c[2].first, c[2].second) << "\" fill=\"#f4efe1\" stroke=\"#333\" stroke-width=\"0.6\"/>\n";
  }
  os << "  <path d=\"M" << P(bc[0].first, bc[0].second) << " L" << P(bc[1].first, bc[1].second) << " L"
     << P(bc[2].first, bc[2].second) << " Z\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace tritile
