// Randomized property suites; each returns the number of failing cases.
#pragma once

#include <algorithm>
#include <functional>
#include <iostream>

#include "support.hpp"

namespace tritile::test {

struct SuiteResult {
  std::string name;
  long cases = 0, failures = 0;
};

inline SuiteResult field_axioms(long cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult r{"field axioms", cases, 0};
  for (long i = 0; i < cases; ++i) {
    FieldRef f = CycloField::make(random_order(rng));
    CycloNum x = random_cyclo(rng, f), y = random_cyclo(rng, f), z = random_nonzero(rng, f);
    CycloNum one(f, Rational(1)), zero(f, Rational(0));
    bool ok = (x + y) + z == x + (y + z) && x * y == y * x && (x * y) * z == x * (y * z) &&
              x * (y + z) == x * y + x * z && x + zero == x && x * one == x && x - x == zero &&
              z * z.inv() == one && (x / z) * z == x && z.pow(-2) * z.pow(3) == z;
    r.failures += !ok;
  }
  return r;
}

inline SuiteResult automorphism_homomorphism(long cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult r{"sigma automorphism homomorphism", cases, 0};
  for (long i = 0; i < cases; ++i) {
    long m = random_order(rng);
    FieldRef f = CycloField::make(m);
    long k;
    do k = std::uniform_int_distribution<long>(1, 4 * m)(rng) - 2 * m;
    while (gcd_l(((k % m) + m) % m, m) != 1);
    CycloNum x = random_cyclo(rng, f), y = random_cyclo(rng, f);
    auto s = [&](const CycloNum& v) { return automorphism(k, v); };
    Rational q = random_rational(rng);
    bool ok = s(x + y) == s(x) + s(y) && s(x * y) == s(x) * s(y) && s(q * x) == q * s(x) &&
              s(CycloNum::zeta(f, 1)) == CycloNum::zeta(f, k);
    r.failures += !ok;
  }
  return r;
}

inline SuiteResult pythagorean(long cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult r{"sin^2 + cos^2 = 1", cases, 0};
  for (long i = 0; i < cases; ++i) {
    long n = std::uniform_int_distribution<long>(1, 40)(rng);
    long k = std::uniform_int_distribution<long>(-3 * n, 3 * n)(rng);
    CycloNum s = sin_pi(k, n), c = cos_pi(k, n, s.field());
    bool ok = s * s + c * c == CycloNum(s.field(), Rational(1)) && s.is_real() && c.is_real();
    r.failures += !ok;
  }
  return r;
}

inline SuiteResult minpoly_annihilates(long cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult r{"minpoly annihilation", cases, 0};
  for (long i = 0; i < cases; ++i) {
    long n = std::uniform_int_distribution<long>(1, 30)(rng);
    long k = std::uniform_int_distribution<long>(1, 2 * n)(rng);
    CycloNum x;
    switch (i % 3) {
      case 0: x = sin_pi(k, n); break;
      case 1: x = cos_pi(k, n); break;
      default: {
        FieldRef f = CycloField::make(trig_field_order(n));
        x = random_rational(rng) * sin_pi(k, n, f) + random_rational(rng) * cos_pi(1, n, f);
      }
    }
    QPoly p = minpoly(x);
    bool ok = eval_at(p, x).is_zero() && p.lead() == 1 && p.degree() >= 1 && p.degree() <= x.field()->degree();
    r.failures += !ok;
  }
  return r;
}

// a random rigid motion by a multiple of π/6 and a rational shift, with the
// tiles shuffled; the census and d-matrix must not change
inline Tiling moved(const Tiling& t, std::mt19937_64& rng) {
  FieldRef f = CycloField::make(lcm_l(t.order(), 12));
  long k = std::uniform_int_distribution<long>(0, 11)(rng);
  CycloNum c = cos_pi(k, 6, f), s = sin_pi(k, 6, f);
  CycloNum dx(f, random_rational(rng)), dy(f, random_rational(rng));
  auto mv = [&](const Point& p) {
    CycloNum x = p.x.embed(f), y = p.y.embed(f);
    return Point{c * x - s * y + dx, s * x + c * y + dy};
  };
  auto tri = [&](const TriangleGeom& g) {
    TriangleGeom o;
    for (int i = 0; i < 3; ++i) o.v[i] = mv(g.v[i]);
    std::rotate(o.v.begin(), o.v.begin() + std::uniform_int_distribution<int>(0, 2)(rng), o.v.end());
    return o;
  };
  Tiling u;
  u.field = f;
  u.tile = make_tile_shape(t.tile.side[0].embed(f), t.tile.side[1].embed(f), t.tile.side[2].embed(f));
  u.boundary = tri(t.boundary);
  for (const auto& g : t.tiles) u.tiles.push_back(tri(g));
  std::shuffle(u.tiles.begin(), u.tiles.end(), rng);
  return u;
}

inline SuiteResult census_identities(long cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult r{"census P + sum n_i = N", cases, 0};
  Rational h(1, 2);
  TileShape t3 = gen_three().tile;
  std::vector<Tiling> base{gen_three(), gen_3m2(1), gen_3m2(2), gen_3m2(3), gen_27(),
                           gen_quadratic(t3, 2), gen_quadratic(t3, 3),
                           compose(gen_three(), gen_quadratic(make_tile_shape(h * t3.side[0], h * t3.side[1],
                                                                              h * t3.side[2]),
                                                              2))};
  for (long i = 0; i < cases; ++i) {
    const Tiling& t = base[std::uniform_int_distribution<std::size_t>(0, base.size() - 1)(rng)];
    auto v = verify_tiling(moved(t, rng));
    long sn = 0, sm = 0, sl = 0;
    for (const auto& x : v.census.vertices) {
      sn += x.n;
      sm += x.m;
      sl += x.l;
    }
    bool ok = v.pass && v.N == static_cast<long>(t.tiles.size()) && v.census.P + sn == v.N &&
              v.census.Q + sm == v.N && v.census.R + sl == v.N;
    r.failures += !ok;
  }
  return r;
}

inline std::vector<std::function<SuiteResult(long, std::uint64_t)>> all_suites() {
  return {field_axioms, automorphism_homomorphism, pythagorean, minpoly_annihilates, census_identities};
}

}  // namespace tritile::test
