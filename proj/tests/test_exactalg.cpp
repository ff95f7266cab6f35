#include <gtest/gtest.h>

#include "support.hpp"

using namespace tritile;

TEST(Totient, Examples) {
  EXPECT_EQ(totient(12), 4);
  EXPECT_EQ(totient(1), 1);
  EXPECT_EQ(totient(28), 12);
  EXPECT_EQ(totient(97), 96);
  EXPECT_EQ(totient(36), 12);
}

TEST(Totient, MatchesGcdCount) {
  for (long n = 1; n <= 300; ++n) {
    long c = 0;
    for (long k = 1; k <= n; ++k) c += gcd_l(k, n) == 1;
    EXPECT_EQ(totient(n), c) << n;
  }
}

TEST(Cyclotomic, PrintedForms) {
  EXPECT_EQ(cyclotomic_poly(28).str("x"), "x^12 - x^10 + x^8 - x^6 + x^4 - x^2 + 1");
  EXPECT_EQ(cyclotomic_poly(1).str("x"), "x - 1");
  EXPECT_EQ(cyclotomic_poly(22).str("x"), "x^10 - x^9 + x^8 - x^7 + x^6 - x^5 + x^4 - x^3 + x^2 - x + 1");
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  for (long n = 1; n <= 60; ++n) {
    QPoly prod = parse_qpoly("1");
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic_poly(d);
    EXPECT_EQ(prod, parse_qpoly("x^" + std::to_string(n) + " - 1")) << n;
    EXPECT_EQ(cyclotomic_poly(n).degree(), totient(n));
  }
}

TEST(CycloArith, ZetaFourteenIsMinusOne) {
  FieldRef f = CycloField::make(28);
  CycloNum z14 = CycloNum::zeta(f, 14);
  EXPECT_EQ(z14, CycloNum(f, Rational(-1)));
  EXPECT_EQ(z14 * z14, CycloNum(f, Rational(1)));
}

TEST(CycloArith, ProductOfDifferences) {
  FieldRef f = CycloField::make(28);
  auto z = [&](long k) { return CycloNum::zeta(f, k); };
  EXPECT_EQ((z(1) - z(-1)) * (z(9) - z(-9)), z(10) - z(8) - z(-8) + z(-10));
}

TEST(CycloArith, Errors) {
  FieldRef f = CycloField::make(12), g = CycloField::make(5);
  EXPECT_THROW(CycloNum(f, Rational(0)).inv(), AlgebraError);
  EXPECT_THROW(cyclo_arith(CycloOp::add, CycloNum(f, Rational(1)), CycloNum(g, Rational(1))), AlgebraError);
  EXPECT_THROW(cyclo_arith(CycloOp::inv, CycloNum(f, Rational(0)), CycloNum(f, Rational(0))), AlgebraError);
}

TEST(Trig, ValuesAndSigns) {
  EXPECT_EQ(sin_pi(1, 6), CycloNum(sin_pi(1, 6).field(), frac(1, 2)));
  EXPECT_EQ(cos_pi(1, 3), CycloNum(cos_pi(1, 3).field(), frac(1, 2)));
  EXPECT_EQ(sin_pi(1, 5).order(), 20);
  EXPECT_TRUE(sin_pi(3, 11).is_real());
  EXPECT_EQ(sign(sin_pi(1, 11)), 1);
  EXPECT_EQ(sign(sin_pi(13, 11)), -1);
  EXPECT_EQ(sign(cos_pi(6, 11)), -1);
  EXPECT_NEAR(sin_pi(2, 7).to_double(), 0.78183148246802980871, 1e-12);
}

TEST(Minpoly, SinPiOver11AndFive) {
  EXPECT_EQ(monic(minpoly(sin_pi(1, 11))).str("x"),
            parse_qpoly("x^10 - 11/4 x^8 + 11/4 x^6 - 77/64 x^4 + 55/256 x^2 - 11/1024").str("x"));
  EXPECT_EQ(monic(minpoly(sin_pi(1, 5))), monic(parse_qpoly("16x^4 - 20x^2 + 5")));
  EXPECT_EQ(minpoly(Rational(2) * cos_pi(1, 6)), parse_qpoly("x^2 - 3"));
  EXPECT_EQ(minpoly(sin_pi(1, 6)).degree(), 1);
}

TEST(Minpoly, DegreeOfCosMatchesTotient) {
  // deg cos(2π/n) = φ(n)/2 for n ≥ 3
  for (long n = 3; n <= 40; ++n) EXPECT_EQ(minpoly(cos_pi(2, n)).degree(), totient(n) / 2) << n;
}

TEST(Automorphism, Sigma15OnSinPiOver14) {
  for (long j = 1; j <= 13; ++j) {
    CycloNum s = sin_pi(j, 14);
    Rational sg = j % 2 ? 1 : -1;
    EXPECT_EQ(automorphism(15, s), sg * s) << j;
  }
  EXPECT_THROW(automorphism(2, sin_pi(1, 14)), AlgebraError);
}

TEST(ExpressInPowers, CosInTermsOfSin) {
  CycloNum a = sin_pi(1, 5);
  auto c = express_in_powers(cos_pi(1, 5, a.field()), a);
  EXPECT_EQ(QPoly(c), parse_qpoly("3/2 - 2x^2"));
  EXPECT_THROW(express_in_powers(sin_pi(1, 7, CycloField::make(140)), sin_pi(1, 5, CycloField::make(140))),
               AlgebraError);
}

TEST(ParamPoly, ParseAndPrint) {
  ParamPoly p = parse_param("q(l+r) - 2xy + 3");
  EXPECT_EQ(p.str(), parse_param("l*q + q*r - 2*x*y + 3").str());
  EXPECT_EQ(parse_param("(a+b)^2"), parse_param("a^2 + 2ab + b^2"));
  EXPECT_EQ(parse_param("(a+b)^2").subs("b", parse_param("-a")), ParamPoly(0));
  EXPECT_EQ(parse_param("a^2 b").coeff("a", 2), parse_param("b"));
  EXPECT_EQ(parse_param("3a + 2b").uniform_sign(), 1);
  EXPECT_EQ(parse_param("3a - 2b").uniform_sign(), 0);
  EXPECT_EQ(parse_param("a^2 - b^2").exact_div(parse_param("a - b")), parse_param("a + b"));
  EXPECT_THROW(parse_param("a^2 + 1").exact_div(parse_param("a - 1")), AlgebraError);
  EXPECT_THROW(parse_param("a + * b"), AlgebraError);
}

TEST(UniPoly, DivisionAndPseudoRemainder) {
  QPoly f = parse_qpoly("x^5 - 3x^2 + 1"), g = parse_qpoly("2x^2 + x - 1");
  auto dr = divrem(f, g);
  EXPECT_EQ(dr.quot * g + dr.rem, f);
  EXPECT_LT(dr.rem.degree(), g.degree());
  PPoly F = parse_unipoly("a s^3 + b s + c", "s"), G = parse_unipoly("d s + e", "s");
  PPoly r = prem(F, G);
  // d³·F(−e/d) = −a e³ − b e d² + c d³
  EXPECT_EQ(r.str("s"), PPoly({parse_param("-a e^3 - b d^2 e + c d^3")}).str("s"));
}

TEST(Parse, Rational) {
  EXPECT_EQ(parse_rational("-6/4"), frac(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), AlgebraError);
  EXPECT_THROW(parse_rational("x"), AlgebraError);
}
