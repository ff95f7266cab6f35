// The 3α + 2β = π family: admissible shapes and the two eigenvector certificates.
#include <algorithm>
#include <sstream>

#include "tritile/casework.hpp"

namespace tritile {

namespace {

ParamPoly V(const char* name) { return ParamPoly::var(name); }
ParamPoly PP(const std::string& s) { return parse_param(s); }
PPoly S(const std::string& s) { return parse_unipoly(s, "s"); }
PPoly L(const std::string& s) { return parse_unipoly(s, "L"); }
PPoly C(const ParamPoly& c) { return PPoly({c}); }

using M3 = std::array<std::array<ParamPoly, 3>, 3>;

ParamPoly det3(const M3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

ParamPoly dmatrix_det() {
  return det3({{{V("p"), V("d"), V("e")}, {V("g"), V("m"), V("f")}, {V("h"), V("l"), V("r")}}});
}

// coefficients of a polynomial in L, substituting a value for the symbol D
PPoly subs_coeffs(const PPoly& p, const std::string& v, const ParamPoly& by) {
  std::vector<ParamPoly> c;
  for (const auto& x : p.coeffs()) c.push_back(x.subs(v, by));
  return PPoly(c);
}

PPoly at_zero_params(const PPoly& p, const std::map<std::string, ParamPoly>& z) {
  std::vector<ParamPoly> c;
  for (auto x : p.coeffs()) {
    for (const auto& [k, v] : z) x = x.subs(k, v);
    c.push_back(x);
  }
  return PPoly(c);
}

ParamPoly eval_s(const PPoly& p, const Rational& s) {
  ParamPoly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * ParamPoly(s) + *it;
  return acc;
}

// exact check of a/c = s and b/c = 1 − s² at a rational α (over π) with 3α + 2β = π
std::string singamma_at(long an, long ad) {
  // α = an/ad·π, β = (1 − 3α)/2, γ = π − α − β; half angle α/2 = an/(2ad)·π
  Rational al = frac(an, ad), be = (1 - 3 * al) / 2, ga = 1 - al - be;
  long M = lcm_l(lcm_l(trig_field_order(al.get_den().get_si()), trig_field_order(be.get_den().get_si())),
                 lcm_l(trig_field_order(ga.get_den().get_si()), trig_field_order(2 * ad)));
  FieldRef F = CycloField::make(M);
  auto sinq = [&](const Rational& q) { return sin_pi(q.get_num().get_si(), q.get_den().get_si(), F); };
  CycloNum a = sinq(al), b = sinq(be), c = sinq(ga);
  CycloNum s = Rational(2) * sin_pi(an, 2 * ad, F);
  CycloNum one(F, Rational(1));
  bool ok = a == s * c && b == (one - s * s) * c && c == cos_pi(an, 2 * ad, F);
  return ok ? "holds" : "fails";
}

}  // namespace

std::vector<Shape32> engine_32_shapes() {
  // angles of ABC are cα·α + cβ·β with the three summing to (3, 2); since α/π
  // is irrational no other relation is available
  std::vector<std::array<long, 2>> parts;
  for (long x = 0; x <= 3; ++x)
    for (long y = 0; y <= 2; ++y)
      if (x + y > 0) parts.push_back({x, y});
  std::set<std::array<std::array<long, 2>, 3>> seen;
  std::vector<Shape32> out;
  const std::array<std::array<long, 2>, 3> tile{{{0, 1}, {1, 0}, {2, 1}}};
  for (const auto& u : parts)
    for (const auto& v : parts) {
      std::array<long, 2> w{3 - u[0] - v[0], 2 - u[1] - v[1]};
      if (w[0] < 0 || w[1] < 0 || w[0] + w[1] == 0) continue;
      std::array<std::array<long, 2>, 3> sh{u, v, w};
      std::sort(sh.begin(), sh.end());
      if (!seen.insert(sh).second) continue;
      if (sh == tile) continue;                                 // similar to the tile
      if (sh[0] == sh[1] || sh[1] == sh[2]) continue;           // isosceles
      // an angle made of k ≥ 3 α's alone gives a second relation unless it is the whole (3, 0)
      bool split = false;
      for (const auto& x : sh)
        if (x[1] == 0 && x[0] >= 3) split = true;
      if (split) continue;
      auto name = [](const std::array<long, 2>& x) {
        std::string s;
        auto term = [&](long k, const char* v) {
          if (k == 0) return;
          if (!s.empty()) s += " + ";
          s += (k == 1 ? "" : std::to_string(k)) + v;
        };
        term(x[0], "alpha");
        term(x[1], "beta");
        return s;
      };
      out.push_back({name(sh[0]) + ", " + name(sh[1]) + ", " + name(sh[2]), sh});
    }
  return out;
}

CertificateReport engine_32_case2() {
  CertificateReport rep;
  rep.name = "threetwo-case2 (angles alpha, 2alpha, 2beta; two tiles at the 2beta corner)";
  PPoly one_s2 = S("1 - s^2"), two_s2 = S("2 - s^2"), s = S("s");

  rep.check("singamma at alpha = 2pi/9", "holds", singamma_at(2, 9));
  rep.check("singamma at alpha = 2pi/7", "holds", singamma_at(2, 7));

  // ratio of rows 2 and 1, divided by c
  PPoly psi = two_s2 * (S("p*s") + C(V("d")) * one_s2 + S("e")) - (S("g*s") + C(V("m")) * one_s2 + S("f"));
  rep.check("psi", S("ds^4 - ps^3 + (m-3d-e)s^2 + (2p-g)s + (2d+2e-f-m)").str("s"), psi.str("s"));
  rep.equations.push_back("psi(s) = " + psi.str("s"));
  // ψ ≡ 0 forces the d-matrix (0 0 e; 0 e e; h l r)
  PPoly psi0 = at_zero_params(psi, {{"p", 0}, {"d", 0}, {"g", 0}, {"m", V("e")}, {"f", V("e")}});
  rep.check("psi vanishes identically only for d = (0 0 e; 0 e e; h l r)", "0", psi0.str("s"));
  rep.step("psi == 0", "u = -be^2 + e L sin2alpha != 0, and v c = b w gives e = e(t-1) + e t, so t = 1, alpha = pi/3, "
                       "beta = 0: contradiction");

  // λ·s = p s + d(1 − s²) + e
  PPoly Lam = S("p*s") + C(V("d")) * one_s2 + S("e");
  rep.check("lambda", S("p*s - d*s^2 + e + d").str("s"), Lam.str("s"));

  // third-row cofactors of the eigenvalue matrix, scaled by sin 2α (S) and λ (L)
  {
    M3 m{{{V("p") - V("L"), V("d"), V("e")},
          {V("g") * V("b"), V("m") * V("b") - V("L") * V("S"), V("f") * V("b")},
          {0, 0, 0}}};
    ParamPoly u = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    ParamPoly v = -(m[0][0] * m[1][2] - m[0][2] * m[1][0]);
    ParamPoly w = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    rep.check("eigenvector u", PP("(df - em)b + eLS").str(), u.str());
    rep.check("eigenvector v", PP("(eg - pf)b + fLb").str(), v.str());
    rep.check("eigenvector w", PP("(pm - dg)b - (mb + pS)L + L^2 S").str(), w.str());
  }

  // components over c, in s; λ = Λ/s, sin 2α/c = s(2 − s²), b/c = 1 − s²
  PPoly v_poly = S("e*g - p*f") * s + C(V("f")) * Lam;  // s·v/b
  PPoly H = -v_poly;
  rep.check("v = 0 gives H", S("dfs^2 - egs - (e+d)f").str("s"), H.str("s"));
  rep.check("H(0)", "(e+d)*f", eval_s(H, 0).str(), true);
  rep.check("H(1)", PP("-eg - ef").str(), eval_s(H, 1).str());
  rep.step("v != 0", "H(0) = -(d+e)f < 0, H(1) = -eg - ef < 0 and H is convex, so H has no zero in (0, 1)");

  PPoly u_poly = C(PP("df - em")) * one_s2 + C(V("e")) * Lam * two_s2;  // u/c
  rep.check("u = 0 polynomial", S("eds^4 - eps^3 + (em - df - 3ed - e^2)s^2 + 2eps + (df - em + 2e^2 + 2de)").str("s"),
            u_poly.str("s"));
  PPoly diff = u_poly - C(V("e")) * psi;
  rep.check("e(H - psi)", S("-dfs^2 + egs + df").str("s"), diff.str("s"), true);
  {
    PPoly dg0 = at_zero_params(diff, {{"d", 0}, {"g", 0}});
    rep.check("with d = g = 0, u - e*psi", PP("e*f").str(), dg0.str("s"));
  }
  rep.notes.push_back("u - e psi = -dfs^2 + egs + (d+e)f (printed without the ef term); the same convexity "
                      "argument as for H rules out a zero in (0, 1)");
  rep.step("u != 0", "u = psi = 0 needs dfs^2 - egs - (d+e)f = 0: negative at s = 0 and s = 1 and convex, "
                     "so no zero in (0, 1)");

  PPoly w_poly = C(PP("pm - dg")) * one_s2 * s - (C(V("m")) * one_s2 + S("p*s") * two_s2) * Lam + Lam * Lam * two_s2;
  rep.check("w = 0 polynomial",
            S("-d^2 s^7 + dp s^5 +(4d^2 + 2de-dm)s^4 + (dg-3dp-ep)s^3 + (-5d^2 - 6de - e^2 + 2dm + em) s^2 "
              "+ (-dg + 2dp + 2ep) s + (2d^2+4de+2e^2 - dm - em)")
                .str("s"),
            w_poly.str("s"), true);
  PPoly wr = prem(w_poly, psi);
  PPoly G = S("dfs^2 - egs - f(d+e)");
  rep.check("w mod psi", (C(PP("-d^3")) * G).str("s"), wr.str("s"));
  rep.step("w != 0", "d = 0 gives -egs - fe = 0 with fe > 0; otherwise G(0) < 0, G(1) < 0 and G is convex");
  rep.notes.push_back("the w = 0 polynomial has degree 6 (printed with -d^2 s^7); its remainder mod psi is -d^3 G");
  rep.notes.push_back("H(0) = -(e+d)f (printed as (e+d)f); the sign argument uses the correct value");

  // a/c = u/w: s·w = u, all over c
  PPoly ratio = w_poly - u_poly;
  PPoly rr = prem(ratio, psi);
  rep.equations.push_back("a/c = u/w: " + ratio.str("s") + " = 0");
  rep.check("a/c = u/w sextic",
            S("d^2 s^6 - dps^5 +(dm-de-3d^2)s^4 +(2dp-dg)s^3 +(3d^2+de-df-2dm)s^2 + (dg-dp+ep)s +(d^2-e^2 -df-dm)")
                .str("s"),
            ratio.str("s"), true);
  PPoly chi_printed = S("(dm+de-d^2)s^2 - (dg-dp+ep)s + d^2-e^2 - df-dm");
  rep.check("chi = sextic mod psi", chi_printed.str("s"), rr.str("s"), true);
  rep.notes.push_back("with sin 2alpha / c = s(2 - s^2) the relation a/c = u/w is a multiple of psi (remainder 0) "
                      "and carries no new information; the printed sextic and chi follow from using s(1 - s^2) "
                      "for sin 2alpha / c");

  // the endgame as printed, from the printed χ
  PPoly F = C(V("d")) * psi - chi_printed;
  rep.check("F = d psi - chi", S("d^2s^4-dps^3 -2d(d+e)s^2 + p(d+e)s + (d+e)^2").str("s"), F.str("s"));
  rep.check("F(1)", PP("pe + e^2").str(), eval_s(F, 1).str());
  rep.check("F(0)", PP("(d+e)^2").str(), eval_s(F, 0).str());
  PPoly Fp0 = at_zero_params(F, {{"p", 0}});
  PPoly sq1 = S("ds - (d+e)"), sq2 = S("ds^2 - (d+e)");
  rep.check("F at p = 0", (sq1 * sq1).str("s"), Fp0.str("s"), true);
  PPoly dF = F.derivative();
  rep.check("F'", S("4d^2s^3 - 3dps^2 - 4d(d+e)s + p(d+e)").str("s"), dF.str("s"));
  // Vieta for F' = c3 s³ + c2 s² + c1 s + c0: sum = −c2/c3, product = −c0/c3
  rep.check("F' root sum * 4d^2", PP("4d(d+e)").str(), (-dF.coeff(2)).str(), true);
  rep.check("F' root product * 4d^2", PP("-p(d+e)").str(), (-dF.coeff(0)).str());
  rep.check("F'(1)", PP("p(e-2d) - 4de").str(), eval_s(dF, 1).str());
  rep.notes.push_back("F at p = 0 is (ds^2 - (d+e))^2 (printed (ds - (d+e))^2); its zero s^2 = (d+e)/d >= 1 "
                      "still lies outside (0, 1)");
  rep.notes.push_back("the roots of F' sum to 3p/(4d), not (d+e)/d, so e < d does not follow and F'(1) >= 0 "
                      "gives no contradiction");
  rep.facts.push_back("psi != 0, u, v, w != 0: established");
  rep.facts.push_back("endgame: chi is not a consequence of the tiling equations; the case stays open");
  rep.verdict = Verdict::inconclusive;
  return rep;
}

CertificateReport engine_32_case1() {
  CertificateReport rep;
  rep.name = "threetwo-case1 (angles 2alpha, beta, beta + alpha; sin(alpha/2) irrational)";
  PPoly one_s2 = S("1 - s^2"), two_s2 = S("2 - s^2"), s = S("s");
  rep.check("singamma at alpha = 2pi/9", "holds", singamma_at(2, 9));
  rep.check("singamma at alpha = 2pi/7", "holds", singamma_at(2, 7));

  PPoly row3 = S("h*s") + C(V("l")) * one_s2 + S("r");
  PPoly F = s * two_s2 * row3 - (S("p*s") + C(V("d")) * one_s2 + S("e"));
  rep.check("F (rows 1 and 3)", S("ls^5 - hs^4 - (3l + r)s^3 + (d+2h)s^2 + (2l + 2r - p)s - (e+d)").str("s"),
            F.str("s"));
  PPoly H = row3 * one_s2 - (S("g*s") + C(V("m")) * one_s2 + S("f"));
  rep.check("H (rows 2 and 3)", S("ls^4 - hs^3 + (m-2l-r)s^2 + (h-g)s + l + r - m - f").str("s"), H.str("s"));
  // lc F = lc H = l, so one division step with quotient s
  PPoly K = -(F - s * H);
  rep.check("K = -(F mod H)", S("(l + m)s^3 - (d+g+h)s^2 - (f+m+l+r-p)s + (d+e)").str("s"), K.str("s"));
  rep.equations.push_back("K(s) = " + K.str("s"));
  rep.step("PQlinearind", "a, b, c independent over Q: a relation n s + j(1 - s^2) + k = 0 with the area equation "
                          "makes s rational");
  rep.step("siscubic", "K is not identically zero (e != 0), so s has degree 3");
  rep.step("notghzero", "g = h = 0 makes s^2 quadratic or lambda quadratic; both contradict degree 3");

  // characteristic equation, top row multiplied by t·λ with λt = N/λ
  M3 cm{{{V("p") * V("L") - V("N"), V("d") * V("L"), V("e") * V("L")},
         {V("g"), V("m") - V("L"), V("f")},
         {V("h"), V("l"), V("r") - V("L")}}};
  ParamPoly chr = det3(cm);
  PPoly cubic1;
  {
    std::vector<ParamPoly> c(4);
    for (unsigned k = 0; k <= 3; ++k) c[k] = chr.coeff("L", k);
    cubic1 = PPoly(c);
  }
  ParamPoly Delta = dmatrix_det();
  PPoly cubic1_printed = subs_coeffs(L("pL^3 + (-p(m+r) + eh + dg - N)L^2 + (D + N(m+r))L - N(mr - lf)"), "D", Delta);
  rep.check("cubic1", cubic1_printed.str("L"), cubic1.str("L"));
  rep.equations.push_back("cubic1: " + L("pL^3 + (-p(m+r) + eh + dg - N)L^2 + (D + N(m+r))L - N(mr - lf)").str("L") +
                          " = 0, D = " + Delta.str());

  // b/c = N/λ² − 1 = v/w, cross-multiplied
  PPoly lhs = L("N - L^2") * L("gl - hm + hL");
  PPoly rhs = L("(hf - gr)L^2 + gL^3");
  PPoly cubic2 = rhs - lhs;
  rep.check("cubic2", L("(g+h)L^3 + (gl - hm + hf - gr)L^2 - NhL - N(gl - hm)").str("L"), cubic2.str("L"));
  rep.equations.push_back("cubic2: " + cubic2.str("L") + " = 0");

  // proportional cubics: coefficient ratios equal p/(g+h)
  auto ratio_check = [&](const std::string& label, unsigned k, const std::string& num, const std::string& den,
                         const ParamPoly& scale) {
    ParamPoly n = subs_coeffs(PPoly({PP(num)}), "D", Delta).coeff(0) * scale;
    ParamPoly dd = PP(den) * scale;
    rep.check(label + " numerator", n.str(), cubic1.coeff(k).str());
    rep.check(label + " denominator", dd.str(), cubic2.coeff(k).str());
  };
  ratio_check("(64)", 0, "mr - lf", "gl - hm", -V("N"));
  ratio_check("(66)", 2, "-p(m+r) + eh + dg - N", "gl - hm + hf - gr", 1);
  ratio_check("(67)", 1, "D + N(m+r)", "-Nh", 1);

  rep.check("-Delta", PP("dgr + pfl + hme - pmr - dfh - egl").str(), (-Delta).str());
  rep.check("Delta at h = 0", PP("pmr + egl - gdr - pfl").str(), Delta.subs("h", 0).str());
  rep.step("h != 0", "h = 0 gives N(pl + r^2) < (pl + r^2) lambda^2, i.e. N < lambda^2 = N/t with t > 1");

  // the closing chain
  rep.step("(67)", "N(m + r + hp/(g+h)) <= -Delta <= mhe + rdg + p(lf - mr) - dfh - egl");
  rep.step("bounds", "he < N (ha + lb < Z, ec <= lambda a t) and dg <= N");
  rep.step("sign", "N hp/(g+h) < p(lf - mr) - dfh - egl forces mr - lf < 0, hence gl - hm < 0 by (64)");
  rep.step("lf <= lambda^2", "N hp/(g+h) < p lambda^2 - pmr - dfh - egl");
  {
    // N·hp/(g+h) + N·gp/(g+h) = Np
    ParamPoly lhs2 = V("N") * V("h") * V("p") + V("N") * V("g") * V("p");
    rep.check("adding N pg/(g+h)", (V("N") * V("p") * (V("g") + V("h"))).str(), lhs2.str());
  }
  rep.step("(69)", "N - lambda^2 < N g/(g+h) - mr - dfh/p - egl/p");
  rep.step("h/g", "l/m < h/g and r/f < h/g give Z/Y = c/b < h/g, so h/g > lambda^2/(N - lambda^2)");
  {
    // N/(1 + λ²/(N − λ²)) = N − λ²: cross-multiplied
    ParamPoly A = V("N") * (V("N") - V("L").pow(2));
    ParamPoly B = (V("N") - V("L").pow(2)) * ((V("N") - V("L").pow(2)) + V("L").pow(2));
    rep.check("N/(1 + lambda^2/(N - lambda^2)) = N - lambda^2", A.str(), B.str());
  }
  rep.step("contradiction", "N - lambda^2 < N - lambda^2");
  rep.verdict = Verdict::unsat;
  return rep;
}

}  // namespace tritile
