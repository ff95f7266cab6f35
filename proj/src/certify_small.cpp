// Certificates for the isosceles tiles with angles π/6 and π/5, and for a
// largest angle of 2π/5.
#include <sstream>

#include "tritile/casework.hpp"

namespace tritile {

namespace {

ParamPoly V(const char* name) { return ParamPoly::var(name); }

std::string canon(const std::string& printed, const std::string& var) {
  return parse_unipoly(printed, var).str(var);
}

std::vector<ParamPoly> coefficient_equations(const PPoly& p) {
  std::vector<ParamPoly> r;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) r.push_back(c);
  return r;
}

void absorb(CertificateReport& rep, const Propagation& pr) {
  for (const auto& s : pr.chain) rep.step(s.rule, s.text);
}

// N from a residual equation c·N + rest = 0
ParamPoly solve_for_N(const ParamPoly& e) {
  ParamPoly c = e.coeff("N", 1);
  if (!c.is_constant() || e.degree_in("N") != 1) throw AlgebraError("solve_for_N: not linear in N");
  return -(e - c * V("N")) * ParamPoly(1 / c.constant());
}

bool rational_square(const Rational& q) {
  return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(q.get_den().get_mpz_t());
}

std::string row_str(const std::array<long, 3>& r) {
  std::ostringstream o;
  o << "(" << r[0] << "," << r[1] << "," << r[2] << ")";
  return o.str();
}

}  // namespace

CertificateReport certify_piover6() {
  CertificateReport rep;
  rep.name = "piover6";
  // s = √3 = 2 cos(π/6)
  CycloNum s = Rational(2) * cos_pi(1, 6);
  QPoly ms = minpoly(s);
  rep.check("minimal polynomial of sqrt 3", canon("s^2 - 3", "s"), ms.str("s"));
  rep.step("corners", "no gamma at a corner of ABC, so its angles use six alpha: 1+2+3 (30-60-90) or 2+2+2 (equilateral)");
  rep.step("sides", "a side made only of a edges would need two gamma at one vertex, so e, f, r != 0");

  // equilateral: √N = p + e√3
  PPoly lhs({V("p"), V("e")});
  PPoly eq = poly_rem(lhs * lhs - PPoly({V("N")}), ms);
  auto eqs = coefficient_equations(eq);
  for (const auto& e : eqs) rep.equations.push_back("equilateral: " + e.str() + " = 0");
  ZeroFactBase f;
  f.nonzero = {"N", "e"};
  auto pr = propagate_nonneg(eqs, f);
  absorb(rep, pr);
  bool p_zero = pr.facts.zero.count("p") > 0;
  rep.check("equilateral forces p = 0", "p = 0", p_zero ? "p = 0" : "p undetermined");
  std::string fam;
  if (p_zero && pr.residual.size() == 1) {
    ParamPoly n = solve_for_N(pr.residual[0]);
    fam = "N = " + n.str();
    rep.check("equilateral residual", "N = 3*e^2", fam);
  }
  rep.step("family", "each side is m c-edges with c = sqrt 3, so N = 3m^2");
  // the generators realize the family with every side made of c edges
  for (long m = 1; m <= 3; ++m) {
    auto r = verify_tiling(gen_3m2(m));
    std::string got = r.pass ? "N=" + std::to_string(r.N) : "verify failed";
    for (int i = 0; i < 3; ++i) got += " " + row_str(r.dmatrix.row(i));
    std::string want = "N=" + std::to_string(3 * m * m);
    for (int i = 0; i < 3; ++i) want += " (0,0," + std::to_string(m) + ")";
    rep.check("threem2 m=" + std::to_string(m) + " d-matrix", want, got);
  }
  {
    auto r = verify_tiling(gen_27());
    std::string got = r.pass ? "N=" + std::to_string(r.N) : "verify failed";
    for (int i = 0; i < 3; ++i) got += " " + row_str(r.dmatrix.row(i));
    rep.check("twentyseven d-matrix", "N=27 (0,0,3) (0,0,3) (0,0,3)", got);
  }

  // 30-60-90: sides √(N/2)·(1, √3, 2)
  PPoly row1 = poly_rem(lhs * lhs - PPoly({V("N") * ParamPoly(frac(1, 2))}), ms);
  PPoly row2l({V("g"), V("f")});
  PPoly row2 = poly_rem(row2l * row2l - PPoly({V("N") * ParamPoly(frac(3, 2))}), ms);
  std::vector<ParamPoly> rt = coefficient_equations(row1);
  for (const auto& e : coefficient_equations(row2)) rt.push_back(e);
  for (const auto& e : rt) rep.equations.push_back("30-60-90: " + e.str() + " = 0");
  ZeroFactBase f2;
  f2.nonzero = {"N", "e", "f"};
  auto pr2 = propagate_nonneg(rt, f2);
  absorb(rep, pr2);
  bool pg = pr2.facts.zero.count("p") && pr2.facts.zero.count("g");
  rep.check("30-60-90 forces p = g = 0", "p = g = 0", pg ? "p = g = 0" : "not forced");
  bool unsat = pr2.contradiction;
  if (pg && pr2.residual.size() == 2) {
    ParamPoly n1 = solve_for_N(pr2.residual[0]), n2 = solve_for_N(pr2.residual[1]);
    rep.step("residual", "N = " + n1.str() + " and N = " + n2.str());
    // n1 − n2 = u·f² − v·e² up to order
    ParamPoly d = n1 - n2;
    Rational cf = d.coeff("f", 2).constant(), ce = d.coeff("e", 2).constant();
    Rational ratio = -ce / cf;  // f² = ratio·e²
    std::string rel = "f^2 = " + to_string(ratio) + "*e^2";
    rep.check("30-60-90 relation", "f^2 = 6*e^2", rel, true);
    bool sq = rational_square(ratio);
    rep.step("valuation", rel + (sq ? " has positive solutions" : ": " + to_string(ratio) +
                                                                     " is not a rational square, so e = 0, contradicting e != 0"));
    unsat = !sq;
  }
  rep.notes.push_back("30-60-90: the second row squares to g^2 + 3f^2 = 3N/2 (printed as 3N), so N = 2f^2 and "
                      "f^2 = 3e^2; the conclusion is unchanged since sqrt 3 is irrational");
  rep.facts.push_back("equilateral: family N = 3m^2");
  rep.facts.push_back(std::string("30-60-90: ") + (unsat ? "unsat" : "open"));
  rep.verdict = unsat && p_zero ? Verdict::family : Verdict::inconclusive;
  rep.family = "equilateral ABC with N = 3m^2; 30-60-90 unsat";
  return rep;
}

CertificateReport certify_piover5() {
  CertificateReport rep;
  rep.name = "piover5";
  CycloNum a = sin_pi(1, 5);
  FieldRef F = a.field();
  QPoly mp = minpoly(a);
  rep.check("minimal polynomial of a = sin(pi/5)", canon("16a^4 - 20a^2 + 5", "a"),
            (Rational(16) * to_param(mp)).str("a"));
  auto powers = [&](const CycloNum& y) { return QPoly(express_in_powers(y, a)).str("a"); };
  rep.check("a^4 reduced", canon("20a^2 - 5", "a"), powers(a.pow(4)), true);
  rep.check("b = cos(alpha)", canon("3/2 - 2a^2", "a"), powers(cos_pi(1, 5, F)));
  rep.check("sin(2 alpha)", canon("3a - 4a^3", "a"), powers(sin_pi(2, 5, F)));
  CycloNum t = sin_pi(3, 5, F) / a;
  QPoly tq(express_in_powers(t, a));
  rep.check("sin(3 alpha)/sin(alpha)", canon("3 - 4a", "a"), tq.str("a"), true);
  rep.notes.push_back("the minimal polynomial gives 16a^4 = 20a^2 - 5 (printed without the 16)");
  rep.notes.push_back("sin 3alpha / sin alpha = 3 - 4a^2 (printed as 3 - 4a); the squared equation below uses the "
                      "corrected value");

  // g + f·t = √(N t), squared and reduced mod the minimal polynomial
  PPoly T = to_param(tq);
  PPoly lhs = PPoly({V("g")}) + PPoly({V("f")}) * T;
  PPoly eq = poly_rem(lhs * lhs - PPoly({V("N")}) * T, mp);
  auto eqs = coefficient_equations(eq);
  rep.equations.push_back("(g + f*t)^2 - N*t = " + eq.str("a"));
  for (const auto& e : eqs) rep.equations.push_back(e.str() + " = 0");
  ZeroFactBase f;
  f.nonzero = {"N"};
  auto pr = propagate_nonneg(eqs, f);
  absorb(rep, pr);
  rep.verdict = pr.contradiction ? Verdict::unsat : Verdict::inconclusive;
  return rep;
}

CertificateReport certify_twopifive() {
  CertificateReport rep;
  rep.name = "twopifive";
  // γ = 2π/5 ⇔ α + β − 3π/5 = 0
  AngleForm rel{1, 1, frac(-3, 5)};
  rep.equations.push_back(rel.str());
  rep.step("R <= 2", "3gamma = 6pi/5 > pi");
  rep.step("R = 2", "P alpha + Q beta = pi/5 and beta > 3pi/10 force Q = 0; beta < gamma gives 3P - 1 < 2P, P < 1");
  rep.step("R = 1", "Q <= 1; alpha = (3pi/5)(1-Q)/(P-Q) > 0 forces Q = 0; beta < gamma gives 3(P-1) < 2P, P < 3");
  rep.step("R = 0, P = Q", "alpha + beta = pi/P = 3pi/5 gives P = 5/3");
  rep.step("R = 0, Q > 1", "Q > P and beta < gamma give 3Q < P");
  rep.step("R = 0, Q = 0", "beta = 3pi/5 > gamma");
  rep.step("R = 0, Q = 1", "beta < gamma gives 3P - 5 < 2(P - 1), P < 3");
  // the inequalities above, checked exactly against the Cramer solutions for
  // every small (P, Q, R)
  SplitBounds b{60, 60, 2};
  auto recs = enumerate_splits({rel}, b);
  rep.check("ordered splittings with P, Q <= 60, R <= 2", "0", std::to_string(recs.size()));
  for (const auto& r : recs) rep.facts.push_back(r.str());
  rep.verdict = recs.empty() ? Verdict::unsat : Verdict::inconclusive;
  return rep;
}

}  // namespace tritile
