// Vertex splittings, the ℓ = 3/4/5 eliminations and the Lemma 46 scan.
#include <algorithm>
#include <functional>
#include <sstream>

#include "tritile/casework.hpp"

namespace tritile {

AngleForm AngleForm::counts(long n, long m, long l, long k) {
  return {Rational(n - l), Rational(m - l), Rational(l - k)};
}

std::string AngleForm::str() const {
  ParamPoly p = ParamPoly(ca) * ParamPoly::var("a") + ParamPoly(cb) * ParamPoly::var("b") +
                ParamPoly(cpi) * ParamPoly::var("pi");
  return p.str() + " = 0";
}

std::string SplitRecord::str() const {
  std::ostringstream o;
  o << "P=" << P << " Q=" << Q << " R=" << R;
  if (alpha) o << " alpha=" << to_string(*alpha) << "pi beta=" << to_string(*beta) << "pi gamma=" << to_string(*gamma) << "pi";
  if (!info.empty()) o << " (" << info << ")";
  return o.str();
}

namespace {

enum class Solve { unique, none, family };

// forms: ca·α + cb·β + cpi·π = 0, unknowns α/π, β/π
Solve solve2(const std::vector<AngleForm>& forms, Rational& a, Rational& b) {
  std::vector<std::array<Rational, 3>> M;
  for (const auto& f : forms) M.push_back({f.ca, f.cb, -f.cpi});
  std::size_t r = 0;
  std::array<int, 2> pivcol{-1, -1};
  for (int c = 0; c < 2 && r < M.size(); ++c) {
    std::size_t piv = r;
    while (piv < M.size() && sgn(M[piv][c]) == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[r], M[piv]);
    Rational inv = 1 / M[r][c];
    for (auto& x : M[r]) x *= inv;
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || sgn(M[i][c]) == 0) continue;
      Rational f = M[i][c];
      for (int j = 0; j < 3; ++j) M[i][j] -= f * M[r][j];
    }
    pivcol[r] = c;
    ++r;
  }
  for (std::size_t i = r; i < M.size(); ++i)
    if (sgn(M[i][2]) != 0) return Solve::none;
  if (r < 2) return Solve::family;
  a = M[0][2];
  b = M[1][2];
  return Solve::unique;
}

bool ordered(const Rational& a, const Rational& b) {
  Rational g = 1 - a - b;
  return sgn(a) > 0 && a < b && b < g;
}

}  // namespace

std::vector<SplitRecord> enumerate_splits(const std::vector<AngleForm>& relations, const SplitBounds& bounds) {
  std::vector<SplitRecord> out;
  for (long R = 0; R <= bounds.rmax; ++R)
    for (long P = 0; P <= bounds.pmax; ++P)
      for (long Q = 0; Q <= bounds.qmax; ++Q) {
        if (P + Q + R < 5) continue;
        auto forms = relations;
        forms.push_back(AngleForm::counts(P, Q, R, 1));
        Rational a, b;
        Solve s = solve2(forms, a, b);
        if (s == Solve::none) continue;
        SplitRecord rec{P, Q, R, std::nullopt, std::nullopt, std::nullopt, ""};
        if (s == Solve::family) {
          rec.info = "one-parameter family";
          out.push_back(rec);
          continue;
        }
        if (!ordered(a, b)) continue;
        rec.alpha = a;
        rec.beta = b;
        rec.gamma = 1 - a - b;
        out.push_back(rec);
      }
  return out;
}

// ---------------------------------------------------------------------------
// Vertex types and census.

namespace {

struct VType {
  long n, m, l, k;
};

std::vector<VType> vertex_types(const Rational& a, const Rational& b, const Rational& g) {
  std::vector<VType> out;
  for (long k = 1; k <= 2; ++k)
    for (long l = 0; l * g <= k; ++l)
      for (long m = 0; l * g + m * b <= k; ++m) {
        Rational rest = k - l * g - m * b;
        Rational n = rest / a;
        if (n.get_den() != 1) continue;
        long nn = n.get_num().get_si();
        if (nn + m + l == 0) continue;
        out.push_back({nn, m, l, k});
      }
  return out;
}

std::string vt_str(const VType& t) {
  std::ostringstream o;
  o << "(n=" << t.n << ", m=" << t.m << ", l=" << t.l << ", k=" << t.k << ")";
  return o.str();
}

// Is w a nonnegative combination of the vectors? Exact, 2D.
bool in_cone(const std::vector<std::array<Rational, 2>>& vs, const std::array<Rational, 2>& w) {
  if (sgn(w[0]) == 0 && sgn(w[1]) == 0) return true;
  for (const auto& v : vs) {
    // v = t·w with t > 0
    Rational cross = v[0] * w[1] - v[1] * w[0];
    Rational dot = v[0] * w[0] + v[1] * w[1];
    if (sgn(cross) == 0 && sgn(dot) > 0) return true;
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Rational det = vs[i][0] * vs[j][1] - vs[i][1] * vs[j][0];
      if (sgn(det) == 0) continue;
      Rational x = (w[0] * vs[j][1] - w[1] * vs[j][0]) / det;
      Rational y = (vs[i][0] * w[1] - vs[i][1] * w[0]) / det;
      if (sgn(x) >= 0 && sgn(y) >= 0) return true;
    }
  return false;
}

// Σ over non-corner vertices of (n − m, m − l) equals (Q − P, R − Q); the
// vertex V with l γ-angles is one of them.
bool census_feasible(const std::vector<VType>& types, long P, long Q, long R, const VType& v) {
  std::vector<std::array<Rational, 2>> vs;
  for (const auto& t : types) vs.push_back({Rational(t.n - t.m), Rational(t.m - t.l)});
  std::array<Rational, 2> w{Rational(Q - P - (v.n - v.m)), Rational(R - Q - (v.m - v.l))};
  return in_cone(vs, w);
}

bool same(const Rational& x, long num, long den) { return x == frac(num, den); }

// tiles ruled out before the ℓ analysis, or handled by the special lemmas
std::string excluded(const Rational& a, const Rational& b, const Rational& g) {
  if (same(g, 1, 2)) return "right tile";
  if (same(g, 2, 3)) return "gamma = 2pi/3";
  if (same(g, 2, 5)) return "gamma = 2pi/5 (Lemma twopioverfive)";
  if (same(a, 1, 14) && same(b, 4, 14)) return "pi/14 tile (special-14 lemma)";
  if (same(a, 1, 11) && same(b, 3, 11)) return "pi/11 tile (special-11 lemma)";
  return "";
}

struct CaseTally {
  long live = 0, by_paper = 0, by_census = 0, deferred = 0;
  std::vector<std::string> gaps, deferrals;
  std::map<std::string, std::string> census_only;  // subcase -> "(P,Q) ..."
};

}  // namespace

// ---------------------------------------------------------------------------

std::string CaseTable::str() const {
  std::ostringstream o;
  o << "R | P | Q | alpha/pi | beta/pi | gamma/pi | info\n";
  for (const auto& r : rows)
    o << r.R << " | " << r.P << " | " << r.Q << " | " << r.alpha << " | " << r.beta << " | " << r.gamma << " | "
      << r.info << "\n";
  return o.str();
}

CaseTable table_ell3() {
  CaseTable t;
  t.rows = {
      {"1", "", "0", "1/(3P-2)", "(P-1)/(3P-2)", "(2P-2)/(3P-2)", "gamma = 2beta"},
      {"0", "", "Q <= 2", "(3-Q)/(3P-Q)", "(P-1)/(3P-Q)", "(2P-2)/(3P-Q)", "gamma = 2beta"},
      {"1", "", "0", "1/(3P-1)", "(P-1)/(3P-1)", "(2P-1)/(3P-1)", "gamma = 2beta + alpha"},
      {"0", "P >= 3", "Q <= 2", "(3-Q)/(3P-2Q)", "(P-2)/(3P-2Q)", "(2P-Q-1)/(3P-2Q)", "gamma = 2beta + alpha"},
      {"0", "P >= 6-Q", "0 or 1", "(2-Q)/(2P-3Q)", "(P-3)/(2P-3Q)", "(P-2Q+1)/(2P-3Q)", "gamma = 2alpha + beta"},
  };
  return t;
}

namespace {

// the closed forms of the ℓ = 3 table, by (n, m, R)
struct RowFormula {
  long n, m, R, row;
  std::function<std::array<Rational, 3>(long, long)> angles;
};

std::vector<RowFormula> ell3_formulas() {
  return {
      {2, 0, 1, 1, [](long P, long) { return std::array<Rational, 3>{frac(1, 3 * P - 2), frac(P - 1, 3 * P - 2), frac(2 * P - 2, 3 * P - 2)}; }},
      {2, 0, 0, 2, [](long P, long Q) { return std::array<Rational, 3>{frac(3 - Q, 3 * P - Q), frac(P - 1, 3 * P - Q), frac(2 * P - 2, 3 * P - Q)}; }},
      {1, 0, 1, 3, [](long P, long) { return std::array<Rational, 3>{frac(1, 3 * P - 1), frac(P - 1, 3 * P - 1), frac(2 * P - 1, 3 * P - 1)}; }},
      {1, 0, 0, 4, [](long P, long Q) { return std::array<Rational, 3>{frac(3 - Q, 3 * P - 2 * Q), frac(P - 2, 3 * P - 2 * Q), frac(2 * P - Q - 1, 3 * P - 2 * Q)}; }},
      {0, 1, 0, 5, [](long P, long Q) { return std::array<Rational, 3>{frac(2 - Q, 2 * P - 3 * Q), frac(P - 3, 2 * P - 3 * Q), frac(P - 2 * Q + 1, 2 * P - 3 * Q)}; }},
  };
}

// the counting inequality the source argument uses for each ℓ = 3 row;
// returns the vertex types violating it
std::vector<VType> paper_violations(long row, const std::vector<VType>& types) {
  std::vector<VType> bad;
  for (const auto& t : types) {
    bool ok = true;
    if (row >= 1 && row <= 3) ok = 3 * t.n >= 2 * t.l + t.m;
    if (row == 4) ok = 3 * t.n >= 2 * t.m + t.l;
    if (row == 5) ok = t.l >= 2 ? t.m - t.n <= 1 : t.n - t.m >= 1;
    if (!ok) bad.push_back(t);
  }
  return bad;
}

// global contradiction from the summed inequality
bool paper_global(long row, long P, long Q, long R) {
  if (row >= 1 && row <= 3) return 3 * P > Q + 2 * R;
  if (row == 4) return 3 * P > 2 * Q;
  if (row == 5) {
    // Σ(n − m) over non-corner vertices ≥ 0 while it must equal Q − P < 0
    return P > Q;
  }
  return false;
}

}  // namespace

CertificateReport eliminate_ell(long ell, long pmax) {
  if (ell < 3 || ell > 5) throw AlgebraError("eliminate_ell: l must be 3, 4 or 5");
  if (pmax < 6) throw AlgebraError("eliminate_ell: Pmax must be at least 6");
  CertificateReport rep;
  rep.name = "ell" + std::to_string(ell) + " Pmax=" + std::to_string(pmax);
  SplitBounds bounds{pmax, pmax, 1};
  CaseTally tally;
  auto formulas = ell3_formulas();

  for (long n = 0; n + 0 < ell; ++n)
    for (long m = 0; n + m < ell; ++m) {
      VType v{n, m, ell, 2};
      AngleForm rel = AngleForm::counts(n, m, ell, 2);
      std::string sub = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      // the angles forced by the vertex alone
      Rational a, b;
      if (n + m == 0) {
        rep.step(sub, std::to_string(ell) + " gamma = 2pi gives gamma = " + to_string(frac(2, ell)) +
                          "pi, ruled out earlier");
        continue;
      }
      auto recs = enumerate_splits({rel}, bounds);
      long live = 0;
      std::map<std::string, long> by_reason;
      for (const auto& rec : recs) {
        std::string key = sub + " R=" + std::to_string(rec.R);
        if (!rec.alpha) {
          // the splitting relation coincides with the vertex relation
          ++tally.deferred;
          tally.deferrals.push_back(key + " P=" + std::to_string(rec.P) + " Q=" + std::to_string(rec.Q) +
                                    ": angles undetermined, 3alpha + 2beta = pi family (case iii)");
          continue;
        }
        ++live;
        ++tally.live;
        std::string ex = excluded(*rec.alpha, *rec.beta, *rec.gamma);
        if (!ex.empty()) {
          ++tally.deferred;
          tally.deferrals.push_back(key + " " + rec.str() + ": " + ex);
          continue;
        }
        auto types = vertex_types(*rec.alpha, *rec.beta, *rec.gamma);
        bool census_closed = !census_feasible(types, rec.P, rec.Q, rec.R, v);
        bool paper_closed = false;
        long row = 0;
        if (ell == 3)
          for (const auto& f : formulas)
            if (f.n == n && f.m == m && f.R == rec.R) {
              row = f.row;
              auto exp = f.angles(rec.P, rec.Q);
              if (exp[0] != *rec.alpha || exp[1] != *rec.beta || exp[2] != *rec.gamma)
                tally.gaps.push_back(key + " " + rec.str() + ": table formula disagrees");
              paper_closed = paper_violations(row, types).empty() && paper_global(row, rec.P, rec.Q, rec.R);
            }
        if (paper_closed) ++tally.by_paper;
        if (census_closed) ++tally.by_census;
        if (!paper_closed && census_closed)
        {
          auto& list = tally.census_only[key + (row ? "" : ", no table row")];
          list += (list.empty() ? "" : " ") + ("(" + std::to_string(rec.P) + "," + std::to_string(rec.Q) + ")");
        }
        if (!paper_closed && !census_closed) {
          std::string why;
          if (row) {
            auto bad = paper_violations(row, types);
            for (const auto& t : bad) why += (why.empty() ? "" : ", ") + vt_str(t);
            why = "row " + std::to_string(row) + " inequality fails at " + why;
          } else {
            why = "no table row covers this splitting";
          }
          tally.gaps.push_back(key + " " + rec.str() + ": " + why + "; the census is feasible");
        }
      }
      rep.step(sub, rel.str() + ": " + std::to_string(live) + " ordered splittings with P, Q <= " +
                        std::to_string(pmax));
    }

  // the source's chains, replayed as exact statements
  if (ell == 3) {
    rep.step("n=1 m=1", "2pi = 3gamma + alpha + beta gives gamma = pi/2, ruled out");
    rep.step("rows 1-3", "3n_i >= 2l_i + m_i at every vertex sums to 3(N - P) >= 3N - Q - 2R, i.e. 3P <= Q + 2R <= 2");
    rep.step("row 4", "2m_i + l_i <= 3n_i sums to 3N - 2Q <= 3N - 3P, i.e. 3P <= 2Q, but 3P >= 9 > 4 >= 2Q");
    rep.step("row 5", "sum of n_i - m_i over non-corner vertices is >= 0 but equals Q - P < 0");
    auto t = table_ell3();
    rep.equations.push_back("table:\n" + t.str());
    rep.notes.push_back("census typo: P + sum n_i = Q + sum m_i = R + sum l_i = N (printed as ... + sum n_i = N pi)");
    rep.notes.push_back("row 2, k_i = 2, q_i > 6: the printed argument treats Q = 2 only; Q = 0 admits "
                        "(2 - n_i)(3 - Q)/(q_i - 6) = P - 1 with n_i = 0, e.g. P = 7 and the vertex 7beta = 2pi");
    rep.notes.push_back("row 5: the boundary vertex alpha + beta + gamma = pi has n_i - m_i = 0, and further "
                        "boundary types such as alpha + 3beta = pi occur for particular P, Q; the claim n_i - m_i >= 1 "
                        "off the gamma-rich vertices does not hold in general");
    rep.notes.push_back("n=0, m=1, R=1: the table omits alpha = pi/(2P+1), beta = (P-1)pi/(2P+1), gamma = "
                        "(P+1)pi/(2P+1); the printed dismissal reads alpha < beta as 2P+1 < P-1, but it only "
                        "needs P > 2");
  }
  if (ell == 4) {
    rep.step("n=0 m=1 R=1", "beta = (P-1)alpha and 2gamma = (P+1)alpha; beta < gamma gives P < 3, contradicting P + Q >= 5");
    rep.step("n=0 m=1 R=0 Q=0", "alpha = pi/P, beta < gamma gives 3P < 15, P < 5, contradicting P + Q >= 5");
    rep.step("n=0 m=1 R=0 Q=1", "beta = (2P-4)pi/(3P-4) < gamma = (P-1)pi/(3P-4) gives P < 3, contradicting P + Q >= 5");
    rep.check("n=0 m=1 R=0 Q=1: beta < gamma bound", "P < 5", "P < 3", true);
    rep.notes.push_back("l=4, n=0, m=1, Q=1: 2P - 4 < P - 1 gives P < 3 (printed as P < 5); the contradiction stands");
    rep.step("n=2", "(2-m)beta = 2gamma forces beta >= gamma");
    rep.step("n=3", "2beta = 2gamma + 3alpha forces beta > gamma");
    rep.notes.push_back("l=4, n=1, m=0: gamma = (pi + beta)/3 < pi/2 gives beta < pi/2, not beta < pi/6, so alpha > "
                        "pi/3 does not follow; the splittings it leaves are checked by the census below");
  }
  if (ell == 5) {
    rep.step("n=0", "(2-m)beta = 3gamma - 2alpha > gamma forces m = 0, so n + m = 0 and gamma = 2pi/5, ruled out");
    rep.step("n=1", "(2-m)beta > 2gamma: not possible, since m >= 0");
    rep.step("n>=2", "(2-m)beta >= 3gamma: not possible, since m >= 0");
  }

  std::ostringstream s;
  s << tally.live << " live splittings; " << tally.by_paper << " closed by the printed inequality, "
    << tally.by_census << " by the census cone, " << tally.deferred << " deferred to other lemmas";
  rep.step("summary", s.str());
  for (const auto& d : tally.deferrals) rep.step("deferred", d);
  for (const auto& [k, v] : tally.census_only) rep.step("census only", k + ": (P,Q) in " + v);
  for (const auto& g : tally.gaps) rep.step("gap", g);
  rep.check("every splitting closed or deferred", "0 gaps", std::to_string(tally.gaps.size()) + " gaps", true);
  if (ell == 5) rep.check("no ordered splitting for l = 5", "0", std::to_string(tally.live));
  rep.verdict = tally.gaps.empty() ? Verdict::unsat : Verdict::inconclusive;
  if (!tally.gaps.empty())
    rep.notes.push_back("splittings listed as gap are not refuted by the printed argument or by the census cone");
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<AnglePair> lemma46_scan(long nmax) {
  if (nmax < 18) throw AlgebraError("lemma46_scan: nmax must be at least 18");
  std::vector<AnglePair> out;
  std::set<Rational> seen;
  for (long n = 1; n <= nmax; ++n)
    for (long m = 1; 2 * m < n; ++m) {
      if (gcd_l(m, n) != 1) continue;
      Rational alpha = frac(2 * m, n);
      if (!(alpha < frac(1, 3))) continue;  // α < π/3
      if (!seen.insert(alpha).second) continue;
      // e^{iα/2} = e^{2πi·m/(2n)} has order 2n/gcd(m, 2n)
      long order = 2 * n / gcd_l(m, 2 * n);
      long phi = totient(order);
      // irrational sin(α/2): the lemma needs degree 6; rational: degree 2 or 4
      if (phi != 6 && phi != 4 && phi != 2) continue;
      long d = minpoly(sin_pi(m, n)).degree();
      if (phi == 6 || d == 1) out.push_back({alpha, (1 - 3 * alpha) / 2});
    }
  return out;
}

}  // namespace tritile
