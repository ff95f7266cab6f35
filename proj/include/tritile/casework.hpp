// Executable certificates for the nonexistence lemmas: vertex splittings,
// field identities, nonnegativity propagation, polynomial endgames and the
// bounded Diophantine search for the 3α + 2β = π family.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tritile/exactalg.hpp"
#include "tritile/tiling.hpp"

namespace tritile {

// ---------------------------------------------------------------------------
// Angle bookkeeping.

// cα·α + cβ·β + cπ·π, with γ eliminated through γ = π − α − β
struct AngleForm {
  Rational ca, cb, cpi;
  // n·α + m·β + l·γ − k·π
  static AngleForm counts(long n, long m, long l, long k);
  bool operator==(const AngleForm& o) const { return ca == o.ca && cb == o.cb && cpi == o.cpi; }
  std::string str() const;
};

struct SplitRecord {
  long P = 0, Q = 0, R = 0;
  // α/π, β/π, γ/π when the system determines them
  std::optional<Rational> alpha, beta, gamma;
  std::string info;
  std::string str() const;
};

struct SplitBounds {
  long pmax = 30;
  long qmax = 30;
  long rmax = 1;
};

// Relations are forms that vanish; the corner relation Pα + Qβ + Rγ = π is
// added per (P, Q, R). Keeps R ≤ rmax, P + Q + R ≥ 5, uniquely solvable
// systems with 0 < α < β < γ (a non-isosceles tile).
std::vector<SplitRecord> enumerate_splits(const std::vector<AngleForm>& relations,
                                          const SplitBounds& bounds = {});

// ---------------------------------------------------------------------------
// Certificates.

struct Step {
  std::string rule;
  std::string text;
};

struct Check {
  std::string label;
  std::string expected;  // printed form from the source argument, canonicalized
  std::string computed;
  bool pass = false;
  bool known_defect = false;  // mismatch explained by an error in the printed form
};

enum class Verdict { unsat, family, inconclusive };
std::string to_string(Verdict v);

struct CertificateReport {
  std::string name;
  std::vector<std::string> equations;
  std::vector<Check> checks;
  std::vector<Step> steps;
  std::vector<std::string> facts;
  Verdict verdict = Verdict::inconclusive;
  std::string family;
  std::vector<std::string> notes;

  // every check passes or is a documented defect
  bool checks_ok() const;
  // every check passes outright
  bool checks_exact() const;
  void check(const std::string& label, const std::string& expected, const std::string& computed,
             bool known_defect_if_mismatch = false);
  void step(const std::string& rule, const std::string& text) { steps.push_back({rule, text}); }
  std::string str() const;
};

// ---------------------------------------------------------------------------
// Nonnegativity propagation over named nonnegative integer parameters.

struct ZeroFactBase {
  std::set<std::string> zero, nonzero;
  std::set<std::vector<std::string>> zero_products;
  // sets with at least one nonzero member (e.g. the entries of a nonempty side)
  std::vector<std::vector<std::string>> positive_sums;
  bool consistent() const;
  std::string str() const;
};

struct Propagation {
  ZeroFactBase facts;
  bool contradiction = false;
  std::vector<Step> chain;
  std::vector<ParamPoly> residual;  // simplified equations left at the fixpoint
};

Propagation propagate_nonneg(const std::vector<ParamPoly>& equations, ZeroFactBase facts);

// ---------------------------------------------------------------------------
// Area-equation engine: N·abc = U·V·sin θ with U = pa + qb + rc and
// V = ma + nb + lc, for a tile with angles (t0, t1, t2)·π/n.

struct AreaSystem {
  std::vector<ParamPoly> equations;  // coordinates in Q(ζ_M)
  ZeroFactBase facts;
};
AreaSystem area_system(long n, const std::array<long, 3>& tile, long theta, bool apex_equal);

struct ShapeResult {
  std::array<long, 3> shape;
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  std::vector<Step> chain;
};
// decides one shape (multiples of π/n) by the area equation at each of its angles
ShapeResult decide_shape(long n, const std::array<long, 3>& tile, std::array<long, 3> shape);

// ---------------------------------------------------------------------------
// Certifiers.

CertificateReport certify_piover6();
CertificateReport certify_piover5();
CertificateReport certify_twopifive();
// angles of ABC as multiples of π/11; decide_exceptional runs the engine on
// (2, 4, 5) instead of reporting it inconclusive
CertificateReport certify_pi11(std::array<long, 3> angles, bool decide_exceptional = false);
CertificateReport certify_pi11_all(bool decide_exceptional = false);
// angle C as a multiple of π/14: 9 (γ) or 10 (γ + α)
CertificateReport certify_pi14(long angle_c);
CertificateReport certify_pi14_all();

struct Shape32 {
  std::string description;  // angles in terms of α, β
  std::array<std::array<long, 2>, 3> angles;  // (cα, cβ) per corner
};
std::vector<Shape32> engine_32_shapes();
CertificateReport engine_32_case2();
CertificateReport engine_32_case1();

struct Solution32 {
  long N, p, d, e, g, m, f, h, l, r;
  std::string str() const;
};
struct SearchReport {
  long nmax = 0;
  std::vector<long> nodes;  // nodes[N−1]: candidate tuples reaching the cubic test
  std::vector<Solution32> solutions;
  double wall_seconds = 0;  // not part of str()
  std::string str() const;
};
SearchReport search_32(long nmax, int workers);
// c3 λ³ + c2 λ² + c1 λ + c0 has a root λ > 0 with lo < λ² < hi (exact)
bool cubic_root_in(const Rational& c3, const Rational& c2, const Rational& c1, const Rational& c0, const Rational& lo,
                   const Rational& hi);

// ---------------------------------------------------------------------------
// Split tables and the ℓ eliminations.

struct CaseRow {
  std::string R, P, Q, alpha, beta, gamma, info;
};
struct CaseTable {
  std::vector<CaseRow> rows;
  std::string str() const;
};
CaseTable table_ell3();
CertificateReport eliminate_ell(long ell, long pmax = 30);

struct AnglePair {
  Rational alpha, beta;  // over π
};
std::vector<AnglePair> lemma46_scan(long nmax);

// ---------------------------------------------------------------------------
// Classification.

struct Family {
  std::string id;
  std::string description;
  std::vector<std::string> witnesses;  // generator invocations
  bool constructive = false;
};
std::vector<Family> classify(long N);
// builds a witness tiling from a string returned by classify
Tiling build_witness(const std::string& witness);

}  // namespace tritile
