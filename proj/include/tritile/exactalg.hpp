// Exact arithmetic: rationals, univariate polynomials, parameter polynomials,
// cyclotomic fields and the trigonometric values that live in them.
#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tritile {

using Integer = mpz_class;
using Rational = mpq_class;

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string to_string(const Rational& q);
// canonicalized a/b
inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}
Rational parse_rational(const std::string& s);

long totient(long n);
long gcd_l(long a, long b);
long lcm_l(long a, long b);

// ---------------------------------------------------------------------------
// ParamPoly: polynomial with rational coefficients in named parameters.

class ParamPoly {
 public:
  // (name, exponent) sorted by name, exponents > 0
  using Monomial = std::vector<std::pair<std::string, unsigned>>;
  struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const;
  };
  using Terms = std::map<Monomial, Rational, GrlexDesc>;

  ParamPoly() = default;
  ParamPoly(long c);  // NOLINT: implicit constants are convenient
  ParamPoly(const Rational& c);  // NOLINT
  static ParamPoly var(const std::string& name, unsigned e = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant() const;  // coefficient of the empty monomial
  std::vector<std::string> variables() const;
  unsigned degree_in(const std::string& v) const;
  unsigned total_degree() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  ParamPoly pow(unsigned e) const;
  // coefficient of v^k, as a polynomial in the remaining variables
  ParamPoly coeff(const std::string& v, unsigned k) const;
  ParamPoly subs(const std::string& v, const ParamPoly& by) const;
  Rational eval(const std::map<std::string, Rational>& at) const;  // missing vars → error
  // exact quotient by a nonzero polynomial; throws if not divisible
  ParamPoly exact_div(const ParamPoly& d) const;
  // true when every coefficient has the same strict sign s (±1)
  int uniform_sign() const;

  std::string str() const;

  void add_term(const Monomial& mono, const Rational& c);

 private:
  Terms terms_;
};

std::string to_string(const ParamPoly& p);
bool needs_parens(const ParamPoly& p);
bool needs_parens(const Rational& q);
// "2*x*y" style; implicit multiplication ("2xy", "q(l+r)") and '^' accepted.
ParamPoly parse_param(const std::string& text);

// ---------------------------------------------------------------------------
// UniPoly<T>: coefficients lowest degree first, leading coefficient nonzero.

namespace detail {
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }
}  // namespace detail

template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  static UniPoly monomial(const T& a, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = a;
    return UniPoly(std::move(c));
  }
  static UniPoly x() { return monomial(T(1), 1); }

  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  T lead() const { return c_.empty() ? T(0) : c_.back(); }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const T& s, const UniPoly& a) {
    std::vector<T> c = a.c_;
    for (auto& v : c) v = s * v;
    return UniPoly(std::move(c));
  }
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly pow(unsigned e) const {
    UniPoly r = monomial(T(1), 0), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  // Horner evaluation into any ring S accepting T*S and S+S.
  template <class S>
  S eval(const S& at, const S& zero) const {
    S acc = zero;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + S(*it);
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> c(c_.size() - 1, T(0));
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = T(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(c));
  }

  // canonical display: descending powers, explicit signs, '^' exponents
  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && detail::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <>
std::string UniPoly<Rational>::str(const std::string& var) const;
template <>
std::string UniPoly<ParamPoly>::str(const std::string& var) const;

using QPoly = UniPoly<Rational>;
using PPoly = UniPoly<ParamPoly>;

template <class T>
struct DivRem {
  UniPoly<T> quot, rem;
};

DivRem<Rational> divrem(const QPoly& f, const QPoly& g);
// f mod g where g has rational coefficients; quotient returned for checking
DivRem<ParamPoly> divrem(const PPoly& f, const QPoly& g);
PPoly poly_rem(const PPoly& f, const QPoly& g);
// pseudo-remainder lc(g)^(deg f − deg g + 1)·f mod g over ParamPoly
PPoly prem(const PPoly& f, const PPoly& g);
// remainder when lc(g) is a nonzero constant
PPoly poly_rem(const PPoly& f, const PPoly& g);

PPoly to_param(const QPoly& p);
QPoly monic(const QPoly& p);
// polynomial in the main variable with ParamPoly coefficients
PPoly parse_unipoly(const std::string& text, const std::string& var);
QPoly parse_qpoly(const std::string& text, const std::string& var = "x");

QPoly cyclotomic_poly(long n);

// ---------------------------------------------------------------------------
// Cyclotomic fields.

class CycloField {
 public:
  static std::shared_ptr<const CycloField> make(long m);
  long order() const { return m_; }
  long degree() const { return phi_; }
  const QPoly& modulus() const { return modulus_; }
  // ζ^k in the power basis, 0 ≤ k < m
  const std::vector<Rational>& power(long k) const { return powers_[k]; }

 private:
  explicit CycloField(long m);
  long m_, phi_;
  QPoly modulus_;
  std::vector<std::vector<Rational>> powers_;
};

using FieldRef = std::shared_ptr<const CycloField>;

class CycloNum {
 public:
  CycloNum() = default;
  CycloNum(FieldRef f, const Rational& c);
  CycloNum(FieldRef f, std::vector<Rational> coords);
  static CycloNum zeta(FieldRef f, long k);  // any integer k

  const FieldRef& field() const { return f_; }
  long order() const { return f_->order(); }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator*(const Rational& s, const CycloNum& a);
  CycloNum inv() const;
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inv(); }
  CycloNum pow(long e) const;
  bool operator==(const CycloNum& o) const;
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  CycloNum conj() const;  // ζ ↦ ζ^{-1}
  bool is_real() const { return conj() == *this; }
  // image in Q(ζ_M) for a multiple M of the order
  CycloNum embed(long M) const;
  CycloNum embed(const FieldRef& big) const;

  double to_double() const;  // real part of the canonical embedding
  std::string str() const;  // "k:n/d,..." serialization

 private:
  FieldRef f_;
  std::vector<Rational> c_;
};

enum class CycloOp { add, sub, mul, inv, pow };
CycloNum cyclo_arith(CycloOp op, const CycloNum& x, const CycloNum& y);
CycloNum cyclo_arith(CycloOp op, const CycloNum& x, long e);

// bring both into Q(ζ_lcm)
std::pair<CycloNum, CycloNum> unify(const CycloNum& x, const CycloNum& y);
CycloNum parse_cyclo(const FieldRef& f, const std::string& text);

long trig_field_order(long n);  // lcm(2n, 4)
CycloNum sin_pi(long k, long n);
CycloNum cos_pi(long k, long n);
CycloNum sin_pi(long k, long n, const FieldRef& f);  // embedded into f
CycloNum cos_pi(long k, long n, const FieldRef& f);

CycloNum automorphism(long k, const CycloNum& x);
QPoly minpoly(const CycloNum& x);
// coordinates of y in the basis 1, x, x², …, x^{d−1} (d = deg minpoly x);
// throws when y ∉ Q(x)
std::vector<Rational> express_in_powers(const CycloNum& y, const CycloNum& x);
CycloNum eval_at(const QPoly& p, const CycloNum& x);

// exact sign of a real element; precision cap in bits (0 → env/default)
int sign(const CycloNum& x, unsigned cap_bits = 0);
unsigned precision_cap();

}  // namespace tritile
