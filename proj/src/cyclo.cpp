#include <cmath>
#include <sstream>

#include "tritile/exactalg.hpp"

namespace tritile {

namespace {

long mod_l(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

void require_same(const CycloNum& a, const CycloNum& b) {
  if (!a.field() || !b.field()) throw AlgebraError("uninitialized cyclotomic number");
  if (a.order() != b.order())
    throw AlgebraError("field mismatch: Q(zeta_" + std::to_string(a.order()) + ") vs Q(zeta_" +
                       std::to_string(b.order()) + ")");
}

// Solve A·y = b over Q; A square and invertible (rows given).
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw AlgebraError("singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = Rational(1) / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

// Incremental echelon basis that remembers how each row was combined.
struct Echelon {
  struct Row {
    std::vector<Rational> v, combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  std::size_t nvec = 0;

  // reduce v (with its combination vector) against the basis
  void reduce(std::vector<Rational>& v, std::vector<Rational>& combo) const {
    for (auto& r : rows) {
      if (sgn(v[r.pivot]) == 0) continue;
      Rational f = v[r.pivot];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(r.v[j]) != 0) v[j] -= f * r.v[j];
      for (std::size_t j = 0; j < r.combo.size(); ++j)
        if (sgn(r.combo[j]) != 0) combo[j] -= f * r.combo[j];
    }
  }
  // adds v as vector #nvec; returns the dependence (combination) if v is dependent
  bool add(std::vector<Rational> v, std::vector<Rational>& dependence) {
    std::vector<Rational> combo(nvec + 1, Rational(0));
    combo[nvec] = 1;
    for (auto& r : rows) r.combo.resize(nvec + 1, Rational(0));
    reduce(v, combo);
    ++nvec;
    std::size_t p = 0;
    while (p < v.size() && sgn(v[p]) == 0) ++p;
    if (p == v.size()) {
      dependence = combo;
      return true;
    }
    Rational inv = Rational(1) / v[p];
    for (auto& a : v) a *= inv;
    for (auto& a : combo) a *= inv;
    rows.push_back({std::move(v), std::move(combo), p});
    return false;
  }
};

}  // namespace

// ---------------------------------------------------------------------------

CycloField::CycloField(long m) : m_(m), phi_(totient(m)), modulus_(cyclotomic_poly(m)) {
  powers_.assign(m, std::vector<Rational>(phi_, Rational(0)));
  std::vector<Rational> cur(phi_, Rational(0));
  cur[0] = 1;
  if (phi_ == 1 && m == 1) {
    powers_[0] = cur;
    return;
  }
  for (long k = 0; k < m; ++k) {
    powers_[k] = cur;
    // multiply by ζ: shift up, fold x^φ = −Σ modulus_j x^j
    Rational top = cur[phi_ - 1];
    for (long j = phi_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (sgn(top) != 0)
      for (long j = 0; j < phi_; ++j) cur[j] -= top * modulus_.coeffs()[j];
  }
}

std::shared_ptr<const CycloField> CycloField::make(long m) {
  if (m < 1) throw AlgebraError("cyclotomic field order must be positive");
  return std::shared_ptr<const CycloField>(new CycloField(m));
}

// ---------------------------------------------------------------------------

CycloNum::CycloNum(FieldRef f, const Rational& c) : f_(std::move(f)), c_(f_->degree(), Rational(0)) {
  c_[0] = c;
}

CycloNum::CycloNum(FieldRef f, std::vector<Rational> coords) : f_(std::move(f)), c_(std::move(coords)) {
  if (static_cast<long>(c_.size()) > f_->degree()) {
    // reduce an over-long vector via the power table
    std::vector<Rational> r(f_->degree(), Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (sgn(c_[k]) == 0) continue;
      const auto& pk = f_->power(static_cast<long>(k) % f_->order());
      for (long j = 0; j < f_->degree(); ++j) r[j] += c_[k] * pk[j];
    }
    c_ = std::move(r);
  }
  c_.resize(f_->degree(), Rational(0));
}

CycloNum CycloNum::zeta(FieldRef f, long k) {
  long m = f->order();
  auto v = f->power(mod_l(k, m));
  return CycloNum(std::move(f), std::move(v));
}

bool CycloNum::is_zero() const {
  for (auto& a : c_)
    if (sgn(a) != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (sgn(c_[j]) != 0) return false;
  return true;
}

Rational CycloNum::rational_value() const {
  if (!is_rational()) throw AlgebraError("not a rational element");
  return c_[0];
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  require_same(*this, o);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  require_same(*this, o);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  require_same(*this, o);
  long m = f_->order(), phi = f_->degree();
  // product mod x^m − 1 first, then fold the high powers
  std::vector<Rational> acc(m, Rational(0));
  for (long i = 0; i < phi; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (long j = 0; j < phi; ++j)
      if (sgn(o.c_[j]) != 0) acc[(i + j) % m] += c_[i] * o.c_[j];
  }
  std::vector<Rational> r(acc.begin(), acc.begin() + phi);
  for (long k = phi; k < m; ++k) {
    if (sgn(acc[k]) == 0) continue;
    const auto& pk = f_->power(k);
    for (long j = 0; j < phi; ++j)
      if (sgn(pk[j]) != 0) r[j] += acc[k] * pk[j];
  }
  c_ = std::move(r);
  return *this;
}

CycloNum operator*(const Rational& s, const CycloNum& a) {
  CycloNum r = a;
  for (auto& v : r.c_) v *= s;
  return r;
}

CycloNum CycloNum::inv() const {
  if (is_zero()) throw AlgebraError("division by zero in cyclotomic field");
  long phi = f_->degree();
  if (is_rational()) return CycloNum(f_, Rational(1) / c_[0]);
  // columns of the multiplication-by-x matrix are x·ζ^j
  std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi));
  CycloNum z = zeta(f_, 0), step = zeta(f_, 1);
  for (long j = 0; j < phi; ++j) {
    CycloNum col = *this * z;
    for (long i = 0; i < phi; ++i) a[i][j] = col.c_[i];
    z *= step;
  }
  std::vector<Rational> e(phi, Rational(0));
  e[0] = 1;
  return CycloNum(f_, solve_linear(std::move(a), std::move(e)));
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycloNum r(f_, Rational(1)), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

bool CycloNum::operator==(const CycloNum& o) const {
  if (order() != o.order()) {
    auto [x, y] = unify(*this, o);
    return x.c_ == y.c_;
  }
  return c_ == o.c_;
}

CycloNum CycloNum::conj() const { return automorphism(-1, *this); }

CycloNum CycloNum::embed(long M) const {
  if (M == order()) return *this;
  return embed(CycloField::make(M));
}

CycloNum CycloNum::embed(const FieldRef& big) const {
  long M = big->order(), m = order();
  if (M == m) return CycloNum(big, c_);
  if (M % m) throw AlgebraError("cannot embed Q(zeta_" + std::to_string(m) + ") into Q(zeta_" +
                                std::to_string(M) + ")");
  long step = M / m;
  std::vector<Rational> r(big->degree(), Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    const auto& pk = big->power(static_cast<long>(j) * step % M);
    for (long i = 0; i < big->degree(); ++i)
      if (sgn(pk[i]) != 0) r[i] += c_[j] * pk[i];
  }
  return CycloNum(big, std::move(r));
}

double CycloNum::to_double() const {
  double s = 0;
  long m = order();
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (sgn(c_[j]) != 0) s += c_[j].get_d() * std::cos(2.0 * M_PI * static_cast<double>(j) / m);
  return s;
}

std::string CycloNum::str() const {
  std::string s;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    if (!s.empty()) s += ',';
    s += std::to_string(j) + ':' + c_[j].get_num().get_str() + '/' + c_[j].get_den().get_str();
  }
  return s.empty() ? "0:0/1" : s;
}

CycloNum parse_cyclo(const FieldRef& f, const std::string& text) {
  std::vector<Rational> c(f->degree(), Rational(0));
  std::stringstream ss(text);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw AlgebraError("expected k:n/d in '" + item + "'");
    long k;
    try {
      std::size_t used = 0;
      k = std::stol(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("k");
    } catch (const std::exception&) {
      throw AlgebraError("bad exponent in '" + item + "'");
    }
    if (k < 0 || k >= f->degree())
      throw AlgebraError("exponent " + std::to_string(k) + " outside the power basis");
    c[k] += parse_rational(item.substr(colon + 1));
    any = true;
  }
  if (!any) throw AlgebraError("empty cyclotomic number");
  return CycloNum(f, std::move(c));
}

std::pair<CycloNum, CycloNum> unify(const CycloNum& x, const CycloNum& y) {
  if (x.order() == y.order()) return {x, y};
  FieldRef big = CycloField::make(lcm_l(x.order(), y.order()));
  return {x.embed(big), y.embed(big)};
}

CycloNum cyclo_arith(CycloOp op, const CycloNum& x, const CycloNum& y) {
  switch (op) {
    case CycloOp::add: return x + y;
    case CycloOp::sub: return x - y;
    case CycloOp::mul: return x * y;
    case CycloOp::inv: return x.inv();
    case CycloOp::pow: throw AlgebraError("pow takes an integer exponent");
  }
  throw AlgebraError("unknown operation");
}

CycloNum cyclo_arith(CycloOp op, const CycloNum& x, long e) {
  if (op == CycloOp::pow) return x.pow(e);
  if (op == CycloOp::inv) return x.inv();
  return cyclo_arith(op, x, CycloNum(x.field(), Rational(e)));
}

// ---------------------------------------------------------------------------

long trig_field_order(long n) { return lcm_l(2 * n, 4); }

CycloNum sin_pi(long k, long n, const FieldRef& f) {
  if (n < 1) throw AlgebraError("sin_pi: n must be positive");
  long M = f->order();
  if (M % trig_field_order(n)) throw AlgebraError("field too small for sin(k*pi/n)");
  long s = M / (2 * n);
  // (w^k − w^{−k}) / (2i) = −(i/2)(w^k − w^{−k})
  CycloNum i = CycloNum::zeta(f, M / 4);
  CycloNum d = CycloNum::zeta(f, k * s) - CycloNum::zeta(f, -k * s);
  return Rational(-1, 2) * (i * d);
}

CycloNum cos_pi(long k, long n, const FieldRef& f) {
  if (n < 1) throw AlgebraError("cos_pi: n must be positive");
  long M = f->order();
  if (M % trig_field_order(n)) throw AlgebraError("field too small for cos(k*pi/n)");
  long s = M / (2 * n);
  return Rational(1, 2) * (CycloNum::zeta(f, k * s) + CycloNum::zeta(f, -k * s));
}

CycloNum sin_pi(long k, long n) { return sin_pi(k, n, CycloField::make(trig_field_order(n))); }
CycloNum cos_pi(long k, long n) { return cos_pi(k, n, CycloField::make(trig_field_order(n))); }

CycloNum automorphism(long k, const CycloNum& x) {
  long m = x.order();
  if (gcd_l(mod_l(k, m), m) != 1) throw AlgebraError("automorphism: gcd(k, m) must be 1");
  const auto& f = x.field();
  std::vector<Rational> r(f->degree(), Rational(0));
  for (std::size_t j = 0; j < x.coords().size(); ++j) {
    const Rational& c = x.coords()[j];
    if (sgn(c) == 0) continue;
    const auto& pk = f->power(mod_l(static_cast<long>(j) * k, m));
    for (long i = 0; i < f->degree(); ++i)
      if (sgn(pk[i]) != 0) r[i] += c * pk[i];
  }
  return CycloNum(f, std::move(r));
}

QPoly minpoly(const CycloNum& x) {
  Echelon ech;
  CycloNum p(x.field(), Rational(1));
  std::vector<Rational> dep;
  for (long k = 0; k <= x.field()->degree(); ++k) {
    if (ech.add(p.coords(), dep)) return monic(QPoly(dep));
    p *= x;
  }
  throw AlgebraError("minpoly: no dependence found (impossible)");
}

std::vector<Rational> express_in_powers(const CycloNum& y, const CycloNum& x) {
  if (y.order() != x.order()) {
    auto [yy, xx] = unify(y, x);
    return express_in_powers(yy, xx);
  }
  Echelon ech;
  CycloNum p(x.field(), Rational(1));
  std::vector<Rational> dep;
  while (!ech.add(p.coords(), dep)) p *= x;
  // the last vector was dependent; drop it so the basis is 1..x^{d−1}
  std::size_t d = ech.nvec - 1;
  for (auto& r : ech.rows) r.combo.resize(d);
  std::vector<Rational> v = y.coords(), combo(d, Rational(0));
  // v − Σ f_r row_r = 0  ⇒  y = Σ f_r Σ combo_rj x^j; track via negated combo
  ech.reduce(v, combo);
  for (auto& a : v)
    if (sgn(a) != 0) throw AlgebraError("element is not in Q(x)");
  for (auto& a : combo) a = -a;
  return combo;
}

CycloNum eval_at(const QPoly& p, const CycloNum& x) {
  CycloNum acc(x.field(), Rational(0));
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + CycloNum(x.field(), p.coeffs()[k]);
  return acc;
}

}  // namespace tritile
