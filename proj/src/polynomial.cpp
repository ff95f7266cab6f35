#include "tritile/exactalg.hpp"

#include <functional>
#include <map>
#include <numeric>

namespace tritile {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw AlgebraError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw AlgebraError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

bool needs_parens(const Rational&) { return false; }

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }

long totient(long n) {
  if (n < 1) throw AlgebraError("totient: n must be positive");
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

// ---------------------------------------------------------------------------

template <>
std::string UniPoly<Rational>::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (sgn(c) == 0) continue;
    if (s.empty()) {
      if (sgn(c) < 0) s += '-';
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    Rational a = abs(c);
    if (k == 0) {
      s += to_string(a);
      continue;
    }
    if (a != 1) s += to_string(a) + '*';
    s += var;
    if (k > 1) s += '^' + std::to_string(k);
  }
  return s;
}

template <>
std::string UniPoly<ParamPoly>::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const ParamPoly& c = c_[k];
    if (c.is_zero()) continue;
    std::string pw = k == 0 ? "" : (k == 1 ? var : var + '^' + std::to_string(k));
    if (c.terms().size() > 1) {
      if (k == 0) {
        std::string body = to_string(c);
        if (s.empty()) {
          s = body;
        } else if (body[0] == '-') {
          s += " - " + body.substr(1);
        } else {
          s += " + " + body;
        }
      } else {
        s += (s.empty() ? "(" : " + (") + to_string(c) + ")*" + pw;
      }
      continue;
    }
    const auto& [mono, coef] = *c.terms().begin();
    if (s.empty()) {
      if (sgn(coef) < 0) s += '-';
    } else {
      s += sgn(coef) < 0 ? " - " : " + ";
    }
    std::string body = to_string(sgn(coef) < 0 ? -c : c);
    if (k == 0) {
      s += body;
    } else if (body == "1") {
      s += pw;
    } else {
      s += body + '*' + pw;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

DivRem<Rational> divrem(const QPoly& f, const QPoly& g) {
  if (g.is_zero()) throw AlgebraError("divrem: zero divisor");
  std::vector<Rational> r = f.coeffs();
  int dg = g.degree();
  std::vector<Rational> q(std::max(0, f.degree() - dg + 1), Rational(0));
  Rational lc = g.lead();
  for (int k = f.degree(); k >= dg; --k) {
    if (sgn(r[k]) == 0) continue;
    Rational t = r[k] / lc;
    q[k - dg] = t;
    for (int j = 0; j <= dg; ++j) r[k - dg + j] -= t * g.coeffs()[j];
  }
  if (static_cast<int>(r.size()) > dg) r.resize(std::max(dg, 0));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

DivRem<ParamPoly> divrem(const PPoly& f, const QPoly& g) {
  if (g.is_zero()) throw AlgebraError("poly_rem: zero divisor");
  std::vector<ParamPoly> r = f.coeffs();
  int dg = g.degree();
  std::vector<ParamPoly> q(std::max(0, f.degree() - dg + 1));
  Rational inv = Rational(1) / g.lead();
  for (int k = f.degree(); k >= dg; --k) {
    if (r[k].is_zero()) continue;
    ParamPoly t = r[k] * ParamPoly(inv);
    q[k - dg] = t;
    for (int j = 0; j <= dg; ++j)
      if (sgn(g.coeffs()[j]) != 0) r[k - dg + j] -= t * ParamPoly(g.coeffs()[j]);
  }
  if (static_cast<int>(r.size()) > dg) r.resize(std::max(dg, 0));
  return {PPoly(std::move(q)), PPoly(std::move(r))};
}

PPoly poly_rem(const PPoly& f, const QPoly& g) { return divrem(f, g).rem; }

PPoly poly_rem(const PPoly& f, const PPoly& g) {
  if (g.is_zero()) throw AlgebraError("poly_rem: zero divisor");
  std::vector<ParamPoly> r = f.coeffs();
  int dg = g.degree();
  const ParamPoly& lc = g.lead();
  for (int k = f.degree(); k >= dg; --k) {
    if (r[k].is_zero()) continue;
    ParamPoly t = r[k].exact_div(lc);
    for (int j = 0; j <= dg; ++j) r[k - dg + j] -= t * g.coeffs()[j];
  }
  if (static_cast<int>(r.size()) > dg) r.resize(std::max(dg, 0));
  return PPoly(std::move(r));
}

PPoly prem(const PPoly& f, const PPoly& g) {
  if (g.is_zero()) throw AlgebraError("prem: zero divisor");
  int dg = g.degree();
  if (f.degree() < dg) return f;
  int steps = f.degree() - dg + 1;
  const ParamPoly& lc = g.lead();
  PPoly r = f;
  while (!r.is_zero() && r.degree() >= dg) {
    PPoly t = PPoly::monomial(r.lead(), r.degree() - dg);
    r = lc * r - t * g;
    --steps;
  }
  if (steps > 0) r = lc.pow(steps) * r;
  return r;
}

PPoly to_param(const QPoly& p) {
  std::vector<ParamPoly> c;
  for (auto& a : p.coeffs()) c.emplace_back(a);
  return PPoly(std::move(c));
}

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  Rational lc = p.lead();
  std::vector<Rational> c = p.coeffs();
  for (auto& a : c) a /= lc;
  return QPoly(std::move(c));
}

QPoly cyclotomic_poly(long n) {
  if (n < 1) throw AlgebraError("cyclotomic_poly: n must be positive");
  std::map<long, QPoly> memo;
  std::function<QPoly(long)> phi = [&](long k) -> QPoly {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    QPoly num = QPoly::monomial(Rational(1), k) - QPoly::monomial(Rational(1), 0);
    for (long d = 1; d < k; ++d)
      if (k % d == 0) num = divrem(num, phi(d)).quot;
    memo.emplace(k, num);
    return num;
  };
  return phi(n);
}

}  // namespace tritile
