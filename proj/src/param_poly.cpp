#include "tritile/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tritile {

namespace {

unsigned mono_degree(const ParamPoly::Monomial& m) {
  unsigned d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

ParamPoly::Monomial mono_mul(const ParamPoly::Monomial& a, const ParamPoly::Monomial& b) {
  ParamPoly::Monomial r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return r;
}

// a = b·q for monomials; returns false if b does not divide a
bool mono_div(const ParamPoly::Monomial& a, const ParamPoly::Monomial& b, ParamPoly::Monomial& q) {
  q.clear();
  std::size_t i = 0;
  for (auto& [v, e] : b) {
    while (i < a.size() && a[i].first < v) q.push_back(a[i++]);
    if (i == a.size() || a[i].first != v || a[i].second < e) return false;
    if (a[i].second > e) q.emplace_back(v, a[i].second - e);
    ++i;
  }
  while (i < a.size()) q.push_back(a[i++]);
  return true;
}

std::string mono_str(const ParamPoly::Monomial& m) {
  std::string s;
  for (auto& [v, e] : m) {
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

}  // namespace

bool ParamPoly::GrlexDesc::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) return true;
    if (i == a.size()) return false;
    if (a[i].first != b[j].first) return a[i].first < b[j].first;
    if (a[i].second != b[j].second) return a[i].second > b[j].second;
    ++i, ++j;
  }
  return false;
}

ParamPoly::ParamPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Rational(c));
}

ParamPoly::ParamPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

ParamPoly ParamPoly::var(const std::string& name, unsigned e) {
  ParamPoly p;
  if (e == 0) return ParamPoly(1);
  p.terms_.emplace(Monomial{{name, e}}, Rational(1));
  return p;
}

void ParamPoly::add_term(const Monomial& mono, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamPoly::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::string> ParamPoly::variables() const {
  std::vector<std::string> vs;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

unsigned ParamPoly::degree_in(const std::string& v) const {
  unsigned d = 0;
  for (auto& [m, c] : terms_)
    for (auto& [w, e] : m)
      if (w == v) d = std::max(d, e);
  return d;
}

unsigned ParamPoly::total_degree() const {
  unsigned d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

ParamPoly ParamPoly::coeff(const std::string& v, unsigned k) const {
  ParamPoly r;
  for (auto& [m, c] : terms_) {
    unsigned e = 0;
    Monomial rest;
    for (auto& t : m) {
      if (t.first == v) e = t.second;
      else rest.push_back(t);
    }
    if (e == k) r.add_term(rest, c);
  }
  return r;
}

ParamPoly ParamPoly::subs(const std::string& v, const ParamPoly& by) const {
  ParamPoly r;
  std::map<unsigned, ParamPoly> powers;
  for (auto& [m, c] : terms_) {
    unsigned e = 0;
    Monomial rest;
    for (auto& t : m) {
      if (t.first == v) e = t.second;
      else rest.push_back(t);
    }
    ParamPoly t;
    t.add_term(rest, c);
    if (e) {
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, by.pow(e)).first;
      t *= it->second;
    }
    r += t;
  }
  return r;
}

Rational ParamPoly::eval(const std::map<std::string, Rational>& at) const {
  Rational s = 0;
  for (auto& [m, c] : terms_) {
    Rational t = c;
    for (auto& [v, e] : m) {
      auto it = at.find(v);
      if (it == at.end()) throw AlgebraError("eval: no value for parameter " + v);
      for (unsigned k = 0; k < e; ++k) t *= it->second;
    }
    s += t;
  }
  return s;
}

ParamPoly ParamPoly::exact_div(const ParamPoly& d) const {
  if (d.is_zero()) throw AlgebraError("exact_div: division by zero");
  ParamPoly rem = *this, q;
  const auto& [lm, lc] = *d.terms_.begin();
  Monomial t;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.begin();
    if (!mono_div(rm, lm, t)) throw AlgebraError("exact_div: not divisible");
    ParamPoly step;
    step.add_term(t, rc / lc);
    q += step;
    rem -= step * d;
  }
  return q;
}

int ParamPoly::uniform_sign() const {
  if (terms_.empty()) return 0;
  int s = sgn(terms_.begin()->second);
  for (auto& [m, c] : terms_)
    if (sgn(c) != s) return 0;
  return s;
}

std::string ParamPoly::str() const { return to_string(*this); }

std::string to_string(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) s += '-';
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (m.empty()) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + '*';
      s += mono_str(m);
    }
  }
  return s;
}

bool needs_parens(const ParamPoly& p) { return p.terms().size() > 1; }

// ---------------------------------------------------------------------------
// Parser: sums of products of factors; a factor is a number, a parameter
// (single letter, or the designated main variable), or a parenthesized
// expression, optionally raised by ^k. Juxtaposition multiplies.

namespace {

struct Parser {
  std::string s;
  std::size_t i = 0;
  std::string main;  // name of the main variable, may be empty
  std::string main_sym;  // internal parameter name standing in for it

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw AlgebraError("parse error at offset " + std::to_string(i) + ": " + why);
  }

  ParamPoly expr() {
    ws();
    ParamPoly acc;
    bool first = true;
    while (true) {
      ws();
      int sign = 1;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        break;
      }
      ParamPoly t = term();
      acc += sign < 0 ? -t : t;
      first = false;
      ws();
      if (i >= s.size() || (s[i] != '+' && s[i] != '-')) break;
    }
    return acc;
  }

  bool factor_starts() {
    ws();
    if (i >= s.size()) return false;
    char ch = s[i];
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '(';
  }

  ParamPoly term() {
    ParamPoly t = power();
    while (true) {
      ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        t *= power();
      } else if (i < s.size() && s[i] == '/') {
        ++i;
        ParamPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        t *= ParamPoly(Rational(1) / d.constant());
      } else if (factor_starts()) {
        t *= power();
      } else {
        break;
      }
    }
    return t;
  }

  ParamPoly power() {
    ParamPoly b = atom();
    ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      ws();
      bool brace = i < s.size() && (s[i] == '{' || s[i] == '(');
      if (brace) ++i;
      std::size_t j = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (j == i) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(s.substr(j, i - j)));
      if (brace) {
        if (i >= s.size() || (s[i] != '}' && s[i] != ')')) fail("unclosed exponent");
        ++i;
      }
      b = b.pow(e);
    }
    return b;
  }

  ParamPoly atom() {
    ws();
    if (i >= s.size()) fail("unexpected end");
    char ch = s[i];
    if (ch == '(') {
      ++i;
      ParamPoly e = expr();
      ws();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return ParamPoly(Rational(Integer(s.substr(j, i - j))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      if (!main.empty() && s.compare(i, main.size(), main) == 0) {
        i += main.size();
        return ParamPoly::var(main_sym);
      }
      ++i;
      return ParamPoly::var(std::string(1, ch));
    }
    fail(std::string("unexpected character '") + ch + "'");
  }
};

}  // namespace

ParamPoly parse_param(const std::string& text) {
  Parser p{text, 0, "", ""};
  ParamPoly r = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

PPoly parse_unipoly(const std::string& text, const std::string& var) {
  // the main variable gets a name no single-letter parameter can collide with
  const std::string sym = "~";
  Parser p{text, 0, var, sym};
  ParamPoly r = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  std::vector<ParamPoly> c(r.degree_in(sym) + 1);
  for (unsigned k = 0; k < c.size(); ++k) c[k] = r.coeff(sym, k);
  return PPoly(std::move(c));
}

QPoly parse_qpoly(const std::string& text, const std::string& var) {
  PPoly p = parse_unipoly(text, var);
  std::vector<Rational> c;
  for (auto& a : p.coeffs()) {
    if (!a.is_constant()) throw AlgebraError("parse_qpoly: non-rational coefficient");
    c.push_back(a.constant());
  }
  return QPoly(std::move(c));
}

}  // namespace tritile
