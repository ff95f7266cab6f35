// Fixpoint propagation of zero/nonzero facts for nonnegative parameters.
//
// Rules:
//   sign      an equation (or a linear combination of equations, via RREF over
//             monomials) whose coefficients share a sign forces every monomial
//             to vanish; each monomial becomes a zero fact or a zero product
//   product   a zero product with all but one factor nonzero zeroes that factor
//   sum       x·y = 0 for every y of a set known to contain a nonzero member
//             forces x = 0
//   positive  a positive set with all but one member zero makes it nonzero
#include <algorithm>
#include <sstream>

#include "tritile/casework.hpp"

namespace tritile {

bool ZeroFactBase::consistent() const {
  for (const auto& z : zero)
    if (nonzero.count(z)) return false;
  return true;
}

std::string ZeroFactBase::str() const {
  std::ostringstream o;
  auto list = [&](const std::set<std::string>& s) {
    std::string r;
    for (const auto& v : s) r += (r.empty() ? "" : ", ") + v;
    return r;
  };
  o << "zero {" << list(zero) << "} nonzero {" << list(nonzero) << "} products {";
  bool first = true;
  for (const auto& p : zero_products) {
    if (!first) o << ", ";
    first = false;
    for (std::size_t i = 0; i < p.size(); ++i) o << (i ? "*" : "") << p[i];
  }
  o << "}";
  return o.str();
}

namespace {

std::string join_product(const std::vector<std::string>& vs) {
  std::string r;
  for (const auto& v : vs) r += (r.empty() ? "" : "*") + v;
  return r;
}

class Propagator {
 public:
  Propagator(std::vector<ParamPoly> eqs, ZeroFactBase facts) : eqs_(std::move(eqs)) {
    out_.facts = std::move(facts);
  }

  Propagation run() {
    if (!out_.facts.consistent()) fail("initial facts", "a parameter is both zero and nonzero");
    // normalize the initial products against the nonzero set
    auto products = out_.facts.zero_products;
    out_.facts.zero_products.clear();
    for (const auto& p : products) add_product(p, "hypothesis");
    bool changed = true;
    while (changed && !out_.contradiction) {
      changed = false;
      simplify();
      if (out_.contradiction) break;
      for (const auto& e : eqs_) {
        if (apply_sign(e, "sign")) changed = true;
        if (out_.contradiction) break;
      }
      if (changed || out_.contradiction) continue;
      for (const auto& row : rref()) {
        if (apply_sign(row, "sign on combination")) changed = true;
        if (out_.contradiction) break;
      }
      if (changed || out_.contradiction) continue;
      changed = apply_product_rules();
    }
    out_.residual = eqs_;
    return std::move(out_);
  }

 private:
  void fail(const std::string& rule, const std::string& why) {
    if (out_.contradiction) return;
    out_.contradiction = true;
    out_.chain.push_back({rule, "contradiction: " + why});
  }

  bool set_zero(const std::string& v, const std::string& rule, const std::string& because) {
    auto& f = out_.facts;
    if (f.zero.count(v)) return false;
    f.zero.insert(v);
    out_.chain.push_back({rule, because + " => " + v + " = 0"});
    if (f.nonzero.count(v)) fail(rule, v + " is known to be nonzero");
    return true;
  }

  bool set_nonzero(const std::string& v, const std::string& rule, const std::string& because) {
    auto& f = out_.facts;
    if (f.nonzero.count(v)) return false;
    f.nonzero.insert(v);
    out_.chain.push_back({rule, because + " => " + v + " != 0"});
    if (f.zero.count(v)) fail(rule, v + " is known to be zero");
    return true;
  }

  // records x1*...*xk = 0 after dropping nonzero factors
  bool add_product(const std::vector<std::string>& vars, const std::string& because) {
    const auto& f = out_.facts;
    std::vector<std::string> s;
    for (const auto& v : vars) {
      if (f.zero.count(v)) return false;  // already satisfied
      if (!f.nonzero.count(v)) s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) {
      fail("product", because + ": product of nonzero parameters " + join_product(vars) + " vanishes");
      return true;
    }
    if (s.size() == 1) return set_zero(s[0], "product", because);
    if (!out_.facts.zero_products.insert(s).second) return false;
    out_.chain.push_back({"product", because + " => " + join_product(s) + " = 0"});
    return true;
  }

  void simplify() {
    std::vector<ParamPoly> next;
    for (auto e : eqs_) {
      for (const auto& z : out_.facts.zero) e = e.subs(z, ParamPoly(0));
      if (e.is_zero()) continue;
      if (e.is_constant()) {
        fail("sign", "equation reduces to the nonzero constant " + to_string(e.constant()) + " = 0");
        return;
      }
      next.push_back(std::move(e));
    }
    // drop duplicates up to scaling by a constant
    std::vector<ParamPoly> uniq;
    for (auto& e : next) {
      ParamPoly n = e * ParamPoly(Rational(1) / e.terms().begin()->second);
      if (std::find(uniq.begin(), uniq.end(), n) == uniq.end()) uniq.push_back(n);
    }
    eqs_ = std::move(uniq);
  }

  bool apply_sign(const ParamPoly& e, const std::string& rule) {
    if (e.is_zero() || e.uniform_sign() == 0) return false;
    bool changed = false;
    std::string because = e.str() + " = 0";
    for (const auto& [mono, c] : e.terms()) {
      std::vector<std::string> vars;
      for (const auto& [v, k] : mono) vars.push_back(v);
      if (vars.empty()) {
        fail(rule, because + " has a nonzero constant of the common sign");
        return true;
      }
      if (add_product(vars, rule + " on " + because)) changed = true;
      if (out_.contradiction) return true;
    }
    return changed;
  }

  // reduced row echelon form of the equations over their monomials; monomials
  // containing N are eliminated first so the remaining rows are N-free
  std::vector<ParamPoly> rref() const {
    std::vector<ParamPoly::Monomial> cols;
    for (const auto& e : eqs_)
      for (const auto& [mono, c] : e.terms())
        if (std::find(cols.begin(), cols.end(), mono) == cols.end()) cols.push_back(mono);
    auto hasN = [](const ParamPoly::Monomial& m) {
      for (const auto& [v, k] : m)
        if (v == "N") return true;
      return false;
    };
    std::stable_sort(cols.begin(), cols.end(), [&](const auto& a, const auto& b) {
      if (hasN(a) != hasN(b)) return hasN(a);
      return ParamPoly::GrlexDesc{}(a, b);
    });
    std::vector<std::vector<Rational>> M;
    for (const auto& e : eqs_) {
      std::vector<Rational> row(cols.size());
      for (const auto& [mono, c] : e.terms())
        row[std::find(cols.begin(), cols.end(), mono) - cols.begin()] = c;
      M.push_back(std::move(row));
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols.size() && r < M.size(); ++c) {
      std::size_t piv = r;
      while (piv < M.size() && sgn(M[piv][c]) == 0) ++piv;
      if (piv == M.size()) continue;
      std::swap(M[r], M[piv]);
      Rational inv = 1 / M[r][c];
      for (auto& x : M[r]) x *= inv;
      for (std::size_t i = 0; i < M.size(); ++i) {
        if (i == r || sgn(M[i][c]) == 0) continue;
        Rational f = M[i][c];
        for (std::size_t j = 0; j < cols.size(); ++j) M[i][j] -= f * M[r][j];
      }
      ++r;
    }
    std::vector<ParamPoly> rows;
    for (std::size_t i = 0; i < r; ++i) {
      ParamPoly p;
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (sgn(M[i][j]) != 0) p.add_term(cols[j], M[i][j]);
      rows.push_back(std::move(p));
    }
    return rows;
  }

  bool apply_product_rules() {
    auto& f = out_.facts;
    bool changed = false;
    // positive sets
    for (const auto& ps : f.positive_sums) {
      std::vector<std::string> open;
      for (const auto& v : ps)
        if (!f.zero.count(v)) open.push_back(v);
      std::string name = "{" + join_product(ps) + "}";
      std::replace(name.begin(), name.end(), '*', ',');
      if (open.empty()) {
        fail("positive", "every member of the positive set " + name + " is zero");
        return true;
      }
      if (open.size() == 1 && set_nonzero(open[0], "positive", "only member of " + name + " not zero"))
        changed = true;
      if (out_.contradiction) return true;
    }
    // re-normalize products against the (possibly grown) nonzero set
    auto products = f.zero_products;
    f.zero_products.clear();
    for (const auto& p : products) {
      std::vector<std::string> s;
      bool satisfied = false;
      for (const auto& v : p) {
        if (f.zero.count(v)) satisfied = true;
        if (!f.nonzero.count(v)) s.push_back(v);
      }
      if (satisfied) continue;
      if (s.size() == p.size()) {
        f.zero_products.insert(p);
        continue;
      }
      if (add_product(p, join_product(p) + " = 0 with nonzero factors")) changed = true;
      if (out_.contradiction) return true;
    }
    // x·(sum of a positive set) = 0
    std::set<std::string> vars;
    for (const auto& p : f.zero_products)
      if (p.size() == 2) vars.insert(p.begin(), p.end());
    for (const auto& x : vars) {
      if (f.zero.count(x)) continue;
      for (const auto& ps : f.positive_sums) {
        if (std::find(ps.begin(), ps.end(), x) != ps.end()) continue;
        bool all = true;
        for (const auto& y : ps) {
          std::vector<std::string> pr{std::min(x, y), std::max(x, y)};
          if (!f.zero.count(y) && !f.zero_products.count(pr)) {
            all = false;
            break;
          }
        }
        if (!all) continue;
        std::string sum;
        for (const auto& y : ps) sum += (sum.empty() ? "" : "+") + y;
        if (set_zero(x, "sum", x + "*(" + sum + ") = 0 and " + sum + " > 0")) changed = true;
        if (out_.contradiction) return true;
        break;
      }
    }
    return changed;
  }

  std::vector<ParamPoly> eqs_;
  Propagation out_;
};

}  // namespace

Propagation propagate_nonneg(const std::vector<ParamPoly>& equations, ZeroFactBase facts) {
  return Propagator(equations, std::move(facts)).run();
}

}  // namespace tritile
