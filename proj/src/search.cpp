// Exhaustive search for d-matrices in the 3α + 2β = π, case 1 setting.
//
// Rows (p d e; g m f; h l r) count the a, b, c edges on the three sides of ABC.
// With λ² = N/t, t = 2 − s² ∈ (1, 2), the side equations give
//   m, r, f, e < λ < √N   and   p ≤ λt = N/λ < √(2N),
// and each row sum is at most N. The proportionality of the two cubics fixes
// l through (64) and (d, e) through (66)/(67); survivors are tested for a root
// λ of cubic1 with N/2 < λ² < N.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "tritile/casework.hpp"

namespace tritile {

namespace {

using i128 = __int128;

QPoly Q(std::vector<Rational> c) { return QPoly(std::move(c)); }

Rational at(const QPoly& p, const Rational& x) { return p.eval(x, Rational(0)); }

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> s{p, p.derivative()};
  while (!s.back().is_zero()) {
    QPoly r = divrem(s[s.size() - 2], s.back()).rem;
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  return s;
}

int variations(const std::vector<QPoly>& chain, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& q : chain) {
    int sg = sgn(at(q, x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

QPoly squarefree(const QPoly& p) {
  QPoly a = p, b = p.derivative();
  while (!b.is_zero()) {
    QPoly r = divrem(a, b).rem;
    a = b;
    b = r;
  }
  return a.degree() <= 0 ? p : divrem(p, a).quot;
}

// distinct roots of p in the open interval (a, b)
int roots_in(const std::vector<QPoly>& chain, const Rational& a, const Rational& b) {
  int n = variations(chain, a) - variations(chain, b);
  if (sgn(at(chain[0], b)) == 0) --n;
  return n;
}

}  // namespace

// c3 λ³ + c2 λ² + c1 λ + c0 has a root λ > 0 with lo < λ² < hi.
// Writing c(λ) = E(λ²) + λ O(λ²), a positive root is a zero μ of E² − μO² with
// E(μ) = −√μ O(μ), so sign E · sign O ≤ 0.
bool cubic_root_in(const Rational& c3, const Rational& c2, const Rational& c1, const Rational& c0, const Rational& lo,
                   const Rational& hi) {
  QPoly E = Q({c0, c2}), O = Q({c1, c3});
  if (E.is_zero() && O.is_zero()) return true;
  QPoly G = E * E - Q({0, 1}) * O * O;
  if (G.is_zero()) {
    // E² = μO²: μ is a square of a rational function, only possible with both zero
    return true;
  }
  std::vector<Rational> cuts{lo, hi};
  for (const QPoly* p : {&E, &O})
    if (p->degree() == 1) {
      Rational z = -p->coeff(0) / p->coeff(1);
      if (lo < z && z < hi) cuts.push_back(z);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 1; i + 1 < cuts.size(); ++i)
    if (sgn(at(E, cuts[i])) == 0 && sgn(at(O, cuts[i])) == 0) return true;
  auto chain = sturm_chain(squarefree(G));
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    if (sgn(at(E, mid)) * sgn(at(O, mid)) > 0) continue;
    if (roots_in(chain, cuts[i], cuts[i + 1]) > 0) return true;
  }
  return false;
}

std::string Solution32::str() const {
  std::ostringstream o;
  o << "N=" << N << " d=(" << p << " " << d << " " << e << "; " << g << " " << m << " " << f << "; " << h << " " << l
    << " " << r << ")";
  return o.str();
}

std::string SearchReport::str() const {
  std::ostringstream o;
  long total = 0;
  for (long n : nodes) total += n;
  o << "search threetwo nmax=" << nmax << "\n";
  o << "candidates reaching the cubic test: " << total << "\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i]) o << "  N=" << i + 1 << ": " << nodes[i] << "\n";
  for (const auto& s : solutions) o << "solution " << s.str() << "\n";
  o << solutions.size() << " solutions\n";
  return o.str();
}

namespace {

struct Partial {
  std::vector<long> nodes;
  std::vector<Solution32> sols;
};

void test_candidate(long N, long p, long d, long e, long g, long m, long f, long h, long l, long r, Partial& out) {
  ++out.nodes[N - 1];
  long A = g * l - h * m, B = m * r - l * f;
  long Delta = p * B - d * (g * r - f * h) + e * A;
  Rational c3 = p, c2 = -p * (m + r) + e * h + d * g - N, c1 = Delta + N * (m + r), c0 = -N * B;
  if (cubic_root_in(c3, c2, c1, c0, Rational(N, 2), Rational(N)))
    out.sols.push_back({N, p, d, e, g, m, f, h, l, r});
}

void scan(long nmax, long p, long m, long r, long f, Partial& out) {
  for (long g = 0; g <= nmax; ++g)
    for (long h = 1; h <= nmax; ++h) {
      long gh = g + h;
      long num = m * (gh * r + p * h), den = p * g + gh * f;  // (64) solved for l
      if (num % den) continue;
      long l = num / den;
      long A = g * l - h * m, B = m * r - l * f;
      if (A >= 0 || B >= 0) continue;
      long nlo = std::max({m * m + 1, r * r + 1, f * f + 1, p * p / 2 + 1, g + m + f, h + l + r});
      long Dp = (f * h - g * r) * h - A * g;
      for (long N = nlo; N <= nmax; ++N) {
        // (g+h)·[d(fh − gr) + eA] = b1,  (g+h)·[dg + eh] = b2
        i128 b1 = -(i128)N * (p * h + gh * (m + r)) - (i128)gh * p * B;
        i128 b2 = (i128)p * (A + h * f - g * r) + (i128)gh * (p * (m + r) + N);
        auto accept = [&](i128 d, i128 e) {
          if (d < 0 || e < 0 || e * e >= N || p + d + e > N) return;
          test_candidate(N, p, (long)d, (long)e, g, m, f, h, l, r, out);
        };
        if (Dp != 0) {
          i128 dn = b1 * h - (i128)A * b2, en = (i128)(f * h - g * r) * b2 - b1 * g, dd = (i128)gh * Dp;
          if (dn % dd || en % dd) continue;
          accept(dn / dd, en / dd);
        } else {
          for (long d = 0; d <= N - p; ++d) {
            i128 en = b2 - (i128)gh * g * d, ed = (i128)gh * h;
            if (en % ed) continue;
            i128 e = en / ed;
            if ((i128)gh * (d * (f * h - g * r) + e * A) != b1) continue;
            accept(d, e);
          }
        }
      }
    }
}

}  // namespace

SearchReport search_32(long nmax, int workers) {
  if (nmax < 1) throw AlgebraError("search_32: nmax must be positive");
  if (workers < 1) throw AlgebraError("search_32: workers must be positive");
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::array<long, 4>> jobs;
  for (long p = 1; p * p < 2 * nmax; ++p)
    for (long m = 1; m * m < nmax; ++m)
      for (long r = 0; r * r < nmax; ++r)
        for (long f = 1; f * f < nmax; ++f) jobs.push_back({p, m, r, f});
  std::vector<Partial> parts(jobs.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      parts[i].nodes.assign(nmax, 0);
      scan(nmax, jobs[i][0], jobs[i][1], jobs[i][2], jobs[i][3], parts[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();

  SearchReport rep;
  rep.nmax = nmax;
  rep.nodes.assign(nmax, 0);
  for (const auto& pt : parts) {
    for (long i = 0; i < nmax; ++i) rep.nodes[i] += pt.nodes[i];
    rep.solutions.insert(rep.solutions.end(), pt.sols.begin(), pt.sols.end());
  }
  auto key = [](const Solution32& s) { return std::array<long, 10>{s.N, s.p, s.d, s.e, s.g, s.m, s.f, s.h, s.l, s.r}; };
  std::sort(rep.solutions.begin(), rep.solutions.end(),
            [&](const Solution32& a, const Solution32& b) { return key(a) < key(b); });
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace tritile
