#include <mpfr.h>

#include <cmath>
#include <cstdlib>

#include "tritile/exactalg.hpp"

namespace tritile {

unsigned precision_cap() {
  if (const char* env = std::getenv("TRITILE_PRECISION_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 64) return static_cast<unsigned>(v);
  }
  return 4096;
}

namespace {

// Ball evaluation of Σ c_j cos(2πj/m) at the given precision. Each cosine is
// within 64·2^-p of the truth, and the multiply/accumulate adds at most a few
// ulps of the running magnitude, so the returned radius is conservative.
int ball_sign(const CycloNum& x, mpfr_prec_t prec) {
  long m = x.order();
  const auto& c = x.coords();
  mpfr_t pi, ang, cs, term, sum, mag, q;
  mpfr_inits2(prec, pi, ang, cs, term, sum, mag, q, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_zero(sum, 1);
  mpfr_set_zero(mag, 1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(c[j]) == 0) continue;
    mpfr_mul_ui(ang, pi, 2 * j, MPFR_RNDN);
    mpfr_div_si(ang, ang, m, MPFR_RNDN);
    mpfr_cos(cs, ang, MPFR_RNDN);
    mpfr_set_q(q, c[j].get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term, q, cs, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    mpfr_abs(q, q, MPFR_RNDU);
    mpfr_add(mag, mag, q, MPFR_RNDU);
  }
  // radius = (128 + 4n)·mag·2^-p
  mpfr_mul_ui(mag, mag, 128 + 4 * c.size(), MPFR_RNDU);
  mpfr_div_2si(mag, mag, prec, MPFR_RNDU);
  mpfr_abs(term, sum, MPFR_RNDN);
  int s = 0;
  if (mpfr_cmp(term, mag) > 0) s = mpfr_sgn(sum) > 0 ? 1 : -1;
  mpfr_clears(pi, ang, cs, term, sum, mag, q, static_cast<mpfr_ptr>(nullptr));
  return s;
}

}  // namespace

int sign(const CycloNum& x, unsigned cap_bits) {
  if (!x.is_real()) throw AlgebraError("sign of a non-real cyclotomic number");
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.coords()[0]);
  // double-precision filter
  double v = 0, mag = 0;
  long m = x.order();
  const auto& c = x.coords();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(c[j]) == 0) continue;
    double cj = c[j].get_d();
    v += cj * std::cos(2.0 * M_PI * static_cast<double>(j) / m);
    mag += std::fabs(cj);
  }
  if (std::isfinite(mag) && std::fabs(v) > mag * (16.0 + c.size()) * 1e-15) return v > 0 ? 1 : -1;
  unsigned cap = cap_bits ? cap_bits : precision_cap();
  for (mpfr_prec_t p = 64; p <= static_cast<mpfr_prec_t>(cap); p *= 2)
    if (int s = ball_sign(x, p)) return s;
  throw AlgebraError("sign undecided at the precision cap of " + std::to_string(cap) + " bits");
}

}  // namespace tritile
