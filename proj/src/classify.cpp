// Which families of the main classification admit a given N.
#include <cmath>
#include <sstream>

#include "tritile/casework.hpp"

namespace tritile {

namespace {

long isqrt(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool sum_of_two_squares(long n) {
  for (long a = 0; 2 * a * a <= n; ++a) {
    long b = isqrt(n - a * a);
    if (a * a + b * b == n) return true;
  }
  return false;
}

}  // namespace

std::vector<Family> classify(long N) {
  if (N < 1) throw AlgebraError("classify: N must be positive");
  std::vector<Family> out;
  if (N % 3 == 0) {
    long m = isqrt(N / 3);
    if (3 * m * m == N) {
      Family f{"i", "ABC equilateral, T isosceles with base angles pi/6, N = 3*" + std::to_string(m) + "^2", {}, true};
      f.witnesses.push_back("threem2 " + std::to_string(m));
      if (N == 27) f.witnesses.push_back("twentyseven");
      out.push_back(f);
    }
  }
  // 3α + 2β = π with sin(α/2) rational: the tile has rational side ratios; the
  // exact condition on N lives outside this library
  if (sum_of_two_squares(N))
    out.push_back({"ii", "3alpha + 2beta = pi, sin(alpha/2) rational (triquadratic; N is a sum of two squares)", {}, false});
  return out;
}

Tiling build_witness(const std::string& witness) {
  std::istringstream in(witness);
  std::string kind;
  in >> kind;
  if (kind == "threem2") {
    long m = 0;
    if (!(in >> m) || m < 1) throw AlgebraError("build_witness: bad threem2 parameter in '" + witness + "'");
    return gen_3m2(m);
  }
  if (kind == "twentyseven") return gen_27();
  throw AlgebraError("build_witness: unknown witness '" + witness + "'");
}

}  // namespace tritile
