// Shared helpers for the test binaries.
#pragma once

#include <random>

#include "tritile/casework.hpp"
#include "tritile/tiling.hpp"

namespace tritile::test {

inline Rational random_rational(std::mt19937_64& rng, long span = 9) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return frac(num(rng), den(rng));
}

inline CycloNum random_cyclo(std::mt19937_64& rng, const FieldRef& f, long span = 9) {
  std::vector<Rational> c(f->degree());
  for (auto& x : c) x = random_rational(rng, span);
  return CycloNum(f, c);
}

inline CycloNum random_nonzero(std::mt19937_64& rng, const FieldRef& f) {
  for (;;) {
    CycloNum x = random_cyclo(rng, f);
    if (!x.is_zero()) return x;
  }
}

inline long random_order(std::mt19937_64& rng) {
  static const long orders[] = {3, 4, 5, 7, 8, 9, 11, 12, 14, 15, 20, 22, 28, 36};
  return orders[std::uniform_int_distribution<std::size_t>(0, std::size(orders) - 1)(rng)];
}

}  // namespace tritile::test
