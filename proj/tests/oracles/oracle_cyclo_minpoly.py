"""Cyclotomic and trigonometric minimal polynomials against sympy."""
import sys

import sympy as sp

from common import Tally, run, to_sympy

cli = sys.argv[1]
x = sp.Symbol("x")
t = Tally()

for n in range(1, 61):
    got = to_sympy(run(cli, "cyclo", str(n)).strip())
    t.expect(sp.expand(got - sp.cyclotomic_poly(n, x)) == 0, f"cyclo {n}")

cases = [(1, 5), (1, 11), (2, 7), (1, 7), (3, 10), (1, 9), (1, 12), (5, 12), (1, 14), (2, 9), (1, 13), (7, 11)]
for k, n in cases:
    for fn, f in (("sin", sp.sin), ("cos", sp.cos)):
        got = to_sympy(run(cli, "minpoly", fn, f"{k}/{n}").strip())
        want = sp.Poly(sp.minimal_polynomial(f(k * sp.pi / n), x), x).monic().as_expr()
        t.expect(sp.expand(got - want) == 0, f"minpoly {fn} {k}/{n}")
t.finish()
