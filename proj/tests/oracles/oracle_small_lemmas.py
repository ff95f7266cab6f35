"""pi/6, pi/5 and Lemma 46 facts re-derived with sympy."""
import sys

import sympy as sp

from common import Tally, check_statuses, run

cli = sys.argv[1]
t = Tally()
a, x = sp.symbols("a x")
p, e, g, f, N = sp.symbols("p e g f N", nonnegative=True)


def expect_status(statuses, label, agree):
    want = "ok" if agree else "DEFECT"
    got = statuses.get(label)
    t.expect(got == want, f"{label}: report {got}, oracle {want}")


# 30-60-90: (p + e sqrt3)^2 = N/2, (g + f sqrt3)^2 = 3N/2 with integers forces p = g = 0
r3 = sp.sqrt(3)
e1 = sp.expand((p + e * r3)**2 - N / 2)
e2 = sp.expand((g + f * r3)**2 - 3 * N / 2)
# the sqrt3 parts: 2pe = 0 and 2gf = 0; with e, f != 0 this gives p = g = 0
rat1 = e1.subs(p, 0)
rat2 = e2.subs(g, 0)
sol = sp.solve([rat1, rat2], [N, f], dict=True)
rel = [sp.simplify(s_[f]**2 / e**2) for s_ in sol if s_[f].is_nonnegative is not False]
t.expect(rel and all(q == 3 for q in rel), f"30-60-90: f^2 / e^2 = {rel}")
rep6 = check_statuses(run(cli, "certify", "piover6"))
expect_status(rep6, "30-60-90 relation", 6 in rel)

# pi/5
sa = sp.sin(sp.pi / 5)
mp = sp.minimal_polynomial(sa, a)
rep5 = check_statuses(run(cli, "certify", "piover5"))
expect_status(rep5, "minimal polynomial of a = sin(pi/5)", sp.expand(mp - (16 * a**4 - 20 * a**2 + 5)) == 0)
a4 = sp.rem(a**4, mp, a)
expect_status(rep5, "a^4 reduced", sp.expand(a4 - (20 * a**2 - 5)) == 0)
ratio = sp.nsimplify(sp.sin(3 * sp.pi / 5) / sa)
t.expect(abs(sp.N(sp.sin(3 * sp.pi / 5) / sa - (3 - 4 * sa**2), 50)) < 1e-40, "sin 3alpha / sin alpha = 3 - 4a^2")
expect_status(rep5, "sin(3 alpha)/sin(alpha)", abs(sp.N(sp.sin(3 * sp.pi / 5) / sa - (3 - 4 * sa), 50)) < 1e-40)

# Lemma 46: alpha = 2m pi / n < pi/3 with 3alpha + 2beta = pi; the degree of
# sin(alpha/2) must be 3 (a cubic field) unless it is rational
found = set()
for n in range(1, 19):
    for mm in range(1, n):
        al = sp.Rational(2 * mm, n)
        if al >= sp.Rational(1, 3):
            continue
        half = al / 2
        deg = sp.degree(sp.minimal_polynomial(sp.sin(half * sp.pi), x), x)
        order = (2 * half.q) // sp.gcd(half.p, 2 * half.q)
        phi = sp.totient(order)
        if phi in (2, 4, 6) and (phi == 6 or deg == 1):
            found.add((al, (1 - 3 * al) / 2))
want = {(sp.Rational(2, 7), sp.Rational(1, 14)), (sp.Rational(2, 9), sp.Rational(1, 6))}
t.expect(found == want, f"lemma 46 scan: {sorted(found)}")
t.finish()
