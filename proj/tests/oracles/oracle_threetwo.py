"""The 3alpha + 2beta = pi computations re-derived with sympy.

Each printed form is compared with a sympy derivation from the definitions;
the certificate must report ok exactly when they agree and DEFECT otherwise.
"""
import sys

import sympy as sp

from common import Tally, check_statuses, run

cli = sys.argv[1]
t = Tally()
s, L, N, S, b = sp.symbols("s L N S b")
p, d, e, g, m, f, h, l, r = sp.symbols("p d e g m f h l r")


def same(a, c):
    return sp.expand(a - c) == 0


def expect_status(statuses, label, agree):
    want = "ok" if agree else "DEFECT"
    got = statuses.get(label)
    t.expect(got == want, f"{label}: report {got}, oracle {want}")


# case 2: rows (p d e) and (g m f) over c, with a/c = s, b/c = 1 - s^2,
# sin 2alpha / c = s(2 - s^2) and lambda s = p s + d(1 - s^2) + e
rep2 = check_statuses(run(cli, "certify", "threetwo-case2", ok_codes=(1,)))
Lam = p * s + d * (1 - s**2) + e
psi = sp.expand((2 - s**2) * Lam - (g * s + m * (1 - s**2) + f))
expect_status(rep2, "psi", same(psi, d * s**4 - p * s**3 + (m - 3 * d - e) * s**2 + (2 * p - g) * s + (2 * d + 2 * e - f - m)))

M = sp.Matrix([[p - L, d, e], [g * b, m * b - L * S, f * b]])
u = M[0, 1] * M[1, 2] - M[0, 2] * M[1, 1]
v = -(M[0, 0] * M[1, 2] - M[0, 2] * M[1, 0])
w = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
expect_status(rep2, "eigenvector u", same(u, (d * f - e * m) * b + e * L * S))
expect_status(rep2, "eigenvector v", same(v, (e * g - p * f) * b + f * L * b))
expect_status(rep2, "eigenvector w", same(w, (p * m - d * g) * b - (m * b + p * S) * L + L**2 * S))

# substitute b = (1 - s^2) c, S = s(2 - s^2) c, L = Lam / s and clear s
sub = {b: 1 - s**2, S: s * (2 - s**2), L: Lam / s}
H = -sp.expand(sp.cancel(v.subs(sub) * s / (1 - s**2)))
expect_status(rep2, "v = 0 gives H", same(H, d * f * s**2 - e * g * s - (e + d) * f))
expect_status(rep2, "H(0)", same(H.subs(s, 0), (e + d) * f))
u_poly = sp.expand(u.subs(sub))
diff = sp.expand(u_poly - e * psi)
expect_status(rep2, "e(H - psi)", same(diff, -d * f * s**2 + e * g * s + d * f))
w_poly = sp.expand(sp.cancel(w.subs(sub) * s))
printed_w = (-d**2 * s**7 + d * p * s**5 + (4 * d**2 + 2 * d * e - d * m) * s**4 + (d * g - 3 * d * p - e * p) * s**3
             + (-5 * d**2 - 6 * d * e - e**2 + 2 * d * m + e * m) * s**2 + (-d * g + 2 * d * p + 2 * e * p) * s
             + (2 * d**2 + 4 * d * e + 2 * e**2 - d * m - e * m))
expect_status(rep2, "w = 0 polynomial", same(w_poly, printed_w))
G = d * f * s**2 - e * g * s - f * (d + e)
expect_status(rep2, "w mod psi", same(sp.prem(w_poly, psi, s), -d**3 * G))
# a/c = u/w, i.e. s w = u after the substitutions
chi = sp.prem(sp.expand(w_poly - u_poly), psi, s)
printed_chi = (d * m + d * e - d**2) * s**2 - (d * g - d * p + e * p) * s + d**2 - e**2 - d * f - d * m
t.expect(sp.expand(chi) == 0, "a/c = u/w is 0 mod psi")
expect_status(rep2, "chi = sextic mod psi", same(chi, printed_chi))
F = sp.expand(d * psi - printed_chi)
expect_status(rep2, "F at p = 0", same(F.subs(p, 0), sp.expand((d * s - (d + e))**2)))
Fp = sp.Poly(sp.diff(F, s), s)
c3, c2 = Fp.coeff_monomial(s**3), Fp.coeff_monomial(s**2)
expect_status(rep2, "F' root sum * 4d^2", same(-c2, 4 * d * (d + e)))

# case 1: rows 1 and 3 with angles 2alpha, beta, beta + alpha
rep1 = check_statuses(run(cli, "certify", "threetwo-case1"))
row3 = h * s + l * (1 - s**2) + r
F1 = sp.expand(s * (2 - s**2) * row3 - (p * s + d * (1 - s**2) + e))
expect_status(rep1, "F (rows 1 and 3)",
              same(F1, l * s**5 - h * s**4 - (3 * l + r) * s**3 + (d + 2 * h) * s**2 + (2 * l + 2 * r - p) * s - (e + d)))
H1 = sp.expand(row3 * (1 - s**2) - (g * s + m * (1 - s**2) + f))
expect_status(rep1, "H (rows 2 and 3)",
              same(H1, l * s**4 - h * s**3 + (m - 2 * l - r) * s**2 + (h - g) * s + l + r - m - f))
K = sp.expand(-(F1 - s * H1))
expect_status(rep1, "K = -(F mod H)",
              same(K, (l + m) * s**3 - (d + g + h) * s**2 - (f + m + l + r - p) * s + (d + e)))
Delta = sp.Matrix([[p, d, e], [g, m, f], [h, l, r]]).det()
cubic1 = sp.expand(sp.Matrix([[p * L - N, d * L, e * L], [g, m - L, f], [h, l, r - L]]).det())
expect_status(rep1, "cubic1",
              same(cubic1, p * L**3 + (-p * (m + r) + e * h + d * g - N) * L**2 + (Delta + N * (m + r)) * L
                   - N * (m * r - l * f)))
cubic2 = sp.expand((h * f - g * r) * L**2 + g * L**3 - (N - L**2) * (g * l - h * m + h * L))
expect_status(rep1, "cubic2",
              same(cubic2, (g + h) * L**3 + (g * l - h * m + h * f - g * r) * L**2 - N * h * L - N * (g * l - h * m)))
c1p, c2p = sp.Poly(cubic1, L), sp.Poly(cubic2, L)
expect_status(rep1, "(64) numerator", same(c1p.coeff_monomial(1), -N * (m * r - l * f)))
expect_status(rep1, "(64) denominator", same(c2p.coeff_monomial(1), -N * (g * l - h * m)))
expect_status(rep1, "(66) numerator", same(c1p.coeff_monomial(L**2), -p * (m + r) + e * h + d * g - N))
expect_status(rep1, "(66) denominator", same(c2p.coeff_monomial(L**2), g * l - h * m + h * f - g * r))
expect_status(rep1, "(67) numerator", same(c1p.coeff_monomial(L), Delta + N * (m + r)))
expect_status(rep1, "(67) denominator", same(c2p.coeff_monomial(L), -N * h))
expect_status(rep1, "-Delta", same(-Delta, d * g * r + p * f * l + h * m * e - p * m * r - d * f * h - e * g * l))

# the singamma identities numerically at the two rational angles
for al in (sp.Rational(2, 9), sp.Rational(2, 7)):
    be = (1 - 3 * al) / 2
    ga = 1 - al - be
    a_, b_, c_ = (sp.sin(x * sp.pi) for x in (al, be, ga))
    s_ = 2 * sp.sin(al * sp.pi / 2)
    ok = abs(sp.N(a_ / c_ - s_, 50)) < 1e-40 and abs(sp.N(b_ / c_ - (1 - s_**2), 50)) < 1e-40
    t.expect(ok, f"singamma at alpha = {al} pi")
t.finish()
