"""Independent oracles used to freeze derived reference values.

Nothing here imports from ``shellbound``.  The symbolic class oracle
re-derives a_2^2 and a_3 from the class definitions with sympy, the numeric
ones use exact integers, mpmath or plain long division.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath as mp
import numpy as np
import sympy as sp

mp.mp.dps = 40
TAU_MP = (1 - mp.sqrt(5)) / 2
TAU = float(TAU_MP)

# Hand-arithmetic spot values, evaluated at 40 digits.
SPOT = {
    "SL_a2": float(abs(TAU_MP) / mp.sqrt(1 - 2 * TAU_MP)),
    "SL_a3": float(abs(TAU_MP) * (1 - 4 * TAU_MP) / (2 - 4 * TAU_MP)),
    "KSL_a2": float(abs(TAU_MP) / mp.sqrt(4 - 10 * TAU_MP)),
    "KSL_a3": float(abs(TAU_MP) * (1 - 4 * TAU_MP) / (6 - 15 * TAU_MP)),
    "HSL_a2": float(abs(TAU_MP) / mp.sqrt(3 * TAU_MP + 4 * (1 - 3 * TAU_MP))),
    "SL_fs_mu0": float(abs(TAU_MP) / 2),
    "SL_h0": float(TAU_MP**2 / (4 * (1 - 2 * TAU_MP))),
    "SL_threshold": float(abs(TAU_MP) / 8),
    "WSL000_a2sq_corner": float(TAU_MP**2 / (1 - 2 * TAU_MP)),
}


def fib(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def long_division(num, den, order: int) -> np.ndarray:
    """Power-series quotient by the schoolbook recurrence."""
    num = list(num) + [0] * (order + 1)
    den = list(den) + [0] * (order + 1)
    q = np.zeros(order + 1, dtype=complex)
    for n in range(order + 1):
        q[n] = (num[n] - sum(den[k] * q[n - k] for k in range(1, n + 1))) / den[0]
    return q


def lagrange_reversion(a: list[Fraction], order: int) -> list[Fraction]:
    """Inverse of z + a_2 z^2 + ... via Lagrange: n g_n = [z^{n-1}] (z/f)^n, exact in Q."""
    a = [Fraction(0), Fraction(1)] + [Fraction(x) for x in a]
    a += [Fraction(0)] * (order + 2 - len(a))
    q = a[1:order + 1]  # f/z
    # z/f by exact long division
    inv = [Fraction(0)] * order
    for n in range(order):
        inv[n] = (Fraction(int(n == 0)) - sum(q[k] * inv[n - k] for k in range(1, n + 1))) / q[0]
    g = [Fraction(0), Fraction(1)]
    pn = inv
    for n in range(2, order + 1):
        pn = [sum(pn[j] * inv[i - j] for j in range(i + 1)) for i in range(order)]
        g.append(pn[n - 1] / n)
    return g


# -- symbolic class oracle --------------------------------------------------
z, w = sp.symbols("z w")
A2, A3, C1, C2, D2 = sp.symbols("a2 a3 c1 c2 d2")


def _operator(tag, f, var, gamma, lam, alpha):
    fp = sp.diff(f, var)
    fpp = sp.diff(f, var, 2)
    q = sp.expand(f / var)
    if tag == "WSL":
        x = (1 - alpha + 2 * lam) * q + (alpha - 2 * lam) * fp + lam * var * fpp
        return 1 + (x - 1) / gamma
    if tag == "RSL":
        return 1 + (fp * q ** (lam - 1) - 1) / gamma
    if tag == "SLB":
        return fp**lam / q
    return (fp + lam * var * fpp) / ((1 - lam) * q + lam * fp)


def _coeffs(expr, var, n=2):
    s = sp.series(expr, var, 0, n + 1).removeO()
    return [sp.expand(s).coeff(var, k) for k in range(1, n + 1)]


@lru_cache(maxsize=None)
def symbolic_a2sq_a3(tag: str, gamma, lam, alpha):
    """(a_2^2, a_3) as sympy expressions in c1, c2, d2 with tau kept exact.

    The class operator of f and of its inverse are matched against
    p(u) and p(v) for Carathéodory u, v with d_1 = -c_1; the two z^2
    equations are added (for a_2^2) and subtracted (for a_3).
    """
    gamma, lam, alpha = (sp.nsimplify(v) for v in (gamma, lam, alpha))
    t = (1 - sp.sqrt(5)) / 2
    f = z + A2 * z**2 + A3 * z**3
    g = w - A2 * w**2 + (2 * A2**2 - A3) * w**3
    lf = _coeffs(_operator(tag, f, z, gamma, lam, alpha), z)
    lg = _coeffs(_operator(tag, g, w, gamma, lam, alpha), w)

    def rhs(k1, k2):
        return [k1 * t / 2, (k2 - k1**2 / 2) * t / 2 + sp.Rational(3, 4) * k1**2 * t**2]

    rf, rg = rhs(C1, C2), rhs(-C1, D2)
    lin = sp.solve(sp.Eq(lf[0], rf[0]), C1)[0]  # c1 in terms of a2
    add = sp.expand(lf[1] + lg[1] - (rf[1] + rg[1]).subs(C1, lin))
    assert not add.has(A3), "a_3 must cancel from the summed z^2 equations"
    a2sq = sp.solve(add.subs(A2**2, sp.Symbol("S")), sp.Symbol("S"))[0]
    sub = sp.expand(lf[1] - lg[1] - (rf[1] - rg[1]))
    a3 = sp.solve(sub.subs(A2**2, a2sq), A3)[0]
    return sp.simplify(a2sq), sp.simplify(a3)


def numeric_a2sq_a3(tag, gamma, lam, alpha, c1, c2, d2):
    a2sq, a3 = symbolic_a2sq_a3(tag, gamma, lam, alpha)
    env = {C1: c1, C2: c2, D2: d2}
    return complex(a2sq.subs(env).evalf(30)), complex(a3.subs(env).evalf(30))


def bounds_from_weights(tag, gamma, lam, alpha, mu):
    """Bounds implied by |c_2|, |d_2| <= 2 and the symbolic weights.

    With a_2^2 = A (c_2 + d_2) and a_3 = (A + B) c_2 + (A - B) d_2:
    |a_2| <= 2 sqrt|A|, |a_3| <= 4|A| + 4|B| by the triangle inequality on
    each term, and |a_3 - mu a_2^2| <= 2 (|H + B| + |H - B|) with H = (1 - mu) A.
    """
    a2sq, a3 = symbolic_a2sq_a3(tag, gamma, lam, alpha)
    A = complex(a2sq.coeff(C2).evalf(30))
    B = complex((a3.coeff(C2) - a3.coeff(D2)).evalf(30)) / 2
    H = (1 - mu) * A
    return 2 * abs(A) ** 0.5, 4 * abs(A) + 4 * abs(B), 2 * (abs(H + B) + abs(H - B))
