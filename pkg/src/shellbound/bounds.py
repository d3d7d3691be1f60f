"""Closed-form coefficient and Fekete-Szegő bounds.

Each parent class has its own evaluator written out from the bound
formulas, and each named special case (FSL, BSL, HSL, SL, KSL) has a
separate evaluator in its reduced form.  Keeping the special cases as
independent code paths is what makes the reduction checks meaningful.

Fekete-Szegő bounds come in two branches: with ``t = gamma |tau| / (4 scale)``
the bound is ``4 t`` while ``|h(mu)| <= t`` (inner) and ``4 |h(mu)|`` beyond
(outer).
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .classes import ClassSpec, class_terms, special_class
from .errors import DegenerateDenominator, InvalidSpec
from .shell import TAU

ABS_TAU = abs(TAU)
REDUCTION_MUS = (0.0, 0.5, 1.0, 2.0)


@dataclass(frozen=True)
class BoundReport:
    a2_bound: float
    a3_bound: float
    fs_bound: float
    h_mu: float
    threshold: float
    branch: str
    denominator: float
    M: float

    def to_json(self) -> dict:
        return asdict(self)


def _sqrt_radicand(x: float, what: str) -> float:
    if not x > 0:
        raise DegenerateDenominator(f"{what} radicand {x!r} is not positive")
    return math.sqrt(x)


def _positive(x: float, what: str) -> float:
    if not x > 0:
        raise DegenerateDenominator(f"{what} = {x!r} is not positive")
    return x


def _branch(h: float, threshold: float, inner: float) -> tuple[float, str]:
    if abs(h) <= threshold:
        return inner, "inner"
    return 4 * abs(h), "outer"


# -- parent classes --------------------------------------------------------
def _wsl(gamma: float, lam: float, alpha: float, mu: float) -> BoundReport:
    g, t, at = gamma, TAU, ABS_TAU
    s = _positive(1 + 2 * alpha + 2 * lam, "1 + 2 alpha + 2 lambda")
    D = g * t * s + (1 - 3 * t) * (1 + alpha) ** 2
    a2 = g * at / _sqrt_radicand(D, "WSL")
    a3 = g * at * ((1 - 3 * t) * (1 + alpha) ** 2) / (s * D)
    h = (1 - mu) * g**2 * t**2 / (4 * D)
    thr = g * at / (4 * s)
    fs, branch = _branch(h, thr, g * at / s)
    return BoundReport(a2, a3, fs, h, thr, branch, 4 * D, D)


def _rsl(gamma: float, lam: float, mu: float) -> BoundReport:
    g, t, at = gamma, TAU, ABS_TAU
    M = g * t * (2 + lam) * (1 + lam) + 2 * (1 - 3 * t) * (1 + lam) ** 2
    a2 = math.sqrt(2) * g * at / _sqrt_radicand(M, "RSL")
    a3 = g * at * (M - 2 * (2 + lam) * g * t) / ((2 + lam) * M)
    h = (1 - mu) * g**2 * t**2 / (2 * M)
    thr = g * at / (4 * (2 + lam))
    fs, branch = _branch(h, thr, g * at / (2 + lam))
    return BoundReport(a2, a3, fs, h, thr, branch, 2 * M, M)


def _slb(lam: float, mu: float) -> BoundReport:
    t, at = TAU, ABS_TAU
    bracket = t * (3 - 5 * lam) + 2 * lam - 1
    M = (2 * lam - 1) * bracket
    a2 = at / _sqrt_radicand(M, "SLB")
    s = _positive(3 * lam - 1, "3 lambda - 1")
    a3 = at * ((2 * lam - 1) ** 2 - 2 * (5 * lam**2 - 4 * lam + 1) * t) / ((2 * lam - 1) * s * bracket)
    h = (1 - mu) * t**2 / (4 * M)
    thr = at / (4 * s)
    fs, branch = _branch(h, thr, at / s)
    return BoundReport(a2, a3, fs, h, thr, branch, 4 * M, M)


def _psl(lam: float, mu: float) -> BoundReport:
    t, at = TAU, ABS_TAU
    M = (1 + lam) ** 2 - 2 * t * (2 * lam**2 + 2 * lam + 1)
    a2 = at / _sqrt_radicand(M, "PSL")
    a3 = at * (1 - 4 * t) * (1 + lam) ** 2 / (2 * (1 + 2 * lam) * M)
    h = (1 - mu) * t**2 / (4 * M)
    thr = at / (8 * (1 + 2 * lam))
    fs, branch = _branch(h, thr, at / (2 + 4 * lam))
    return BoundReport(a2, a3, fs, h, thr, branch, 4 * M, M)


def _permissive(spec: ClassSpec, mu: float) -> BoundReport:
    """Complex-gamma reading: moduli of the denominator and of each FS weight.

    With a_3 - mu a_2^2 = (H + T) c_2 + (H - T) d_2 and |c_2|, |d_2| <= 2 the
    bound is 2 (|H + T| + |H - T|), which equals the two-branch form when H
    and T are real.
    """
    terms = class_terms(spec)
    if abs(terms.den) == 0:
        raise DegenerateDenominator(f"{spec.tag} denominator vanishes")
    g, t = terms.gamma_eff, TAU
    a2 = 2 * abs(g) * ABS_TAU / math.sqrt(abs(terms.den))
    a3 = abs(g) * ABS_TAU / terms.scale + a2 * a2
    H = (1 - mu) * g * g * t * t / terms.den
    T = g * t / (4 * terms.scale)
    fs = 2 * (abs(H + T) + abs(H - T))
    branch = "inner" if abs(H) <= abs(T) else "outer"
    return BoundReport(a2, a3, fs, abs(H), abs(T), branch, abs(terms.den), abs(terms.M))


def bound_fs(spec: ClassSpec, mu: float | None = None) -> BoundReport:
    """Full report for ``spec``; ``mu`` defaults to ``spec.mu``."""
    mu = spec.mu if mu is None else mu
    if spec.permissive and isinstance(spec.gamma, complex):
        return _permissive(spec, mu)
    if spec.tag == "WSL":
        return _wsl(spec.gamma, spec.lam, spec.alpha, mu)
    if spec.tag == "RSL":
        return _rsl(spec.gamma, spec.lam, mu)
    if spec.tag == "SLB":
        return _slb(spec.lam, mu)
    return _psl(spec.lam, mu)


def bound_a2(spec: ClassSpec) -> float:
    return bound_fs(spec).a2_bound


def bound_a3(spec: ClassSpec) -> float:
    return bound_fs(spec).a3_bound


# -- special cases in reduced form -----------------------------------------
def fsl_bounds(gamma: float, lam: float, mu: float) -> BoundReport:
    g, t, at = gamma, TAU, ABS_TAU
    D = 3 * g * t * (1 + 2 * lam) + 4 * (1 - 3 * t) * (1 + lam) ** 2
    a2 = g * at / _sqrt_radicand(D, "FSL")
    a3 = 4 * g * at * (1 - 3 * t) * (1 + lam) ** 2 / (3 * (1 + 2 * lam) * D)
    h = (1 - mu) * g**2 * t**2 / (4 * D)
    thr = g * at / (12 + 24 * lam)
    fs, branch = _branch(h, thr, g * at / (3 + 6 * lam))
    return BoundReport(a2, a3, fs, h, thr, branch, 4 * D, D)


def bsl_bounds(gamma: float, alpha: float, mu: float) -> BoundReport:
    g, t, at = gamma, TAU, ABS_TAU
    D = g * t * (1 + 2 * alpha) + (1 - 3 * t) * (1 + alpha) ** 2
    a2 = g * at / _sqrt_radicand(D, "BSL")
    a3 = g * at * (1 - 3 * t) * (1 + alpha) ** 2 / ((1 + 2 * alpha) * D)
    h = (1 - mu) * g**2 * t**2 / (4 * D)
    thr = g * at / (4 + 8 * alpha)
    fs, branch = _branch(h, thr, g * at / (1 + 2 * alpha))
    return BoundReport(a2, a3, fs, h, thr, branch, 4 * D, D)


def hsl_bounds(gamma: float, mu: float) -> BoundReport:
    g, t, at = gamma, TAU, ABS_TAU
    D = 3 * g * t + 4 * (1 - 3 * t)
    a2 = g * at / _sqrt_radicand(D, "HSL")
    a3 = 4 * g * at * (1 - 3 * t) / (3 * D)
    h = (1 - mu) * g**2 * t**2 / (4 * D)
    thr = g * at / 12
    fs, branch = _branch(h, thr, g * at / 3)
    return BoundReport(a2, a3, fs, h, thr, branch, 4 * D, D)


def sl_bounds(mu: float) -> BoundReport:
    """Shell-like starlike case; the FS switch is stated on |mu - 1|."""
    t, at = TAU, ABS_TAU
    a2 = at / math.sqrt(1 - 2 * t)
    a3 = at * (1 - 4 * t) / (2 - 4 * t)
    if abs(mu - 1) <= (1 - 2 * t) / (2 * at):
        fs, branch = at / 2, "inner"
    else:
        fs, branch = abs(1 - mu) * t**2 / (1 - 2 * t), "outer"
    h = (1 - mu) * t**2 / (4 * (1 - 2 * t))
    return BoundReport(a2, a3, fs, h, at / 8, branch, 4 * (1 - 2 * t), 1 - 2 * t)


def ksl_bounds(mu: float) -> BoundReport:
    """Shell-like convex case; the FS switch is stated on |mu - 1|."""
    t, at = TAU, ABS_TAU
    a2 = at / math.sqrt(4 - 10 * t)
    a3 = at * (1 - 4 * t) / (6 - 15 * t)
    if abs(mu - 1) <= (2 - 5 * t) / (3 * at):
        fs, branch = at / 6, "inner"
    else:
        fs, branch = abs(1 - mu) * t**2 / (4 - 10 * t), "outer"
    h = (1 - mu) * t**2 / (4 * (4 - 10 * t))
    return BoundReport(a2, a3, fs, h, at / 24, branch, 4 * (4 - 10 * t), 4 - 10 * t)


@dataclass(frozen=True)
class Corollary:
    """A named special case evaluated through its own reduced formulas."""

    name: str
    gamma: float = 1.0
    lam: float = 0.0
    alpha: float = 0.0

    def report(self, mu: float) -> BoundReport:
        n = self.name.upper()
        if n == "FSL":
            return fsl_bounds(self.gamma, self.lam, mu)
        if n == "BSL":
            return bsl_bounds(self.gamma, self.alpha, mu)
        if n == "HSL":
            return hsl_bounds(self.gamma, mu)
        if n == "SL":
            return sl_bounds(mu)
        if n == "KSL":
            return ksl_bounds(mu)
        raise InvalidSpec(f"no reduced evaluator for {self.name!r}")

    def parent(self) -> ClassSpec:
        return special_class(self.name, self.gamma, self.lam, self.alpha)


def report(target, mu: float) -> BoundReport:
    if isinstance(target, ClassSpec):
        return bound_fs(target, mu)
    return target.report(mu)


def reduction_check(a, b, mus=REDUCTION_MUS, fields=("a2_bound", "a3_bound", "fs_bound")) -> float:
    """Largest absolute disagreement between two targets over ``mus``."""
    worst = 0.0
    for mu in mus:
        ra, rb = report(a, mu), report(b, mu)
        for f in fields:
            worst = max(worst, abs(getattr(ra, f) - getattr(rb, f)))
    return worst


def fekete_sweep(target, mus) -> list[BoundReport]:
    return [report(target, float(mu)) for mu in mus]
