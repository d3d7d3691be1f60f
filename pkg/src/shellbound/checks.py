"""Runtime invariant suite behind ``shellbound verify``.

Every check returns ``(passed, detail)``.  They are deliberately cheap
enough to run in a few seconds, except the dominance sweep whose sample
count is a parameter.
"""
from __future__ import annotations

from typing import Callable

import numpy as np

from . import bounds, caratheodory, classes, search, series, shell
from .classes import ClassSpec
from .errors import DegenerateDenominator

CHECKS: dict[str, Callable[..., tuple[bool, str]]] = {}


def check(name):
    def deco(fn):
        CHECKS[name] = fn
        return fn

    return deco


def _random_normalized(rng, order=12, scale=1.0):
    c = np.zeros(order + 1, dtype=complex)
    c[1] = 1
    mod = scale * np.sqrt(rng.random(order - 1))
    c[2:] = mod * np.exp(2j * np.pi * rng.random(order - 1))
    return series.TruncatedSeries(c)


@check("series.revert_roundtrip")
def _revert_roundtrip(seed=0, **_):
    """Absolute 1e-10 at the default order.

    With |a_k| <= 1 the reverted coefficients reach ~1e6 at order 12, so
    rounding g_12 alone can cost ~1e-10; the relative error is reported too.
    """
    rng = np.random.default_rng(seed)
    worst = rel = 0.0
    for _ in range(200):
        f = _random_normalized(rng)
        g = series.revert(f)
        err = np.abs(series.compose(f, g).coeffs - series.TruncatedSeries.identity(f.order).coeffs).max()
        worst = max(worst, float(err))
        rel = max(rel, float(err / np.abs(g.coeffs).max()))
    return worst < 1e-10, f"max |f(g(w)) - w| coefficient error {worst:.2e} (relative to max |g_k|: {rel:.2e})"


@check("series.revert_closed_forms")
def _revert_closed(seed=0, **_):
    rng = np.random.default_rng(seed + 1)
    worst = 0.0
    for _ in range(200):
        f = _random_normalized(rng, order=6)
        a2, a3, a4 = f[2], f[3], f[4]
        g = series.revert(f)
        expect = np.array([-a2, 2 * a2 * a2 - a3, -(5 * a2**3 - 5 * a2 * a3 + a4)])
        worst = max(worst, float(np.abs(g.coeffs[2:5] - expect).max()))
    return worst < 1e-12, f"max deviation {worst:.2e}"


@check("series.mul_laws")
def _mul_laws(seed=0, **_):
    rng = np.random.default_rng(seed + 2)
    worst = 0.0
    for _ in range(100):
        a, b, c = (series.TruncatedSeries(rng.normal(size=13) + 1j * rng.normal(size=13)) for _ in range(3))
        worst = max(worst, float(np.abs((a * b).coeffs - (b * a).coeffs).max()))
        worst = max(worst, float(np.abs(((a * b) * c).coeffs - (a * (b * c)).coeffs).max()))
    return worst < 1e-12, f"max deviation {worst:.2e}"


@check("series.div_mul_roundtrip")
def _div_mul(seed=0, **_):
    rng = np.random.default_rng(seed + 3)
    worst = 0.0
    for _ in range(100):
        a = series.TruncatedSeries(rng.normal(size=13) + 1j * rng.normal(size=13))
        b = rng.normal(size=13) + 1j * rng.normal(size=13)
        b[0] = 1
        b = series.TruncatedSeries(0.3 * b / np.abs(b).max())
        b = series.TruncatedSeries(np.concatenate(([1], b.coeffs[1:])))
        worst = max(worst, float(np.abs(((a / b) * b).coeffs - a.coeffs).max()))
    return worst < 1e-10, f"max deviation {worst:.2e}"


@check("shell.ptilde_long_division")
def _ptilde_div(**_):
    worst = 0.0
    for n in range(1, 41):
        num = series.TruncatedSeries.from_coeffs([1, 0, shell.TAU**2], n)
        den = series.TruncatedSeries.from_coeffs([1, -shell.TAU, -(shell.TAU**2)], n)
        worst = max(worst, float(np.abs(shell.ptilde_coeffs(n).coeffs - (num / den).coeffs).max()))
    return worst < 1e-12, f"max coefficient error {worst:.2e}"


@check("shell.alternating_signs")
def _alternating(**_):
    c = shell.ptilde_coeffs(40).coeffs.real[1:]
    ok = bool(np.all(np.sign(c) == np.where(np.arange(1, 41) % 2, -1, 1)))
    return ok, "sign(coefficient n) = (-1)^n for n = 1..40"


@check("shell.binet")
def _binet(**_):
    bad = [n for n in range(41) if shell.binet_u(n) != shell.fibonacci_u(n)]
    return not bad, f"mismatches at {bad}" if bad else "Binet = recurrence for n <= 40"


@check("shell.curve_residual")
def _curve(**_):
    pts = shell.curve_sample(1.0, 4096)
    worst = max(p.residual for p in pts)
    return worst < 1e-8, f"max trisectrix residual {worst:.2e}"


@check("shell.loops")
def _loops(**_):
    at_r0 = shell.curve_has_loop(shell.R0)
    at_07 = shell.curve_has_loop(0.7)
    return (not at_r0) and at_07, f"loop at r0: {at_r0}, loop at 0.7: {at_07}"


@check("shell.beta")
def _beta(**_):
    rs = [0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999]
    vals = [shell.min_real_part(r) for r in rs]
    monotone = all(a > b for a, b in zip(vals, vals[1:]))
    floor = min(vals) >= shell.BETA - 1e-3
    return monotone and floor, f"min Re over r = {rs}: {[round(v, 6) for v in vals]}"


@check("caratheodory.sampling")
def _sampling(seed=0, **_):
    rng = np.random.default_rng(seed + 4)
    worst = -np.inf
    for fam in caratheodory.FAMILIES:
        c1, c2, d2 = caratheodory.sample_batch(rng, 10_000, fam)
        d1 = -c1
        for v in (c1, c2, d2):
            worst = max(worst, float(np.abs(v).max()) - 2)
        worst = max(worst, float(caratheodory.body_violation(c1, c2).max()))
        worst = max(worst, float(caratheodory.body_violation(d1, d2).max()))
    return worst <= 1e-12, f"largest excursion outside the constraints {worst:.2e}"


@check("caratheodory.schwarz_roundtrip")
def _schwarz(seed=0, **_):
    rng = np.random.default_rng(seed + 5)
    worst = 0.0
    for _ in range(50):
        # |a| <= 0.7 keeps the order-12 truncation of w inside the disk at |z| = 0.95
        a = 0.7 * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
        pair = caratheodory.blaschke_pair(a, np.exp(2j * np.pi * rng.random()), 12)
        h = series.TruncatedSeries(np.concatenate(([1], pair.c)))
        back = caratheodory.schwarz_to_caratheodory(caratheodory.caratheodory_to_schwarz(h))
        worst = max(worst, float(np.abs(back.coeffs - h.coeffs).max()))
    return worst < 1e-10, f"max deviation {worst:.2e}"


def _random_spec(rng) -> ClassSpec:
    tag = classes.TAGS[int(rng.integers(4))]
    if tag == "WSL":
        return ClassSpec(tag, float(rng.uniform(0.2, 1.5)), float(rng.uniform(0, 2)), float(rng.uniform(0, 3)))
    if tag == "RSL":
        return ClassSpec(tag, float(rng.uniform(0.2, 1.5)), float(rng.uniform(0, 2)))
    if tag == "SLB":
        return ClassSpec(tag, 1.0, float(rng.uniform(1, 3)))
    return ClassSpec(tag, 1.0, float(rng.uniform(0, 1)))


@check("classes.operator_matches_equations")
def _operator(seed=0, **_):
    """Consistent pairs: the class operator of f and of f^{-1} must reproduce p(u), p(v)."""
    rng = np.random.default_rng(seed + 6)
    t = shell.TAU
    worst = 0.0
    for _ in range(100):
        spec = _random_spec(rng)
        c1 = complex(rng.normal(), rng.normal()) * 0.5
        delta = complex(rng.normal(), rng.normal())
        total = classes.consistent_sum(spec, c1)
        c2, d2 = (total + delta) / 2, (total - delta) / 2
        a2sq, a3, a2 = (complex(v) for v in classes.synthesize_arrays(spec, c1, c2, d2))
        f = series.TruncatedSeries.from_coeffs([0, 1, a2, a3], 6)
        lf = classes.class_operator(spec, f).coeffs
        lg = classes.class_operator(spec, series.revert(f)).coeffs
        d1 = -c1
        rhs_f = [c1 * t / 2, (c2 - c1 * c1 / 2) * t / 2 + 0.75 * c1 * c1 * t * t]
        rhs_g = [d1 * t / 2, (d2 - d1 * d1 / 2) * t / 2 + 0.75 * d1 * d1 * t * t]
        worst = max(worst, abs(a2 * a2 - a2sq), *(abs(x - y) for x, y in zip(lf[1:3], rhs_f)))
        worst = max(worst, *(abs(x - y) for x, y in zip(lg[1:3], rhs_g)))
    return worst < 1e-9, f"max coefficient mismatch {worst:.2e}"


@check("classes.reductions")
def _class_reductions(seed=0, **_):
    rng = np.random.default_rng(seed + 7)
    worst = 0.0
    for _ in range(100):
        c1 = float(rng.uniform(-2, 2))
        c2, d2 = (complex(v[0]) for v in caratheodory.sample_batch(rng, 1, "body-direct")[1:])
        g, lam = float(rng.uniform(0.2, 1.5)), float(rng.uniform(0, 2))
        groups = [
            [ClassSpec("WSL", g, lam, 1 + 2 * lam), classes.special_class("FSL", g, lam)],
            [ClassSpec("WSL", g, 0.0, 1.0), ClassSpec("RSL", g, 1.0)],
            [ClassSpec("RSL", 1.0, 0.0), ClassSpec("SLB", 1.0, 1.0), ClassSpec("PSL", 1.0, 0.0)],
        ]
        for grp in groups:
            vals = [classes.synthesize_arrays(s, c1, c2, d2)[:2] for s in grp]
            for v in vals[1:]:
                worst = max(worst, abs(v[0] - vals[0][0]), abs(v[1] - vals[0][1]))
    return worst < 1e-12, f"max disagreement {worst:.2e}"


@check("bounds.fs_continuity")
def _continuity(seed=0, **_):
    rng = np.random.default_rng(seed + 8)
    worst = 0.0
    for _ in range(1000):
        try:
            rep = bounds.bound_fs(_random_spec(rng), 1.0)
        except DegenerateDenominator:
            continue
        worst = max(worst, abs(rep.fs_bound - 4 * rep.threshold))
    return worst < 1e-15, f"max |inner - outer| at the switch {worst:.2e}"


@check("bounds.wsl_a2_decreasing_in_alpha")
def _monotone(**_):
    vals = [bounds.bound_a2(ClassSpec("WSL", 1.0, 0.0, a)) for a in np.linspace(0, 5, 50)]
    return all(a > b for a, b in zip(vals, vals[1:])), f"a2 bound from {vals[0]:.6f} to {vals[-1]:.6f}"


REDUCTIONS = [
    (bounds.Corollary("FSL", 0.7, 0.5), ClassSpec("WSL", 0.7, 0.5, 2.0)),
    (bounds.Corollary("FSL", 1.3, 1.0), ClassSpec("WSL", 1.3, 1.0, 3.0)),
    (bounds.Corollary("BSL", 1.0, alpha=2.0), ClassSpec("WSL", 1.0, 0.0, 2.0)),
    (bounds.Corollary("BSL", 0.5, alpha=0.3), ClassSpec("WSL", 0.5, 0.0, 0.3)),
    (bounds.Corollary("HSL", 1.0), ClassSpec("WSL", 1.0, 0.0, 1.0)),
    (bounds.Corollary("HSL", 1.7), ClassSpec("RSL", 1.7, 1.0)),
    (ClassSpec("WSL", 1.7, 0.0, 1.0), ClassSpec("RSL", 1.7, 1.0)),
    (bounds.Corollary("SL"), ClassSpec("PSL", 1.0, 0.0)),
    (bounds.Corollary("SL"), ClassSpec("RSL", 1.0, 0.0)),
    (bounds.Corollary("SL"), ClassSpec("SLB", 1.0, 1.0)),
    (bounds.Corollary("KSL"), ClassSpec("PSL", 1.0, 1.0)),
]


@check("bounds.reductions")
def _bound_reductions(**_):
    worst = max(bounds.reduction_check(a, b) for a, b in REDUCTIONS)
    return worst < 1e-12, f"max disagreement over {len(REDUCTIONS)} reductions {worst:.2e}"


@check("search.dominance")
def _dominance(samples=100_000, seed=0, **_):
    results = search.probe_many(search.acceptance_grid(), samples, seed)
    worst = max(max(r.ratio_a2, r.ratio_a3, r.ratio_fs) for r in results)
    return worst <= 1 + 1e-9, f"{len(results)} specs x {samples} samples, largest ratio {worst:.12f}"


@check("search.rotation_invariance")
def _rotation(seed=0, **_):
    rng = np.random.default_rng(seed + 9)
    worst = 0.0
    for _ in range(100):
        spec = _random_spec(rng).with_mu(float(rng.uniform(-1, 2)))
        pair = caratheodory.sample_pair(int(rng.integers(1 << 31)), 2, "body-direct")
        rot = pair.rotated(float(rng.uniform(0, 2 * np.pi)))
        a, b = classes.synthesize(spec, pair), classes.synthesize(spec, rot)
        worst = max(worst, abs(abs(a.a2) - abs(b.a2)), abs(abs(a.fs) - abs(b.fs)))
    return worst < 1e-12, f"max change {worst:.2e}"


@check("search.determinism")
def _determinism(seed=0, **_):
    spec = ClassSpec("WSL", 1.0, 0.5, 1.0, 0.5)
    a = search.probe(spec, 20_000, seed).to_json()
    b = search.probe(spec, 20_000, seed).to_json()
    return a == b, "identical seed gives identical report"


def run_all(samples: int = 100_000, seed: int = 0, only=None):
    """Yield ``(name, passed, detail)`` for each registered check."""
    for name, fn in CHECKS.items():
        if only and not any(name.startswith(o) for o in only):
            continue
        try:
            ok, detail = fn(samples=samples, seed=seed)
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        yield name, bool(ok), detail
