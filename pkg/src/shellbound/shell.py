"""The shell-like generator p(z) = (1 + t^2 z^2) / (1 - t z - t^2 z^2), t = (1 - sqrt5)/2.

Its Taylor coefficients are (u_{n-1} + u_{n+1}) t^n with u_n the Fibonacci
numbers.  Closed-form evaluation goes through the partial-fraction split

    p(z) = -1 + 1/(1 + z) + 1/(1 - t^2 z),

which stays accurate next to the pole at z = -1.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import OverflowGuard, PoleProximity
from .series import MAX_ORDER, TruncatedSeries

SQRT5 = math.sqrt(5.0)
TAU = (1.0 - SQRT5) / 2.0
TAU_SQ = TAU * TAU
R0 = (3.0 - SQRT5) / 2.0
BETA = SQRT5 / 10.0

POLE_ARC = 1e-3
FIB_LIMIT = 90


@dataclass(frozen=True)
class ShellConstants:
    tau: float = TAU
    r0: float = R0
    beta: float = BETA


@dataclass(frozen=True)
class CurvePoint:
    t: float
    r: float
    w: complex
    residual: float | None = None


def fibonacci_u(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > FIB_LIMIT:
        raise OverflowGuard(f"u_{n} requested; limit is n <= {FIB_LIMIT}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def binet_u(n: int) -> int:
    """Binet's form ((1 - t)^n - t^n)/sqrt5, rounded."""
    return round(((1.0 - TAU) ** n - TAU**n) / SQRT5)


def tau_power_decompose(n: int) -> tuple[int, int]:
    """(u_n, u_{n-1}) with t^n = u_n t + u_{n-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    un, um = fibonacci_u(n), fibonacci_u(n - 1)
    defect = abs(TAU**n - (un * TAU + um))
    # u_n t and u_{n-1} cancel, so the float defect scales with their size
    assert defect <= 1e-15 * (un + um + 1), f"t^{n} decomposition defect {defect:.3e}"
    return un, um


def lucas_weight(n: int) -> int:
    """u_{n-1} + u_{n+1}, the integer factor of the n-th coefficient."""
    return fibonacci_u(n - 1) + fibonacci_u(n + 1)


def ptilde_coeffs(order: int) -> TruncatedSeries:
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"order must lie in [1, {MAX_ORDER}]")
    c = [1.0] + [lucas_weight(n) * TAU**n for n in range(1, order + 1)]
    return TruncatedSeries.from_coeffs(c, order)


def ptilde(z):
    """Closed-form p(z); vectorised over ``z``."""
    z = np.asarray(z, dtype=complex)
    out = -1.0 + 1.0 / (1.0 + z) + 1.0 / (1.0 - TAU_SQ * z)
    return out[()] if out.ndim == 0 else out


def ptilde_on_circle(t):
    """p(e^{it}) without forming 1 + e^{it}; 1/(1 + e^{it}) = (1 - i tan(t/2))/2."""
    t = np.asarray(t, dtype=float)
    c, s = np.cos(t), np.sin(t)
    den = 1.0 - 2.0 * TAU_SQ * c + TAU_SQ * TAU_SQ
    x = -0.5 + (1.0 - TAU_SQ * c) / den
    y = -0.5 * np.tan(t / 2.0) + TAU_SQ * s / den
    out = x + 1j * y
    return out[()] if out.ndim == 0 else out


def trisectrix_residual(w):
    """|(10x - sqrt5) y^2 - (sqrt5 - 2x)(sqrt5 x - 1)^2| at w = x + iy."""
    w = np.asarray(w, dtype=complex)
    x, y = w.real, w.imag
    return np.abs((10.0 * x - SQRT5) * y * y - (SQRT5 - 2.0 * x) * (SQRT5 * x - 1.0) ** 2)


def _in_pole_arc(t) -> np.ndarray:
    d = np.abs(np.mod(np.asarray(t, dtype=float), 2 * np.pi) - np.pi)
    return d < POLE_ARC


def curve_angles(r: float, count: int) -> np.ndarray:
    """Default sampling angles; on r = 1 they sweep the arc left open by the pole."""
    if count < 8:
        raise ValueError("count must be >= 8")
    if r == 1.0:
        span = 2 * np.pi - 2 * POLE_ARC
        return -np.pi + POLE_ARC + span * (np.arange(count) + 0.5) / count
    return np.linspace(0.0, 2 * np.pi, count, endpoint=False)


def curve_sample(r: float, count: int, angles=None) -> list[CurvePoint]:
    """Points p(r e^{it}); residuals against the trisectrix are filled in on r = 1."""
    if not 0.0 < r <= 1.0:
        raise ValueError("r must lie in (0, 1]")
    t = curve_angles(r, count) if angles is None else np.asarray(angles, dtype=float)
    if r == 1.0:
        if np.any(_in_pole_arc(t)):
            raise PoleProximity(f"angle within {POLE_ARC} rad of t = pi")
        w = ptilde_on_circle(t)
        res = trisectrix_residual(w)
        return [CurvePoint(float(ti), r, complex(wi), float(ri)) for ti, wi, ri in zip(t, w, res)]
    w = ptilde(r * np.exp(1j * t))
    return [CurvePoint(float(ti), r, complex(wi)) for ti, wi in zip(t, w)]


def _segments_cross(p: np.ndarray, q: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Proper (strict) crossing of segments pq and ab, broadcast."""

    def orient(o, u, v):
        return (u.real - o.real) * (v.imag - o.imag) - (u.imag - o.imag) * (v.real - o.real)

    d1 = orient(a, b, p)
    d2 = orient(a, b, q)
    d3 = orient(p, q, a)
    d4 = orient(p, q, b)
    return (d1 * d2 < 0) & (d3 * d4 < 0)


def has_self_intersection(points, block: int = 256) -> bool:
    """Scan every pair of non-adjacent edges of the closed polygon through ``points``."""
    pts = np.asarray(points, dtype=complex)
    m = pts.size
    start, end = pts, np.roll(pts, -1)
    idx = np.arange(m)
    for lo in range(0, m, block):
        i = idx[lo : lo + block, None]
        hit = _segments_cross(start[i], end[i], start[None, :], end[None, :])
        gap = (idx[None, :] - i) % m
        hit &= (gap > 1) & (gap < m - 1)
        if hit.any():
            return True
    return False


def curve_has_loop(r: float, count: int = 2048) -> bool:
    if not 0.0 < r < 1.0:
        raise ValueError("loop scan needs 0 < r < 1")
    t = np.linspace(0.0, 2 * np.pi, count, endpoint=False)
    return has_self_intersection(ptilde(r * np.exp(1j * t)))


def min_real_part(r: float, grid: int = 4096) -> float:
    if not 0.0 < r <= 0.999:
        raise ValueError("r must lie in (0, 0.999]")
    t = np.linspace(0.0, 2 * np.pi, grid, endpoint=False)
    return float(np.min(ptilde(r * np.exp(1j * t)).real))


def curve_csv(points: list[CurvePoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "r", "re", "im", "residual"])
    for p in points:
        res = "" if p.residual is None else f"{p.residual:.17g}"
        w.writerow([f"{p.t:.17g}", f"{p.r:.17g}", f"{p.w.real:.17g}", f"{p.w.imag:.17g}", res])
    return buf.getvalue()
