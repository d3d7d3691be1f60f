"""Carathéodory-class coefficient data and the Schwarz functions behind it.

A Carathéodory function h = 1 + c_1 z + c_2 z^2 + ... (Re h > 0) corresponds
to a Schwarz function w through h = (1 + w)/(1 - w).  The first two
coefficients range over the body

    |c_1| <= 2,   |c_2 - c_1^2/2| <= 2 - |c_1|^2/2,

and every point of it is realised by w(z) = z (a + s z)/(1 + conj(a) s z)
with a = c_1/2 and |s| <= 1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotSchwarz
from .series import TruncatedSeries

BODY_TOL = 1e-12
FAMILIES = ("rotation", "quadratic-blaschke", "body-direct")


def body_check(c1: complex, c2: complex) -> bool:
    return bool(abs(c1) <= 2 + BODY_TOL and abs(c2 - c1 * c1 / 2) <= 2 - abs(c1) ** 2 / 2 + BODY_TOL)


def body_violation(c1, c2) -> np.ndarray:
    """Vectorised amount by which (c1, c2) leaves the body; <= 0 inside."""
    c1 = np.asarray(c1)
    c2 = np.asarray(c2)
    return np.maximum(np.abs(c1) - 2, np.abs(c2 - c1 * c1 / 2) - (2 - np.abs(c1) ** 2 / 2))


@dataclass(frozen=True, eq=False)
class CaratheodoryPair:
    """Coefficients c_1..c_K of h and d_1..d_K of k, tied by d_1 = -c_1."""

    c: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        c = np.array(self.c, dtype=complex).ravel()
        d = np.array(self.d, dtype=complex).ravel()
        if c.size < 2 or c.size != d.size:
            raise ValueError("c and d need equal length K >= 2")
        if abs(c[0] + d[0]) > 1e-12:
            raise ValueError(f"c_1 = {c[0]} but d_1 = {d[0]}; need c_1 = -d_1")
        if np.any(np.abs(c) > 2 + BODY_TOL) or np.any(np.abs(d) > 2 + BODY_TOL):
            raise ValueError("coefficient of modulus > 2")
        if not (body_check(c[0], c[1]) and body_check(d[0], d[1])):
            raise ValueError("(c_1, c_2) or (d_1, d_2) outside the coefficient body")
        c.setflags(write=False)
        d.setflags(write=False)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @property
    def K(self) -> int:
        return self.c.size

    @property
    def c1(self) -> complex:
        return complex(self.c[0])

    @property
    def c2(self) -> complex:
        return complex(self.c[1])

    @property
    def d2(self) -> complex:
        return complex(self.d[1])

    def rotated(self, theta: float) -> "CaratheodoryPair":
        """Coefficients of h(e^{i theta} z), k(e^{i theta} z)."""
        k = np.arange(1, self.K + 1)
        rot = np.exp(1j * theta * k)
        return CaratheodoryPair(self.c * rot, self.d * rot)

    def to_json(self) -> dict:
        return {
            "c": [[float(v.real), float(v.imag)] for v in self.c],
            "d": [[float(v.real), float(v.imag)] for v in self.d],
        }


def schwarz_to_caratheodory(w: TruncatedSeries, grid: int = 64, radius: float = 0.95) -> TruncatedSeries:
    if abs(w[0]) > 1e-14:
        raise NotSchwarz("w(0) != 0")
    z = radius * np.exp(2j * np.pi * np.arange(grid) / grid)
    if np.any(np.abs(w(z)) >= 1):
        raise NotSchwarz(f"|w| >= 1 somewhere on |z| = {radius}")
    return (1 + w) / (1 - w)


def caratheodory_to_schwarz(h: TruncatedSeries) -> TruncatedSeries:
    return (h - 1) / (h + 1)


def blaschke_schwarz(a: complex, s: complex, order: int) -> TruncatedSeries:
    """w(z) = z (a + s z) / (1 + conj(a) s z)."""
    num = TruncatedSeries.from_coeffs([0, a, s], order)
    den = TruncatedSeries.from_coeffs([1, np.conj(a) * s], order)
    return num / den


def _coeffs_from_schwarz(w: TruncatedSeries) -> np.ndarray:
    # Blaschke maps built here are Schwarz analytically; the numerical check in
    # schwarz_to_caratheodory would test the truncation instead.
    return np.array(((1 + w) / (1 - w)).coeffs[1:])


def _realise(c1: complex, c2: complex, K: int) -> np.ndarray:
    """Coefficients c_1..c_K of a Carathéodory function with the given first two."""
    a = c1 / 2
    room = 1 - abs(a) ** 2
    s = (c2 - c1 * c1 / 2) / (2 * room) if room > 1e-15 else 0.0
    if abs(s) > 1:
        s /= abs(s)
    c = _coeffs_from_schwarz(blaschke_schwarz(a, s, K))
    # first two pinned exactly; the realisation reproduces them to rounding
    c[0], c[1] = c1, c2
    return c


def rotation_pair(eta: complex, K: int = 2) -> CaratheodoryPair:
    """h from w = eta z, k from w = -eta z; all |c_k| = |d_k| = 2."""
    k = np.arange(1, K + 1)
    return CaratheodoryPair(2 * eta**k, 2 * (-eta) ** k)


def blaschke_pair(a: complex, zeta_d: complex = 1.0, K: int = 2) -> CaratheodoryPair:
    """h from z(a + z)/(1 + conj(a) z), k from z(-a + zeta_d z)/(1 - conj(a) zeta_d z)."""
    c = _coeffs_from_schwarz(blaschke_schwarz(a, 1.0, max(K, 2)))
    d = _coeffs_from_schwarz(blaschke_schwarz(-a, zeta_d, max(K, 2)))
    d[0] = -c[0]
    return CaratheodoryPair(c[:K], d[:K])


def body_pair(c1: float, c2: complex, d2: complex, K: int = 2) -> CaratheodoryPair:
    return CaratheodoryPair(_realise(c1, c2, K), _realise(-c1, d2, K))


def _unit(rng, n):
    return np.exp(2j * np.pi * rng.random(n))


def _disk(rng, n, radius=1.0):
    return radius * np.sqrt(rng.random(n)) * _unit(rng, n)


def sample_pair(seed: int, K: int = 2, family: str = "body-direct") -> CaratheodoryPair:
    if K < 2:
        raise ValueError("K must be >= 2")
    rng = np.random.default_rng(seed)
    if family == "rotation":
        return rotation_pair(complex(_unit(rng, 1)[0]), K)
    if family == "quadratic-blaschke":
        return blaschke_pair(complex(_disk(rng, 1)[0]), complex(_unit(rng, 1)[0]), K)
    if family == "body-direct":
        c1 = float(rng.uniform(-2, 2))
        rho = 2 - c1 * c1 / 2
        c2 = c1 * c1 / 2 + complex(_disk(rng, 1, rho)[0])
        d2 = c1 * c1 / 2 + complex(_disk(rng, 1, rho)[0])
        return body_pair(c1, c2, d2, K)
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def sample_batch(rng: np.random.Generator, n: int, family: str):
    """Vectorised draw of (c1, c2, d2) for ``n`` pairs; d1 = -c1 implicitly.

    ``family`` may also be "mixed", which splits ``n`` evenly over the three
    families in a fixed order.
    """
    if family == "mixed":
        parts = [sample_batch(rng, m, f) for f, m in zip(FAMILIES, _split(n, 3))]
        return tuple(np.concatenate(p) for p in zip(*parts))
    if family == "rotation":
        eta = _unit(rng, n)
        return 2 * eta, 2 * eta**2, 2 * eta**2
    if family == "quadratic-blaschke":
        a = _disk(rng, n)
        zeta = _unit(rng, n)
        room = 1 - np.abs(a) ** 2
        return 2 * a, 2 * room + 2 * a * a, 2 * zeta * room + 2 * a * a
    if family == "body-direct":
        c1 = rng.uniform(-2, 2, n).astype(complex)
        centre = c1 * c1 / 2
        rho = 2 - np.abs(c1) ** 2 / 2
        return c1, centre + _disk(rng, n, rho), centre + _disk(rng, n, rho)
    raise ValueError(f"unknown family {family!r}")


def _split(n: int, parts: int) -> list[int]:
    q, r = divmod(n, parts)
    return [q + (i < r) for i in range(parts)]
