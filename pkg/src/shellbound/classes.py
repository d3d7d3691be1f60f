"""The four bi-univalent classes as executable operators.

Each class is defined by an operator Phi[f] subordinate to the shell-like
generator, for f and for its inverse g.  Matching the z and z^2 coefficients
of Phi[f] = p(u(z)) and Phi[g] = p(v(w)) against the Carathéodory data of
u and v gives closed forms for a_2^2 and a_3:

    a_2^2 = gamma_eff^2 tau^2 (c_2 + d_2) / den
    a_3   = a_2^2 + gamma_eff tau (c_2 - d_2) / (4 scale)

with the per-class constants collected in :func:`class_terms`.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import DegenerateDenominator, InvalidSpec, NotNormalized
from .series import TruncatedSeries, power
from .shell import TAU

TAGS = ("WSL", "RSL", "SLB", "PSL")
DEGENERATE_TOL = 1e-14


@dataclass(frozen=True)
class ClassSpec:
    tag: str
    gamma: complex = 1.0
    lam: float = 0.0
    alpha: float = 0.0
    mu: float = 0.0
    permissive: bool = False

    def __post_init__(self):
        tag = self.tag.upper()
        object.__setattr__(self, "tag", tag)
        if tag not in TAGS:
            raise InvalidSpec(f"unknown class {self.tag!r}")
        g = complex(self.gamma)
        if g == 0:
            raise InvalidSpec("gamma must be non-zero")
        if g.imag != 0 or g.real < 0:
            if not self.permissive:
                raise InvalidSpec("gamma must be a positive real unless permissive=True")
        else:
            object.__setattr__(self, "gamma", g.real)
        lam, alpha = self.lam, self.alpha
        if tag == "WSL" and (alpha < 0 or lam < 0):
            raise InvalidSpec("WSL needs alpha >= 0 and lambda >= 0")
        if tag == "RSL" and lam < 0:
            raise InvalidSpec("RSL needs lambda >= 0")
        if tag == "SLB" and lam < 1:
            raise InvalidSpec("SLB needs lambda >= 1")
        if tag == "PSL" and not 0 <= lam <= 1:
            raise InvalidSpec("PSL needs 0 <= lambda <= 1")
        if tag in ("SLB", "PSL") and g != 1:
            raise InvalidSpec(f"{tag} carries no gamma parameter; leave gamma = 1")

    def with_mu(self, mu: float) -> "ClassSpec":
        return ClassSpec(self.tag, self.gamma, self.lam, self.alpha, mu, self.permissive)

    def to_json(self) -> dict:
        d = asdict(self)
        if isinstance(d["gamma"], complex):
            d["gamma"] = [d["gamma"].real, d["gamma"].imag]
        return d


def special_class(name: str, gamma: float = 1.0, lam: float = 0.0, alpha: float = 0.0, mu: float = 0.0) -> ClassSpec:
    """Named special cases expressed through their parent class."""
    name = name.upper()
    if name == "FSL":
        return ClassSpec("WSL", gamma, lam, 1 + 2 * lam, mu)
    if name == "BSL":
        return ClassSpec("WSL", gamma, 0.0, alpha, mu)
    if name == "HSL":
        return ClassSpec("WSL", gamma, 0.0, 1.0, mu)
    if name == "SL":
        return ClassSpec("RSL", gamma, 0.0, 0.0, mu) if gamma != 1 else ClassSpec("PSL", 1.0, 0.0, 0.0, mu)
    if name == "KSL":
        return ClassSpec("PSL", 1.0, 1.0, 0.0, mu)
    if name in TAGS:
        return ClassSpec(name, gamma, lam, alpha, mu)
    raise InvalidSpec(f"unknown class {name!r}")


@dataclass(frozen=True)
class ClassTerms:
    gamma_eff: complex
    linear: float  # (x.6): linear * a_2 = gamma_eff c_1 tau / 2
    scale: float
    M: complex
    den: complex  # a_2^2 = gamma_eff^2 tau^2 (c_2 + d_2) / den


def class_terms(spec: ClassSpec) -> ClassTerms:
    g, lam, al, t = spec.gamma, spec.lam, spec.alpha, TAU
    if spec.tag == "WSL":
        s = 1 + 2 * al + 2 * lam
        M = g * t * s + (1 - 3 * t) * (1 + al) ** 2
        return ClassTerms(g, 1 + al, s, M, 4 * M)
    if spec.tag == "RSL":
        M = g * t * (2 + lam) * (1 + lam) + 2 * (1 - 3 * t) * (1 + lam) ** 2
        return ClassTerms(g, 1 + lam, 2 + lam, M, 2 * M)
    if spec.tag == "SLB":
        M = (2 * lam - 1) * (t * (3 - 5 * lam) + 2 * lam - 1)
        return ClassTerms(1.0, 2 * lam - 1, 3 * lam - 1, M, 4 * M)
    M = (1 + lam) ** 2 - 2 * t * (2 * lam**2 + 2 * lam + 1)
    return ClassTerms(1.0, 1 + lam, 2 * (1 + 2 * lam), M, 4 * M)


def _z_f2(f: TruncatedSeries) -> TruncatedSeries:
    """z f''(z) at order N - 1."""
    k = np.arange(f.order)
    return TruncatedSeries(k * (k + 1) * f.coeffs[1:])


def class_operator(spec: ClassSpec, f: TruncatedSeries) -> TruncatedSeries:
    """The class-defining expression in f, returned at order N - 1."""
    if not f.is_normalized():
        raise NotNormalized("class operators act on f = z + a_2 z^2 + ...")
    q = f.div_z()
    fp = f.derivative()
    lam = spec.lam
    if spec.tag == "WSL":
        x = (1 - spec.alpha + 2 * lam) * q + (spec.alpha - 2 * lam) * fp + lam * _z_f2(f)
        return 1 + (x - 1) / spec.gamma
    if spec.tag == "RSL":
        x = fp * power(q, lam - 1)
        return 1 + (x - 1) / spec.gamma
    if spec.tag == "SLB":
        return power(fp, lam) / q
    return (fp + lam * _z_f2(f)) / ((1 - lam) * q + lam * fp)


@dataclass(frozen=True)
class SynthesisResult:
    a2sq: complex
    a2: complex
    a3: complex
    fs: complex
    a2_linear: complex = field(default=0j)
    consistent: bool = False


def synthesize_arrays(spec: ClassSpec, c1, c2, d2):
    """Vectorised (a2sq, a3, a2_linear) for arrays of c_1, c_2, d_2."""
    terms = class_terms(spec)
    if abs(terms.den) < DEGENERATE_TOL or terms.linear == 0 or terms.scale == 0:
        raise DegenerateDenominator(f"{spec.tag} denominator vanishes at {spec}")
    g, t = terms.gamma_eff, TAU
    c1, c2, d2 = (np.asarray(v, dtype=complex) for v in (c1, c2, d2))
    a2sq = g * g * t * t * (c2 + d2) / terms.den
    a3 = a2sq + g * t * (c2 - d2) / (4 * terms.scale)
    a2_linear = g * c1 * t / (2 * terms.linear)
    return a2sq, a3, a2_linear


def synthesize(spec: ClassSpec, pair) -> SynthesisResult:
    """Map a Carathéodory pair to (a_2^2, a_2, a_3) through the class equations.

    ``consistent`` reports whether the a_2 forced by the z-coefficient
    equation squares to the a_2^2 above; only then can an actual f in the
    class produce this pair.
    """
    a2sq, a3, a2_lin = (complex(v) for v in synthesize_arrays(spec, pair.c[0], pair.c[1], pair.d[1]))
    consistent = abs(a2_lin * a2_lin - a2sq) <= 1e-9 * max(1.0, abs(a2sq))
    return SynthesisResult(
        a2sq=a2sq,
        a2=complex(np.sqrt(a2sq)),
        a3=a3,
        fs=a3 - spec.mu * a2sq,
        a2_linear=a2_lin,
        consistent=bool(consistent),
    )


def consistent_sum(spec: ClassSpec, c1: complex) -> complex:
    """The value of c_2 + d_2 that makes a pair with this c_1 consistent."""
    terms = class_terms(spec)
    g, t = terms.gamma_eff, TAU
    a2 = g * c1 * t / (2 * terms.linear)
    return a2 * a2 * terms.den / (g * g * t * t)


def fs_functional(a2: complex, a3: complex, mu: float) -> float:
    return float(abs(a3 - mu * a2 * a2))
