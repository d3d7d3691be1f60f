"""Brute-force probes of the coefficient bounds.

``probe`` draws random Carathéodory pairs, ``grid_oracle`` sweeps a
deterministic grid over the first-two-coefficient body.  Both push the
pairs through the class equations and report the largest |a_2|, |a_3| and
|a_3 - mu a_2^2| seen, next to the published bounds.
"""
from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, TextIO

import numpy as np

from .bounds import BoundReport, bound_fs
from .caratheodory import CaratheodoryPair, sample_batch
from .classes import ClassSpec, synthesize_arrays
from .errors import DegenerateDenominator, InvalidSpec

CHUNK = 1 << 16
MAX_GRID_STEPS = 64


@dataclass(frozen=True)
class ProbeResult:
    spec: ClassSpec
    samples: int
    max_a2: float
    max_a3: float
    max_fs: float
    ratio_a2: float
    ratio_a3: float
    ratio_fs: float
    argmax: CaratheodoryPair | None
    bounds: BoundReport | None = None

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "samples": self.samples,
            "max_a2": self.max_a2,
            "max_a3": self.max_a3,
            "max_fs": self.max_fs,
            "ratio_a2": self.ratio_a2,
            "ratio_a3": self.ratio_a3,
            "ratio_fs": self.ratio_fs,
            "argmax": None if self.argmax is None else self.argmax.to_json(),
        }


class _Running:
    """Max-reduction in a fixed order, so results do not depend on chunking."""

    def __init__(self):
        self.n = 0
        self.a2 = self.a3 = self.fs = 0.0
        self.arg = None

    def update(self, c1, c2, d2, a2, a3, fs):
        self.n += a2.size
        if a2.size == 0:
            return
        i = int(np.argmax(a2))
        if a2[i] > self.a2 or self.arg is None:
            self.a2 = float(a2[i])
            self.arg = (complex(c1.flat[i]), complex(c2.flat[i]), complex(d2.flat[i]))
        self.a3 = max(self.a3, float(a3.max()))
        self.fs = max(self.fs, float(fs.max()))

    def result(self, spec: ClassSpec, rep: BoundReport) -> ProbeResult:
        arg = None
        if self.arg is not None:
            c1, c2, d2 = self.arg
            arg = CaratheodoryPair([c1, c2], [-c1, d2])
        return ProbeResult(
            spec=spec,
            samples=self.n,
            max_a2=self.a2,
            max_a3=self.a3,
            max_fs=self.fs,
            ratio_a2=self.a2 / rep.a2_bound,
            ratio_a3=self.a3 / rep.a3_bound,
            ratio_fs=self.fs / rep.fs_bound,
            argmax=arg,
            bounds=rep,
        )


def _moduli(spec: ClassSpec, c1, c2, d2):
    a2sq, a3, _ = synthesize_arrays(spec, c1, c2, d2)
    return np.sqrt(np.abs(a2sq)), np.abs(a3), np.abs(a3 - spec.mu * a2sq)


def evaluate_pairs(spec: ClassSpec, c1, c2, d2) -> ProbeResult:
    """Probe result over an explicit set of (c1, c2, d2)."""
    rep = bound_fs(spec)
    c1, c2, d2 = (np.atleast_1d(np.asarray(v, dtype=complex)) for v in (c1, c2, d2))
    run = _Running()
    run.update(c1, c2, d2, *_moduli(spec, c1, c2, d2))
    return run.result(spec, rep)


def probe(
    spec: ClassSpec,
    samples: int,
    seed: int = 0,
    family: str = "mixed",
    dump: TextIO | None = None,
) -> ProbeResult:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rep = bound_fs(spec)
    sizes = [CHUNK] * (samples // CHUNK) + ([samples % CHUNK] if samples % CHUNK else [])
    seqs = np.random.SeedSequence(seed).spawn(len(sizes))
    writer = None
    if dump is not None:
        writer = csv.writer(dump, lineterminator="\n")
        writer.writerow(["index", "a2", "a3", "fs"])
    run = _Running()
    offset = 0
    for size, ss in zip(sizes, seqs):
        c1, c2, d2 = sample_batch(np.random.default_rng(ss), size, family)
        a2, a3, fs = _moduli(spec, c1, c2, d2)
        run.update(c1, c2, d2, a2, a3, fs)
        if writer is not None:
            for i in range(size):
                writer.writerow([offset + i, f"{a2[i]:.17g}", f"{a3[i]:.17g}", f"{fs[i]:.17g}"])
        offset += size
    return run.result(spec, rep)


def body_grid(c1: float, steps: int) -> np.ndarray:
    """Polar grid over the disk |c2 - c1^2/2| <= 2 - c1^2/2.

    ``steps`` radial levels (the centre counts as one) times ``steps`` angles
    starting at 0, so an even ``steps`` hits both real extremes.
    """
    centre = c1 * c1 / 2
    rho = 2 - c1 * c1 / 2
    if steps == 1 or rho <= 0:
        return np.array([centre], dtype=complex)
    radii = rho * np.arange(1, steps) / (steps - 1)
    ang = np.exp(2j * np.pi * np.arange(steps) / steps)
    ring = (radii[:, None] * ang[None, :]).ravel()
    return np.concatenate(([centre], centre + ring)).astype(complex)


def grid_oracle(spec: ClassSpec, steps: int) -> ProbeResult:
    """Exact maximum over a deterministic grid; c1 restricted to [0, 2] by rotation.

    a_2^2, a_3 and a_3 - mu a_2^2 are linear in (c2, d2), so the weights are
    computed once and each c1 slice is an outer sum over the body grid.
    """
    if not 1 <= steps <= MAX_GRID_STEPS:
        raise ValueError(f"steps must lie in [1, {MAX_GRID_STEPS}]")
    rep = bound_fs(spec)
    a2sq_w, a3_w, _ = synthesize_arrays(spec, 0.0, [1.0, 0.0], [0.0, 1.0])
    fs_w = a3_w - spec.mu * a2sq_w
    run = _Running()
    for c1 in np.linspace(0.0, 2.0, steps) if steps > 1 else [0.0]:
        pts = body_grid(float(c1), steps)

        def outer(w):
            return np.abs((w[0] * pts)[:, None] + (w[1] * pts)[None, :])

        a2sq = outer(a2sq_w)
        i, j = np.unravel_index(int(np.argmax(a2sq)), a2sq.shape)
        a2 = np.sqrt(a2sq[i, j])
        run.update(
            np.array([c1], dtype=complex),
            pts[[i]],
            pts[[j]],
            np.array([a2]),
            np.array([outer(a3_w).max()]),
            np.array([outer(fs_w).max()]),
        )
        run.n += pts.size * pts.size - 1
    return run.result(spec, rep)


def acceptance_grid(
    gammas=(0.5, 1.0, 2.0),
    lams=(0.0, 0.5, 1.0, 2.0),
    alphas=(0.0, 1.0, 3.0),
    mus=(-1.0, 0.0, 0.5, 1.0, 2.0),
) -> list[ClassSpec]:
    """Every valid, non-degenerate spec on the parameter grid."""
    raw = []
    raw += [("WSL", g, l, a, m) for g, l, a, m in product(gammas, lams, alphas, mus)]
    raw += [("RSL", g, l, 0.0, m) for g, l, m in product(gammas, lams, mus)]
    raw += [("SLB", 1.0, l, 0.0, m) for l, m in product(lams, mus)]
    raw += [("PSL", 1.0, l, 0.0, m) for l, m in product(lams, mus)]
    specs = []
    for tag, g, l, a, m in raw:
        try:
            spec = ClassSpec(tag, g, l, a, m)
            bound_fs(spec)
        except (InvalidSpec, DegenerateDenominator):
            continue
        specs.append(spec)
    return specs


def probe_many(
    specs: Iterable[ClassSpec],
    samples: int,
    seed: int = 0,
    family: str = "mixed",
    workers: int | None = None,
) -> list[ProbeResult]:
    """Probe each spec with the same seed; order of results follows ``specs``."""
    specs = list(specs)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda s: probe(s, samples, seed, family), specs))
