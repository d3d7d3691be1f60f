"""Truncated complex power series.

A ``TruncatedSeries`` holds Taylor coefficients a_0..a_N of a germ at the
origin.  Binary operations keep the smaller of the two truncation orders,
so nothing is ever reported beyond what both operands determine.
"""
from __future__ import annotations

from dataclasses import dataclass
from numbers import Number
from typing import Iterable

import numpy as np

from .errors import (
    BranchUndefined,
    DivisionBySingularSeries,
    InnerNotVanishing,
    NotNormalized,
)

DEFAULT_ORDER = 12
MAX_ORDER = 64
SINGULAR_TOL = 1e-14


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=complex).ravel()
        if arr.size < 2:
            raise ValueError("a truncated series needs order >= 1")
        if arr.size > MAX_ORDER + 1:
            raise ValueError(f"order {arr.size - 1} exceeds the supported maximum {MAX_ORDER}")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    # -- construction -----------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs: Iterable[complex], order: int | None = None) -> "TruncatedSeries":
        """Pad with zeros (or cut) to ``order``; default order is len(coeffs) - 1."""
        c = list(coeffs)
        if order is None:
            order = max(len(c) - 1, 1)
        c = (c + [0] * (order + 1))[: order + 1]
        return cls(np.asarray(c, dtype=complex))

    @classmethod
    def constant(cls, value: complex, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.from_coeffs([0, 1], order)

    # -- basic accessors --------------------------------------------------
    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.coeffs.size

    def __repr__(self):
        body = ", ".join(f"{c:.6g}" for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"TruncatedSeries([{body}{tail}], order={self.order})"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    def is_normalized(self, tol: float = 1e-12) -> bool:
        return abs(self.coeffs[0]) <= tol and abs(self.coeffs[1] - 1) <= tol

    def allclose(self, other: "TruncatedSeries", atol: float = 1e-12) -> bool:
        n = min(self.order, other.order)
        return bool(np.all(np.abs(self.coeffs[: n + 1] - other.coeffs[: n + 1]) <= atol))

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, Number):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number):
            return TruncatedSeries(self.coeffs * other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        prod = np.convolve(self.coeffs[: n + 1], other.coeffs[: n + 1])[: n + 1]
        return TruncatedSeries(prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return TruncatedSeries(self.coeffs / other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        b = other.coeffs
        if abs(b[0]) <= SINGULAR_TOL:
            raise DivisionBySingularSeries(f"divisor has constant term {b[0]!r}")
        a = self.coeffs
        q = np.zeros(n + 1, dtype=complex)
        for k in range(n + 1):
            acc = a[k] - np.dot(b[1 : k + 1], q[k - 1 :: -1][:k]) if k else a[0]
            q[k] = acc / b[0]
        return TruncatedSeries(q)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = TruncatedSeries.constant(1, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus and shifts ----------------------------------------------
    def derivative(self) -> "TruncatedSeries":
        k = np.arange(1, self.order + 1)
        c = self.coeffs[1:] * k
        if c.size < 2:
            c = np.append(c, 0)
        return TruncatedSeries(c)

    def div_z(self) -> "TruncatedSeries":
        """f(z)/z for a series with vanishing constant term; order drops by one."""
        if abs(self.coeffs[0]) > SINGULAR_TOL:
            raise DivisionBySingularSeries("f(0) != 0, f(z)/z is not a power series")
        c = self.coeffs[1:]
        if c.size < 2:
            c = np.append(c, 0)
        return TruncatedSeries(c)

    def mul_z(self) -> "TruncatedSeries":
        """z*f(z) at the same order (the top coefficient falls off)."""
        return TruncatedSeries(np.concatenate(([0], self.coeffs[:-1])))

    def __call__(self, z):
        return evaluate(self, z)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        return compose(self, inner)

    def revert(self) -> "TruncatedSeries":
        return revert(self)

    def power(self, p: float) -> "TruncatedSeries":
        return power(self, p)


def arith(lhs: TruncatedSeries, rhs: TruncatedSeries, kind: str) -> TruncatedSeries:
    ops = {
        "add": lhs.__add__,
        "sub": lhs.__sub__,
        "mul": lhs.__mul__,
        "div": lhs.__truediv__,
    }
    try:
        return ops[kind](rhs)
    except KeyError:
        raise ValueError(f"unknown arithmetic kind {kind!r}") from None


def differentiate(f: TruncatedSeries) -> TruncatedSeries:
    return f.derivative()


def evaluate(f: TruncatedSeries, z):
    """Horner evaluation of the polynomial part; ``z`` may be an array."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    return acc[()] if acc.ndim == 0 else acc


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """Coefficients of outer(inner(z)); requires inner(0) = 0."""
    if abs(inner.coeffs[0]) > SINGULAR_TOL:
        raise InnerNotVanishing(f"inner series has constant term {inner.coeffs[0]!r}")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = TruncatedSeries.constant(outer.coeffs[n], n)
    for c in outer.coeffs[n - 1 :: -1]:
        acc = acc * inner + c
    return acc


def revert(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse g of a normalized germ f = z + a_2 z^2 + ...

    Solved coefficient by coefficient: with g_1..g_{n-1} fixed, the z^n
    coefficient of f(g) is g_n plus a term independent of g_n.
    """
    if not f.is_normalized():
        raise NotNormalized("reversion needs f(0) = 0 and f'(0) = 1")
    n = f.order
    g = np.zeros(n + 1, dtype=complex)
    g[1] = 1
    for k in range(2, n + 1):
        trial = compose(f, TruncatedSeries(g[: k + 1]))
        g[k] = -trial.coeffs[k]
    return TruncatedSeries(g)


def power(f: TruncatedSeries, p: float) -> TruncatedSeries:
    """Principal branch of f**p for a series with f(0) = 1.

    Uses the recurrence n b_n = sum_{k=1}^{n} ((p + 1) k - n) a_k b_{n-k}.
    """
    a = f.coeffs
    if abs(a[0] - 1) > 1e-12:
        raise BranchUndefined(f"constant term {a[0]!r} is not 1")
    n = f.order
    b = np.zeros(n + 1, dtype=complex)
    b[0] = 1
    for m in range(1, n + 1):
        k = np.arange(1, m + 1)
        b[m] = np.sum(((p + 1) * k - m) * a[1 : m + 1] * b[m - k]) / m
    return TruncatedSeries(b)
