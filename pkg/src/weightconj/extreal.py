"""Extended real numbers with the conventions used throughout the package.

Every function value in ``weightconj`` is a float that may be ``+inf`` or
``-inf``.  IEEE arithmetic leaves a handful of forms undefined (they produce
NaN); this module fixes them once so that the rest of the code never has to
branch on them:

* ``(+inf) - (+inf) = 0`` and therefore ``(+inf) + (-inf) = 0``
* ``0 * (+-inf) = 0``
* ``0 / 0 = 0``, ``c / 0 = +inf`` for ``c > 0`` and ``c / (+-inf) = 0``

NaN itself is never a legal value and is rejected on construction.
"""

from __future__ import annotations

import math
from typing import Union

import numpy as np

__all__ = [
    "ExtReal",
    "Divergent",
    "INF",
    "NINF",
    "ere_add",
    "ere_sub",
    "ere_mul",
    "ere_div",
    "ext_add",
    "ext_sub",
    "to_text",
    "parse_text",
    "is_divergent",
]

INF = math.inf
NINF = -math.inf

RealLike = Union[float, int, "ExtReal"]


class ExtReal(float):
    """A float restricted to the extended real line (no NaN).

    Arithmetic operators route through :func:`ere_add`, :func:`ere_sub`,
    :func:`ere_mul` and :func:`ere_div`, so mixed expressions such as
    ``ExtReal(inf) - inf`` follow the package conventions instead of IEEE.
    """

    __slots__ = ()

    def __new__(cls, value: RealLike = 0.0) -> "ExtReal":
        v = float(value)
        if v != v:
            raise ValueError("NaN is not an extended real number")
        return super().__new__(cls, v)

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self)

    def __add__(self, other):
        return ere_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return ere_sub(self, other)

    def __rsub__(self, other):
        return ere_sub(other, self)

    def __mul__(self, other):
        return ere_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ere_div(self, other)

    def __rtruediv__(self, other):
        return ere_div(other, self)

    def __neg__(self):
        return ExtReal(-float(self))

    def __pos__(self):
        return self

    def __abs__(self):
        return ExtReal(abs(float(self)))

    def __repr__(self) -> str:
        return f"ExtReal({to_text(self)})"

    def __str__(self) -> str:
        return to_text(self)


class Divergent(ExtReal):
    """``+inf`` produced by a blow-up heuristic rather than by a proof.

    Compares and computes exactly like ``+inf``; the subclass only records
    that a supremum was observed to grow without bound on the search grid.
    """

    __slots__ = ()

    def __new__(cls, value: RealLike = INF) -> "Divergent":
        return super().__new__(cls, INF)

    def __repr__(self) -> str:
        return "Divergent()"


def is_divergent(x: object) -> bool:
    return isinstance(x, Divergent)


def _check(x: RealLike) -> float:
    v = float(x)
    if v != v:
        raise ValueError("NaN is not an extended real number")
    return v


def ere_add(a: RealLike, b: RealLike) -> ExtReal:
    x, y = _check(a), _check(b)
    if math.isinf(x) and math.isinf(y) and x != y:
        return ExtReal(0.0)
    return ExtReal(x + y)


def ere_sub(a: RealLike, b: RealLike) -> ExtReal:
    x, y = _check(a), _check(b)
    if math.isinf(x) and x == y:
        return ExtReal(0.0)
    return ExtReal(x - y)


def ere_mul(a: RealLike, b: RealLike) -> ExtReal:
    x, y = _check(a), _check(b)
    if x == 0.0 or y == 0.0:
        return ExtReal(0.0)
    return ExtReal(x * y)


def ere_div(a: RealLike, b: RealLike) -> ExtReal:
    """Quotient with ``0/0 = 0``, ``c/0 = +-inf`` and ``c/inf = 0``.

    Two infinities divide to ``+-1``: in logarithmic form this is the
    ``inf - inf = 0`` rule, which keeps ``ere_div(x, x) == 1`` for every
    nonzero ``x``.
    """
    x, y = _check(a), _check(b)
    if y == 0.0:
        if x == 0.0:
            return ExtReal(0.0)
        return ExtReal(math.copysign(INF, x))
    if math.isinf(y):
        if math.isinf(x):
            return ExtReal(math.copysign(1.0, x) * math.copysign(1.0, y))
        return ExtReal(0.0)
    return ExtReal(x / y)


def ext_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise :func:`ere_add` on arrays."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    with np.errstate(invalid="ignore"):
        out = a + b
    return np.where(np.isnan(out), 0.0, out)


def ext_sub(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise :func:`ere_sub` on arrays."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    with np.errstate(invalid="ignore"):
        out = a - b
    return np.where(np.isnan(out), 0.0, out)


def to_text(x: RealLike) -> str:
    """Render as ``inf``, ``-inf`` or the shortest round-tripping decimal."""
    v = _check(x)
    if v == INF:
        return "inf"
    if v == NINF:
        return "-inf"
    return repr(v)


def parse_text(text: str) -> ExtReal:
    s = text.strip()
    if s.lower() in ("inf", "+inf", "infinity", "+infinity"):
        return ExtReal(INF)
    if s.lower() in ("-inf", "-infinity"):
        return ExtReal(NINF)
    try:
        v = float(s)
    except ValueError as exc:
        raise ValueError(f"not an extended real: {text!r}") from exc
    return ExtReal(v)
