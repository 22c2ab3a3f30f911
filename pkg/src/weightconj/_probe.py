"""Finite-probe helpers for asymptotic questions (limits, trends, oscillation).

Every asymptotic predicate in the package is decided from finitely many
samples.  The helpers here keep those decisions in one place so the
sequence, weight-function, conjugate and index modules use the same rules.
"""

from __future__ import annotations

import math

import numpy as np


def tail_start(n: int) -> int:
    """First 1-based index of the last quartile ``[ceil(3n/4), n]``."""
    return max(1, math.ceil(3 * n / 4))


def loglog_slope(x: np.ndarray, y: np.ndarray) -> float:
    """Least-squares slope of ``y`` against ``log x``."""
    lx = np.log(np.asarray(x, dtype=float))
    y = np.asarray(y, dtype=float)
    if lx.size < 2 or not np.all(np.isfinite(y)):
        return math.nan
    lx = lx - lx.mean()
    denom = float(np.dot(lx, lx))
    if denom == 0.0:
        return 0.0
    return float(np.dot(lx, y - y.mean()) / denom)


def monotone(y: np.ndarray, increasing: bool, rtol: float = 1e-12) -> bool:
    """Whether ``y`` is monotone up to a relative jitter of ``rtol``."""
    y = np.asarray(y, dtype=float)
    if y.size < 2:
        return True
    d = np.diff(y)
    scale = rtol * np.maximum(1.0, np.abs(y[1:]))
    with np.errstate(invalid="ignore"):
        if increasing:
            return bool(np.all((d >= -scale) | (np.isinf(y[1:]) & (y[1:] > 0))))
        return bool(np.all(d <= scale))


def quad_extrapolate(x: np.ndarray, y: np.ndarray) -> float:
    """Value at ``1/log x = 0`` of the parabola in ``1/log x`` through three samples.

    Uses the first, middle and last sample.  For sequences approaching
    their limit like ``c/log x`` or faster this recovers the limit closely;
    ``x`` must exceed 1.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    idx = [0, (x.size - 1) // 2, x.size - 1]
    z = 1.0 / np.log(x[idx])
    w = y[idx]
    if not np.all(np.isfinite(w)):
        return math.inf if w[-1] > 0 else float(w[-1])
    z0, z1, z2 = z
    l0 = (0 - z1) * (0 - z2) / ((z0 - z1) * (z0 - z2))
    l1 = (0 - z0) * (0 - z2) / ((z1 - z0) * (z1 - z2))
    l2 = (0 - z0) * (0 - z1) / ((z2 - z0) * (z2 - z1))
    return float(l0 * w[0] + l1 * w[1] + l2 * w[2])


def tail_limits(x: np.ndarray, y: np.ndarray) -> tuple[float, float]:
    """Estimates of ``(limsup, liminf)`` of ``y`` as ``x`` grows.

    Monotone samples are treated as converging: the limit is extrapolated
    in ``1/log x`` and clipped so that it never lies on the wrong side of
    the last sample (a non-decreasing sequence cannot converge to a value
    below its last term).  Non-monotone samples give the max and min over
    the second half of the probe.
    """
    y = np.asarray(y, dtype=float)
    x = np.asarray(x, dtype=float)
    if np.any(np.isinf(y) & (y > 0)):
        hi = math.inf
        lo = math.inf if np.all(np.isinf(y[y.size // 2:])) else float(np.min(y[y.size // 2:]))
        return hi, lo
    inc = monotone(y, True)
    dec = monotone(y, False)
    if inc or dec:
        lim = quad_extrapolate(x, y)
        last = float(y[-1])
        spread = abs(float(y[-1]) - float(y[0]))
        if inc:
            lim = min(max(lim, last), last + 3.0 * spread)
        else:
            lim = max(min(lim, last), last - 3.0 * spread)
        return lim, lim
    half = y[y.size // 2:]
    return float(np.max(half)), float(np.min(half))


def alternation(values: np.ndarray, lo: float, hi: float) -> bool:
    """Whether the samples go high-low-high or low-high-low across the thresholds."""
    states = []
    for v in np.asarray(values, dtype=float):
        s = 1 if v > hi else (-1 if v < lo else 0)
        if s != 0 and (not states or states[-1] != s):
            states.append(s)
    return len(states) >= 3
