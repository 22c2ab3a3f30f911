"""Reference implementations that share no code with the package.

Each oracle takes the direct, slow route: brute-force maxima over all
indices, dense grids with an explicit search, a textbook convex hull.
The frozen constants in ``test_oracles.py`` were produced by these
functions and pin both the oracles and the package to the same numbers.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np


def log_factorial_power(s: float, p: int) -> float:
    """``log (p!)^s``."""
    return s * math.lgamma(p + 1)


def omega_bruteforce(log_M: Sequence[float], t: float) -> float:
    """``max_p (p log t - (log M_p - log M_0))`` over every stored index."""
    if t == 0:
        return 0.0
    lt = math.log(t)
    best = -math.inf
    for p, lm in enumerate(log_M):
        if lm == -math.inf:
            return math.inf
        best = max(best, p * lt - (lm - log_M[0]))
    return best


def gevrey_log_M(s: float, P: int) -> list[float]:
    return [log_factorial_power(s, p) for p in range(P + 1)]


def quotients_log_M(log_mu: Sequence[float], logM0: float = 0.0) -> list[float]:
    out = [logM0]
    for m in log_mu:
        out.append(out[-1] + m)
    return out


def lower_hull(y: Sequence[float]) -> list[float]:
    """Values of the lower convex hull of ``(p, y_p)`` at every integer ``p`` (monotone chain)."""
    pts = list(enumerate(y))
    hull: list[tuple[int, float]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    out = []
    j = 0
    for x in range(len(y)):
        while j + 1 < len(hull) and hull[j + 1][0] <= x:
            j += 1
        x1, y1 = hull[j]
        if x1 == x:
            out.append(y1)
        else:
            x2, y2 = hull[j + 1]
            out.append(y1 + (y2 - y1) * (x - x1) / (x2 - x1))
    return out


def lower_conj_bruteforce(
    sigma: Callable[[np.ndarray], np.ndarray],
    tau: Callable[[np.ndarray], np.ndarray],
    t: float,
    span: float = 25.0,
    n: int = 400001,
) -> float:
    """``inf_{s>0} sigma(s) + tau(t/s)`` on a dense grid in ``log s`` around ``log t``."""
    if t == 0:
        return float(sigma(np.array([0.0]))[0] + tau(np.array([0.0]))[0])
    ls = np.linspace(math.log(t) - span, math.log(t) + span, n)
    s = np.exp(ls)
    v = sigma(s) + tau(t / s)
    return float(np.min(v))


def upper_conj_bruteforce(
    sigma: Callable[[np.ndarray], np.ndarray],
    tau: Callable[[np.ndarray], np.ndarray],
    t: float,
    span: float = 25.0,
    n: int = 400001,
) -> float:
    """``sup_{s>=0} sigma(s) - tau(s/t)`` on a dense grid in ``log s`` (plus ``s = 0``)."""
    at0 = float(sigma(np.array([0.0]))[0] - tau(np.array([0.0]))[0])
    if t == 0:
        return at0
    ls = np.linspace(math.log(t) - span, math.log(t) + span, n)
    s = np.exp(ls)
    v = sigma(s) - tau(s / t)
    return float(max(at0, np.max(v)))


def golden_max(f: Callable[[float], float], a: float, b: float, iters: int = 200) -> float:
    """Maximum of a unimodal ``f`` on ``[a, b]`` by golden-section search."""
    g = (math.sqrt(5.0) - 1.0) / 2.0
    c, d = b - g * (b - a), a + g * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = f(d)
    return max(fc, fd)


def mono(alpha: float) -> Callable[[np.ndarray], np.ndarray]:
    return lambda s: np.asarray(s, dtype=float) ** (1.0 / alpha)


def logplus(s: np.ndarray) -> np.ndarray:
    s = np.asarray(s, dtype=float)
    with np.errstate(divide="ignore"):
        return np.where(s > 1.0, np.log(np.maximum(s, 1.0)), 0.0)


def omega_gevrey_vec(s_exp: float) -> Callable[[np.ndarray], np.ndarray]:
    """Vectorised ``omega_{G^s}``: brute-force maximum over ``p = 0`` and a window
    of 9 indices around ``t^(1/s)``, where the concave terms ``p log t - s log p!`` peak."""
    from scipy.special import gammaln

    def f(t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        out = np.zeros(t.shape)
        pos = t > 0
        lt = np.log(t[pos])
        centre = np.floor(np.exp(lt / s_exp))
        best = np.zeros(lt.shape)
        for d in range(-4, 5):
            p = np.maximum(centre + d, 0.0)
            best = np.maximum(best, p * lt - s_exp * gammaln(p + 1.0))
        out[pos] = best
        return out

    return f


def root_ratio(log_M_a: Sequence[float], log_M_b: Sequence[float]) -> list[float]:
    """``((A_p/A_0)/(B_p/B_0))^(1/p)`` for ``p >= 1``."""
    return [
        math.exp(((log_M_a[p] - log_M_a[0]) - (log_M_b[p] - log_M_b[0])) / p)
        for p in range(1, min(len(log_M_a), len(log_M_b)))
    ]
