"""The associated weight function ``omega_M(t) = sup_p log(M_0 t^p / M_p)``.

For a log-convex sequence the supremum is attained at the index ``p`` with
``mu_p <= t < mu_{p+1}``, which turns evaluation into a binary search over
the quotients followed by ``p log t - (log M_p - log M_0)``.  Sequences that
are not log-convex are replaced by their log-convex minorant first, which
does not change ``omega_M``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DegenerateSequence, RangeExceeded
from .extreal import INF, ExtReal
from .sequences import (
    IotaValue,
    WeightSequence,
    iota,
    log_convex_minorant,
)

__all__ = [
    "AssociatedWeight",
    "GridSpec",
    "associated",
    "omega_eval",
    "omega_sup_oracle",
    "reconstruct_sequence",
]


@dataclass(frozen=True)
class GridSpec:
    """Geometric grid of ``count`` points on ``[t_min, t_max]``."""

    t_min: float = 1e-3
    t_max: float = 1e3
    count: int = 200

    def points(self) -> np.ndarray:
        return np.geomspace(self.t_min, self.t_max, self.count)


@dataclass(frozen=True, eq=False)
class AssociatedWeight:
    """``omega_M`` for a weight sequence ``M``.

    ``lc`` is the log-convex minorant on which evaluation happens; ``seq``
    keeps the sequence as given.  ``boundary_value`` is the value at
    ``t = M_iota`` when ``M_iota`` is finite and positive;
    ``boundary_exact`` is false when the quotients never reach ``M_iota``
    within the stored depth, in which case the value is the best lower
    bound the data support.
    """

    seq: WeightSequence
    lc: Optional[WeightSequence]
    iota: IotaValue
    boundary_value: ExtReal
    boundary_exact: bool
    _log_iota: float = field(repr=False, default=INF)

    @property
    def degenerate(self) -> bool:
        return self.lc is None

    @property
    def domain_hi(self) -> float:
        return float(self.iota.iota)

    def eval_log(self, lt: np.ndarray) -> np.ndarray:
        """``omega_M(exp(lt))`` elementwise; ``lt = -inf`` encodes ``t = 0``."""
        values, _ = self._eval(np.asarray(lt, dtype=float))
        return values

    def is_lower_bound(self, t: float) -> bool:
        """Whether the value at ``t`` only bounds ``omega_M(t)`` from below."""
        lt = math.log(t) if t > 0 else -INF
        _, flag = self._eval(np.array([lt]))
        return bool(flag[0])

    def __call__(self, t):
        t_arr = np.asarray(t, dtype=float)
        if np.any(t_arr < 0):
            raise ValueError("omega_M is defined for t >= 0")
        with np.errstate(divide="ignore"):
            out = self.eval_log(np.log(t_arr))
        return ExtReal(float(out)) if out.ndim == 0 else out

    def _eval(self, lt: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        shape = lt.shape
        lt = lt.ravel()
        out = np.zeros(lt.size)
        lower = np.zeros(lt.size, dtype=bool)
        if self.degenerate:
            out[lt > -INF] = INF
            return out.reshape(shape), lower.reshape(shape)
        lc = self.lc
        lmu = lc.log_mu
        lM = lc.log_M - lc.logM0
        P = lc.P
        p = np.searchsorted(lmu, lt, side="right")
        inside = (p < P) & (lt > -INF)
        pi = p[inside]
        out[inside] = np.where(pi > 0, pi * lt[inside] - lM[pi], 0.0)
        beyond = p == P
        if np.any(beyond):
            lb = lt[beyond]
            vb = np.empty(lb.size)
            lowb = np.zeros(lb.size, dtype=bool)
            if lc.is_closed_form and lc.tail.b > 0:
                vb = self._closed_form_beyond(lb)
            else:
                li = self._log_iota
                over = lb > li
                at = lb == li
                below = ~(over | at)
                vb[over] = INF
                vb[at] = float(self.boundary_value)
                lowb[at] = not self.boundary_exact
                vb[below] = P * lb[below] - lM[P]
                lowb[below] = True
                if lc.is_closed_form:
                    lowb[:] = False
            out[beyond] = vb
            lower[beyond] = lowb
        # a truncated hull can keep quotients slightly above M_iota
        out[lt > self._log_iota] = INF
        return out.reshape(shape), lower.reshape(shape)

    def _closed_form_beyond(self, lt: np.ndarray) -> np.ndarray:
        """Piecewise formula past the stored depth for ``log mu_p = a + b log p``."""
        tail = self.lc.tail
        a, b = tail.a, tail.b
        with np.errstate(over="ignore"):
            p = np.floor(np.exp((lt - a) / b))
        p = np.maximum(p, float(self.lc.P))
        # the floor of exp(.) can be off by one through rounding
        for _ in range(2):
            up = a + b * np.log(p + 1.0) <= lt
            p = np.where(up & np.isfinite(p), p + 1.0, p)
            down = (a + b * np.log(np.maximum(p, 1.0)) > lt) & (p > self.lc.P)
            p = np.where(down, p - 1.0, p)
        with np.errstate(invalid="ignore", over="ignore"):
            val = p * lt - tail.log_prod(p)
        val = np.where(np.isfinite(p) & np.isfinite(val), val, INF)
        return val


def _boundary(lc: WeightSequence, iv: IotaValue) -> tuple[float, bool]:
    li = float(iv.iota)
    if not (0.0 < li < INF):
        return INF, True
    if lc.is_closed_form:
        # constant quotients mu_p = iota: every branch vanishes at t = iota
        return 0.0, True
    log_li = math.log(li)
    lmu = lc.log_mu
    lM = lc.log_M - lc.logM0
    hits = np.flatnonzero(lmu >= log_li)
    if hits.size:
        p0 = int(hits[0]) + 1
        return float(p0 * lmu[p0 - 1] - lM[p0]), True
    return float(lc.P * log_li - lM[lc.P]), False


def associated(M: WeightSequence) -> AssociatedWeight:
    """Build ``omega_M``; non-log-convex input is regularized first.

    Sequences with ``M_iota = 0`` (including the degenerate zero sequence)
    give the function that is ``0`` at the origin and ``+inf`` elsewhere.
    """
    iv = iota(M)
    if M.is_zero or float(iv.iota) == 0.0:
        return AssociatedWeight(M, None, IotaValue(ExtReal(0.0), ExtReal(0.0), iv.exact), ExtReal(INF), True, -INF)
    try:
        lc = log_convex_minorant(M)
    except DegenerateSequence:
        return AssociatedWeight(M, None, IotaValue(ExtReal(0.0), ExtReal(0.0), iv.exact), ExtReal(INF), True, -INF)
    # M and M^lc share M_iota; the value for M may carry an exact operand hint
    value, exact = _boundary(lc, iv)
    li = float(iv.iota)
    log_li = math.log(li) if li > 0 else -INF
    return AssociatedWeight(M, lc, iv, ExtReal(value), exact, log_li)


def omega_eval(A: AssociatedWeight, t: float) -> ExtReal:
    """``omega_M(t)`` for ``t >= 0``."""
    if t < 0:
        raise ValueError("omega_M is defined for t >= 0")
    lt = math.log(t) if t > 0 else -INF
    return ExtReal(float(A.eval_log(np.array([lt]))[0]))


def omega_sup_oracle(M: WeightSequence, t: float, Pmax: int) -> ExtReal:
    """Direct ``max_{0<=p<=Pmax} (log M_0 + p log t - log M_p)``; no search, no regularization."""
    if Pmax > M.P:
        raise RangeExceeded(f"Pmax={Pmax} exceeds the stored depth {M.P}")
    if t < 0:
        raise ValueError("omega_M is defined for t >= 0")
    if t == 0:
        return ExtReal(0.0)
    p = np.arange(Pmax + 1, dtype=float)
    with np.errstate(invalid="ignore"):
        terms = M.logM0 + p * math.log(t) - M.log_M[: Pmax + 1]
    terms = np.where(np.isnan(terms), -INF, terms)
    return ExtReal(float(np.max(terms)))


def reconstruct_sequence(A: AssociatedWeight, p: int, grid: Optional[GridSpec] = None) -> float:
    """``log M_p`` recovered as ``log M_0 + sup_t (p log t - omega_M(t))``.

    The supremum is taken over the quotient breakpoints (where it is
    attained for log-convex data) together with the optional grid, all
    restricted to ``t < M_iota``.  The result is ``log`` of the log-convex
    minorant at ``p``.
    """
    if A.degenerate:
        raise DegenerateSequence("omega is +inf for t > 0; no sequence to recover")
    lc = A.lc
    if p > lc.P:
        raise RangeExceeded(f"p={p} exceeds the stored depth {lc.P}")
    if p == 0:
        return float(lc.logM0)
    lts = [lc.log_mu]
    if grid is not None:
        lts.append(np.log(grid.points()))
    lt = np.concatenate(lts)
    lt = lt[lt < A._log_iota]
    vals = p * lt - A.eval_log(lt)
    return float(lc.logM0 + np.max(vals))
