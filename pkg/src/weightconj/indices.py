"""Growth indices ``gamma(omega)`` and ``gamma_bar(omega)`` of weight functions.

``gamma`` is the supremum of the ``g > 0`` for which some ``K > 1`` gives
``limsup omega(K^g t)/omega(t) < K``; ``gamma_bar`` is the infimum of the
``g > 0`` for which some ``A > 1`` gives ``liminf omega(A^g t)/omega(t) > A``.

Recognizable expression trees get exact values; everything else is
estimated by bisection in ``g`` with the asymptotic ratio read off a
geometric tail grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._probe import tail_limits
from .conjugate import ConjOptions
from .extreal import INF, ExtReal
from .weightfn import (
    Associated,
    LogPlus,
    LowerConj,
    Monomial,
    PowerSub,
    Scale,
    Shift,
    UpperConj,
    WeightFunction,
    ZeroValue,
    with_conj_options,
)

__all__ = [
    "GrowthIndexEstimate",
    "IndexOptions",
    "gamma_analytic",
    "gamma_lower",
    "gamma_upper",
]


@dataclass(frozen=True)
class IndexOptions:
    """Settings for the numeric estimators.

    The tail grid has ``tail_count`` geometric points on
    ``[tail_min, tail_max]``; candidates ``K = 2^k`` run from
    ``2^k_max`` down to 2; ``gamma_max`` is the threshold reported as
    ``+inf``; bisection stops once the bracket is ``tol`` wide.  Conjugate
    nodes are re-evaluated with ``conj``: ratios of large values need far
    less resolution in ``log s`` than the conjugate values themselves.
    """

    use_analytic: bool = True
    gamma_max: float = 64.0
    tol: float = 0.05
    eps_margin: float = 0.02
    tail_min: float = 1e4
    tail_max: float = 1e10
    tail_count: int = 200
    k_max: int = 16
    conj: Optional[ConjOptions] = ConjOptions(per_decade=50, decades=3.0)

    def tail(self) -> np.ndarray:
        return np.geomspace(self.tail_min, self.tail_max, self.tail_count)

    def candidates(self) -> np.ndarray:
        return 2.0 ** np.arange(self.k_max, 0, -1)


@dataclass(frozen=True)
class GrowthIndexEstimate:
    """Bracket ``[lo, hi]`` for ``gamma`` (``kind="GammaLower"``) or ``gamma_bar``
    (``kind="GammaUpper"``); ``witness_K`` is the ``K`` (resp. ``A``) that
    decided the accepted side of the bracket."""

    kind: str
    lo: ExtReal
    hi: ExtReal
    witness_K: float
    exact: bool

    def __post_init__(self) -> None:
        if float(self.lo) > float(self.hi):
            raise ValueError("empty bracket")

    @property
    def mid(self) -> float:
        if math.isinf(float(self.lo)):
            return INF
        return 0.5 * (float(self.lo) + float(self.hi))

    def contains(self, x: float, slack: float = 0.0) -> bool:
        if math.isinf(x):
            return math.isinf(float(self.hi))
        return float(self.lo) - slack <= x <= float(self.hi) + slack


def gamma_analytic(f: WeightFunction) -> Optional[tuple[float, float]]:
    """Exact ``(gamma, gamma_bar)`` for recognizable trees, else ``None``.

    ``t^(1/a)`` and associated weights of ``mu_p = e^a p^b`` (``b > 0``)
    give ``(a, a)`` resp. ``(b, b)``; ``log_+`` gives ``(inf, inf)``;
    substituting ``t^(1/a)`` multiplies by ``a``; scaling, shifting and
    changing the value at 0 keep the indices; the lower conjugate adds
    equal-index operands and the upper conjugate subtracts them when the
    dividend has the larger index.
    """
    if isinstance(f, Monomial):
        return (f.alpha, f.alpha)
    if isinstance(f, LogPlus):
        return (INF, INF)
    if isinstance(f, Associated):
        seq = f.seq
        if seq.is_closed_form and seq.tail.b > 0:
            return (seq.tail.b, seq.tail.b)
        return None
    if isinstance(f, PowerSub):
        inner = gamma_analytic(f.inner)
        return None if inner is None else (inner[0] * f.alpha, inner[1] * f.alpha)
    if isinstance(f, (Scale, Shift, ZeroValue)):
        return gamma_analytic(f.inner)
    if isinstance(f, (LowerConj, UpperConj)):
        a = gamma_analytic(f.sigma)
        b = gamma_analytic(f.tau)
        if a is None or b is None or a[0] != a[1] or b[0] != b[1]:
            return None
        if isinstance(f, LowerConj):
            if math.isinf(a[0]) and math.isinf(b[0]):
                return (INF, INF)
            if math.isinf(a[0]) or math.isinf(b[0]):
                return None
            return (a[0] + b[0], a[0] + b[0])
        if math.isfinite(a[0]) and math.isfinite(b[0]) and a[0] > b[0]:
            return (a[0] - b[0], a[0] - b[0])
        return None
    return None


class _RatioProbe:
    """Evaluates ``omega(K^g t)/omega(t)`` tail limits for candidate ``g``."""

    def __init__(self, f: WeightFunction, opts: IndexOptions) -> None:
        self.f = f if opts.conj is None else with_conj_options(f, opts.conj)
        self.t = opts.tail()
        self.lt = np.log(self.t)
        self.base = np.asarray(self.f.eval_log(self.lt), dtype=float)
        self.Ks = opts.candidates()
        self.eps = opts.eps_margin

    def limits(self, g: float) -> tuple[np.ndarray, np.ndarray]:
        shift = g * np.log(self.Ks)
        lt = self.lt[None, :] + shift[:, None]
        with np.errstate(over="ignore"):
            vals = np.asarray(self.f.eval_log(lt), dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(self.base[None, :] > 0, vals / self.base[None, :], INF)
        sup = np.empty(self.Ks.size)
        inf = np.empty(self.Ks.size)
        for i in range(self.Ks.size):
            sup[i], inf[i] = tail_limits(self.t, ratio[i])
        return sup, inf

    def accept_lower(self, g: float) -> Optional[float]:
        sup, _ = self.limits(g)
        ok = np.flatnonzero(sup < self.Ks * (1.0 - self.eps))
        return float(self.Ks[ok[0]]) if ok.size else None

    def accept_upper(self, g: float) -> Optional[float]:
        _, inf = self.limits(g)
        ok = np.flatnonzero(inf > self.Ks * (1.0 + self.eps))
        return float(self.Ks[ok[0]]) if ok.size else None


def _correction(K: float, eps: float) -> float:
    """Bias of the margin for ``t^(1/a)``: the threshold sits at ``a (1 + log(1 + eps)/log K)``."""
    return 1.0 + math.log1p(eps) / math.log(K)


def _require_weight(f: WeightFunction) -> None:
    if not f.is_weight:
        raise ValueError(f"{f.to_expr()} is not a weight function")


def gamma_lower(f: WeightFunction, opts: IndexOptions = IndexOptions()) -> GrowthIndexEstimate:
    """Bracket for ``gamma(f)``; ``+inf`` when ``gamma_max`` is still accepted."""
    _require_weight(f)
    if opts.use_analytic:
        exact = gamma_analytic(f)
        if exact is not None:
            return GrowthIndexEstimate("GammaLower", ExtReal(exact[0]), ExtReal(exact[0]), math.nan, True)
    probe = _RatioProbe(f, opts)
    top = probe.accept_lower(opts.gamma_max)
    if top is not None:
        return GrowthIndexEstimate("GammaLower", ExtReal(INF), ExtReal(INF), top, False)
    lo, hi = 0.0, opts.gamma_max
    witness = float(probe.Ks[0])
    while hi - lo > opts.tol:
        mid = 0.5 * (lo + hi)
        K = probe.accept_lower(mid)
        if K is not None:
            lo, witness = mid, K
        else:
            hi = mid
    c = _correction(witness, -opts.eps_margin)
    return GrowthIndexEstimate("GammaLower", ExtReal(lo / c), ExtReal(hi / c), witness, False)


def gamma_upper(f: WeightFunction, opts: IndexOptions = IndexOptions()) -> GrowthIndexEstimate:
    """Bracket for ``gamma_bar(f)``; ``+inf`` when even ``gamma_max`` is rejected."""
    _require_weight(f)
    if opts.use_analytic:
        exact = gamma_analytic(f)
        if exact is not None:
            return GrowthIndexEstimate("GammaUpper", ExtReal(exact[1]), ExtReal(exact[1]), math.nan, True)
    probe = _RatioProbe(f, opts)
    top = probe.accept_upper(opts.gamma_max)
    if top is None:
        return GrowthIndexEstimate("GammaUpper", ExtReal(INF), ExtReal(INF), math.nan, False)
    lo, hi = 0.0, opts.gamma_max
    witness = top
    while hi - lo > opts.tol:
        mid = 0.5 * (lo + hi)
        A = probe.accept_upper(mid)
        if A is not None:
            hi, witness = mid, A
        else:
            lo = mid
    c = _correction(witness, opts.eps_margin)
    return GrowthIndexEstimate("GammaUpper", ExtReal(lo / c), ExtReal(hi / c), witness, False)
