"""Weight sequences stored through their logarithmic quotients.

A weight sequence ``M = (M_p)`` is kept as ``log M_0`` together with the
array ``log mu_p`` for ``p = 1..P`` where ``mu_p = M_p / M_{p-1}``; the
values ``log M_p`` are prefix sums cached at construction.  A tail
descriptor says what happens beyond ``P``:

``explicit``
    the data stop at ``P``; asymptotic questions are answered from the
    last quartile of the stored quotients and flagged as estimates.
``closed_form``
    ``log mu_p = a + b log p`` for every ``p``; Gevrey sequences ``p!^s``
    are ``a = 0, b = s``.  Asymptotic questions are answered analytically.
``zero``
    the degenerate sequence ``M_p = 0`` for ``p > 0``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np
from scipy.special import gammaln

from ._probe import alternation, loglog_slope, monotone, quad_extrapolate, tail_start
from .errors import DegenerateSequence, InvalidSequence, RangeExceeded
from .extreal import INF, ExtReal, ere_div, ere_mul

__all__ = [
    "DEFAULT_DEPTH",
    "EPS_MARGIN",
    "TailSpec",
    "WeightSequence",
    "IotaValue",
    "Relation",
    "RelationVerdict",
    "MgCertificate",
    "make_gevrey",
    "make_closed_form",
    "make_from_quotients",
    "make_zero",
    "make_oscillating",
    "normalize",
    "log_convex_minorant",
    "iota",
    "pointwise_product",
    "pointwise_quotient",
    "compare",
    "has_mg",
    "has_om1_criterion",
    "has_om1_strong",
    "check_power_inequality",
    "parse_sequence",
    "load_sequence",
    "format_sequence",
    "classify_log_ratio",
]

DEFAULT_DEPTH = 512
EPS_MARGIN = 0.05
EPS_REL = 1e-6
OM1_FACTORS = (2, 4, 8, 16)
OM1_MIN_DEPTH = 128


@dataclass(frozen=True)
class TailSpec:
    kind: str = "explicit"
    a: float = 0.0
    b: float = 0.0
    label: str = ""

    def __post_init__(self) -> None:
        if self.kind not in ("explicit", "closed_form", "zero"):
            raise InvalidSequence(f"unknown tail kind {self.kind!r}")

    @classmethod
    def explicit(cls) -> "TailSpec":
        return cls("explicit")

    @classmethod
    def closed_form(cls, a: float, b: float, label: str = "") -> "TailSpec":
        return cls("closed_form", float(a), float(b), label)

    @classmethod
    def zero(cls) -> "TailSpec":
        return cls("zero")

    def log_mu(self, p: np.ndarray) -> np.ndarray:
        return self.a + self.b * np.log(np.asarray(p, dtype=float))

    def log_prod(self, p: np.ndarray) -> np.ndarray:
        """``sum_{i<=p} (a + b log i)``, valid for real ``p >= 0``."""
        p = np.asarray(p, dtype=float)
        return self.a * p + self.b * gammaln(p + 1.0)


@dataclass(frozen=True)
class IotaValue:
    """``M_iota = liminf (M_p/M_0)^(1/p)`` and ``M_inf = inf_p (M_p/M_0)^(1/p)``."""

    iota: ExtReal
    inf_root: ExtReal
    exact: bool


@dataclass(frozen=True, eq=False)
class WeightSequence:
    logM0: float
    log_mu: np.ndarray
    tail: TailSpec = field(default_factory=TailSpec.explicit)
    iota_hint: Optional[IotaValue] = None
    _lineage: tuple = field(default=(), repr=False)

    def __post_init__(self) -> None:
        mu = np.array(self.log_mu, dtype=float)
        if mu.ndim != 1 or mu.size == 0:
            raise InvalidSequence("log quotients must be a non-empty 1-d array")
        if not math.isfinite(self.logM0):
            raise InvalidSequence("log M_0 must be finite")
        if self.tail.kind == "zero":
            mu[:] = -INF
            log_M = np.full(mu.size + 1, -INF)
            log_M[0] = self.logM0
        else:
            if not np.all(np.isfinite(mu)):
                raise InvalidSequence("log quotients must be finite")
            log_M = np.concatenate(([self.logM0], self.logM0 + np.cumsum(mu)))
        mu.setflags(write=False)
        log_M.setflags(write=False)
        object.__setattr__(self, "log_mu", mu)
        object.__setattr__(self, "log_M", log_M)

    log_M: np.ndarray = field(init=False, repr=False)

    @property
    def P(self) -> int:
        return int(self.log_mu.size)

    @property
    def is_zero(self) -> bool:
        return self.tail.kind == "zero"

    @property
    def is_closed_form(self) -> bool:
        return self.tail.kind == "closed_form"

    @property
    def is_log_convex(self) -> bool:
        if self.is_zero:
            return True
        if self.is_closed_form:
            return self.tail.b >= 0.0
        return bool(np.all(np.diff(self.log_mu) >= 0.0))

    @property
    def is_normalized(self) -> bool:
        return self.logM0 == 0.0 and (self.is_zero or self.log_mu[0] >= 0.0)

    @property
    def mu(self) -> np.ndarray:
        return np.exp(self.log_mu)

    def logM(self, p: int) -> float:
        """``log M_p``; closed-form tails extend past the stored depth."""
        if p < 0:
            raise RangeExceeded("negative index")
        if p <= self.P:
            return float(self.log_M[p])
        if self.is_closed_form:
            return float(self.logM0 + self.tail.log_prod(p))
        if self.is_zero:
            return -INF
        raise RangeExceeded(f"index {p} beyond stored depth {self.P}")

    def logmu(self, p: int) -> float:
        if p < 1:
            raise RangeExceeded("quotients start at p = 1")
        if p <= self.P:
            return float(self.log_mu[p - 1])
        if self.is_closed_form:
            return float(self.tail.log_mu(p))
        if self.is_zero:
            return -INF
        raise RangeExceeded(f"index {p} beyond stored depth {self.P}")

    def truncate(self, P: int) -> "WeightSequence":
        if P >= self.P:
            return self
        return WeightSequence(self.logM0, self.log_mu[:P], self.tail, self.iota_hint)

    def same_as(self, other: "WeightSequence") -> bool:
        return self is other or (
            self.logM0 == other.logM0
            and self.tail == other.tail
            and self.P == other.P
            and bool(np.array_equal(self.log_mu, other.log_mu))
        )

    def __repr__(self) -> str:
        if self.is_closed_form and self.tail.label:
            kind = self.tail.label
        else:
            kind = self.tail.kind
        return f"WeightSequence({kind}, logM0={self.logM0}, P={self.P})"


def make_gevrey(s: float, P: int = DEFAULT_DEPTH) -> WeightSequence:
    """The Gevrey sequence ``G^s = (p!^s)``."""
    if not s > 0:
        raise InvalidSequence("Gevrey exponent must be positive")
    return make_closed_form(0.0, float(s), P=P, label=f"G^{s:g}")


def make_closed_form(
    a: float, b: float, logM0: float = 0.0, P: int = DEFAULT_DEPTH, label: str = ""
) -> WeightSequence:
    """Sequence with ``log mu_p = a + b log p`` for all ``p``."""
    tail = TailSpec.closed_form(a, b, label or f"closed(a={a:g},b={b:g})")
    return WeightSequence(float(logM0), tail.log_mu(np.arange(1, P + 1)), tail)


def make_from_quotients(
    logM0: float, log_mu: Sequence[float], tail: Optional[TailSpec] = None
) -> WeightSequence:
    arr = np.asarray(log_mu, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise InvalidSequence("log quotients must be finite")
    return WeightSequence(float(logM0), arr, tail or TailSpec.explicit())


def make_zero(logM0: float = 0.0, P: int = DEFAULT_DEPTH) -> WeightSequence:
    """The degenerate sequence ``(M_0, 0, 0, ...)``."""
    return WeightSequence(float(logM0), np.zeros(P), TailSpec.zero())


def normalize(M: WeightSequence) -> WeightSequence:
    """Divide by ``M_0`` so that the result starts with ``1``."""
    return WeightSequence(0.0, M.log_mu, M.tail, M.iota_hint)


# ---------------------------------------------------------------------------
# iota


def _lc_limit(log_mu: np.ndarray) -> float:
    """Limit of a non-decreasing quotient sequence from its stored values.

    Diverging quotients are recognised either by growth of more than
    ``EPS_MARGIN`` across the last quartile or by increments that fail to
    shrink between the halves ``[P/4, P/2]`` and ``[P/2, P]``.  Converging
    ones are extrapolated geometrically from those two increments.
    """
    P = log_mu.size
    if log_mu[-1] > 700.0:
        return INF
    w0 = tail_start(P)
    if log_mu[-1] - log_mu[w0 - 1] > math.log1p(EPS_MARGIN):
        return INF
    if P < 4:
        return float(math.exp(log_mu[-1]))
    mu_P = math.exp(log_mu[-1])
    mu_h = math.exp(log_mu[P // 2 - 1])
    mu_q = math.exp(log_mu[P // 4 - 1])
    d1, d2 = mu_P - mu_h, mu_h - mu_q
    noise = 1e-12 * mu_P
    if d1 <= noise:
        return mu_P
    if d2 <= noise:
        return INF
    r = d1 / d2
    if r >= 1.0 - EPS_MARGIN:
        return INF
    return max(mu_P, mu_P + d1 * r / (1.0 - r))


def iota(M: WeightSequence) -> IotaValue:
    """``M_iota`` and ``M_inf``; exact only for closed-form or zero tails."""
    if M.is_zero:
        return IotaValue(ExtReal(0.0), ExtReal(0.0), True)
    if M.iota_hint is not None:
        return M.iota_hint
    if M.is_closed_form:
        a, b = M.tail.a, M.tail.b
        if b > 0:
            return IotaValue(ExtReal(INF), ExtReal(math.exp(a)), True)
        if b == 0:
            return IotaValue(ExtReal(math.exp(a)), ExtReal(math.exp(a)), True)
        return IotaValue(ExtReal(0.0), ExtReal(0.0), True)
    p = np.arange(1, M.P + 1)
    roots_log = (M.log_M[1:] - M.logM0) / p
    if M.is_log_convex:
        inf_root = math.exp(M.log_mu[0])
        value = _lc_limit(M.log_mu)
    else:
        # omega_M = omega_{M^lc} and omega_M is finite exactly below M_iota,
        # so M and its log-convex minorant share M_iota
        inf_root = float(np.exp(np.min(roots_log)))
        value = _lc_limit(log_convex_minorant(M).log_mu)
    return IotaValue(ExtReal(value), ExtReal(min(inf_root, value)), False)


# ---------------------------------------------------------------------------
# algebra


def _combine_tail(tm: TailSpec, tn: TailSpec, sign: int) -> TailSpec:
    if tm.kind == "closed_form" and tn.kind == "closed_form":
        a = tm.a + sign * tn.a
        b = tm.b + sign * tn.b
        op = "*" if sign > 0 else "/"
        return TailSpec.closed_form(a, b, f"({tm.label}{op}{tn.label})")
    return TailSpec.explicit()


def _hint(M: WeightSequence, N: WeightSequence, quotient: bool) -> Optional[IotaValue]:
    """Limit of the roots of ``M*N`` (or ``M/N``) from the operand limits.

    Valid when both operands are log-convex, since then their roots
    converge; indeterminate forms (``0*inf``, ``inf/inf``, ``0/0``) give no hint.
    """
    if not (M.is_log_convex and N.is_log_convex):
        return None
    im, inn = iota(M), iota(N)
    x, y = float(im.iota), float(inn.iota)
    if quotient:
        if (math.isinf(x) and math.isinf(y)) or (x == 0.0 and y == 0.0):
            return None
        value = ere_div(x, y)
    else:
        if (x == 0.0 and math.isinf(y)) or (y == 0.0 and math.isinf(x)):
            return None
        value = ere_mul(x, y)
    return IotaValue(value, ExtReal(0.0), im.exact and inn.exact)


def _finish_hint(S: WeightSequence, hint: Optional[IotaValue]) -> WeightSequence:
    if hint is None or S.is_closed_form:
        return S
    if S.is_log_convex:
        inf_root = ExtReal(min(math.exp(S.log_mu[0]), float(hint.iota)))
    else:
        p = np.arange(1, S.P + 1)
        inf_root = ExtReal(min(float(np.exp(np.min((S.log_M[1:] - S.logM0) / p))), float(hint.iota)))
    return WeightSequence(S.logM0, S.log_mu, S.tail, IotaValue(hint.iota, inf_root, hint.exact), S._lineage)


def pointwise_product(M: WeightSequence, N: WeightSequence) -> WeightSequence:
    """``(M_p N_p)_p``; quotients multiply."""
    if M._lineage and M._lineage[0] == "/" and M._lineage[1][1].same_as(N):
        return M._lineage[1][0]
    if N._lineage and N._lineage[0] == "/" and N._lineage[1][1].same_as(M):
        return N._lineage[1][0]
    if M.is_zero or N.is_zero:
        return WeightSequence(M.logM0 + N.logM0, np.zeros(min(M.P, N.P)), TailSpec.zero())
    P = min(M.P, N.P)
    S = WeightSequence(
        M.logM0 + N.logM0,
        M.log_mu[:P] + N.log_mu[:P],
        _combine_tail(M.tail, N.tail, +1),
        None,
        ("*", (M, N)),
    )
    return _finish_hint(S, _hint(M, N, quotient=False))


def pointwise_quotient(M: WeightSequence, N: WeightSequence) -> WeightSequence:
    """``(M_p / N_p)_p``; quotients divide.  The result may lose log-convexity."""
    if N.is_zero:
        raise DegenerateSequence("division by the degenerate sequence")
    if M._lineage and M._lineage[0] == "*":
        left, right = M._lineage[1]
        if right.same_as(N):
            return left
        if left.same_as(N):
            return right
    if M.is_zero:
        return WeightSequence(M.logM0 - N.logM0, np.zeros(min(M.P, N.P)), TailSpec.zero())
    P = min(M.P, N.P)
    S = WeightSequence(
        M.logM0 - N.logM0,
        M.log_mu[:P] - N.log_mu[:P],
        _combine_tail(M.tail, N.tail, -1),
        None,
        ("/", (M, N)),
    )
    return _finish_hint(S, _hint(M, N, quotient=True))


def log_convex_minorant(M: WeightSequence) -> WeightSequence:
    """Largest log-convex sequence below ``M`` on ``p = 0..P``.

    The log-values are the lower convex hull of the points ``(p, log M_p)``,
    computed with a monotone-chain scan and linearly interpolated between
    hull vertices.  Log-convex input is returned unchanged.
    """
    if M.is_zero:
        raise DegenerateSequence("the degenerate sequence has no log-convex minorant")
    if M.is_closed_form and M.tail.b < 0:
        raise DegenerateSequence("decreasing closed-form quotients give M_iota = 0")
    if M.is_log_convex:
        return M
    y = M.log_M
    hull: list[int] = []
    for p in range(y.size):
        while len(hull) >= 2:
            i, j = hull[-2], hull[-1]
            # drop j when it lies on or above the chord from i to p
            if (y[j] - y[i]) * (p - i) >= (y[p] - y[i]) * (j - i):
                hull.pop()
            else:
                break
        hull.append(p)
    lc = np.interp(np.arange(y.size), hull, y[hull])
    lc[hull] = y[hull]
    log_mu = np.maximum.accumulate(np.diff(lc))
    return WeightSequence(M.logM0, log_mu, TailSpec.explicit())


# ---------------------------------------------------------------------------
# relations


class Relation(str, enum.Enum):
    PRECEQ = "Preceq"
    TRIANGLE = "Triangle"
    EQUIVALENT = "Equivalent"
    NOT_COMPARABLE = "NotComparable"
    UNBOUNDED = "Unbounded"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RelationVerdict:
    """Outcome of comparing two sequences (or two weight functions).

    For sequences ``relation`` describes ``M`` against ``N`` through the
    roots ``r_p = ((M_p/M_0)/(N_p/N_0))^(1/p)``; ``C_upper`` is their
    supremum and ``C_limsup`` their limit superior.  ``Unbounded`` means
    the roots were seen to grow without bound, so ``M`` is not below ``N``.
    """

    relation: Relation
    C_upper: ExtReal
    C_limsup: ExtReal
    probe_depth: int
    exact: bool = False


def classify_log_ratio(
    x: np.ndarray,
    log_ratio: np.ndarray,
    slope_eps: float = EPS_MARGIN,
    rel_eps: float = EPS_REL,
    oscillation: bool = True,
) -> tuple[Relation, float, float]:
    """Classify the behaviour of ``exp(log_ratio)`` as ``x`` grows.

    Returns the relation and the observed ``(sup, limsup)`` pair.  A tail
    tending to zero must be monotone in the last quartile and either drop
    below ``rel_eps`` or decay with log-log slope at most ``-slope_eps``.
    """
    lr = np.asarray(log_ratio, dtype=float)
    x = np.asarray(x, dtype=float)
    if oscillation and alternation(lr, math.log(0.5), math.log(2.0)):
        return Relation.NOT_COMPARABLE, INF, INF
    w0 = tail_start(lr.size) - 1
    xw, w = x[w0:], lr[w0:]
    sup = float(np.exp(np.max(lr)))
    if np.any(np.isneginf(w)) and monotone(w, False):
        return Relation.TRIANGLE, sup, 0.0
    if np.any(np.isposinf(w)):
        return Relation.UNBOUNDED, INF, INF
    slope = loglog_slope(xw, w)
    if monotone(w, False) and (w[-1] < math.log(rel_eps) or slope <= -slope_eps):
        return Relation.TRIANGLE, sup, 0.0
    if monotone(w, True) and (w[-1] > -math.log(rel_eps) or slope >= slope_eps):
        return Relation.UNBOUNDED, INF, INF
    limsup = float(np.exp(np.max(w)))
    if float(np.min(w)) - float(np.max(w)) < math.log(0.25):
        return Relation.PRECEQ, sup, limsup
    return Relation.EQUIVALENT, sup, limsup


def compare(M: WeightSequence, N: WeightSequence) -> RelationVerdict:
    """How ``M`` relates to ``N`` through ``r_p = ((M_p/M_0)/(N_p/N_0))^(1/p)``.

    ``Triangle`` means ``r_p -> 0`` (``M`` strictly below ``N``), ``Preceq``
    bounded, ``Equivalent`` bounded in both directions, ``Unbounded`` that
    ``r_p`` grows without bound and ``NotComparable`` that the roots were
    seen both below 1/2 and above 2 in alternation.
    """
    if M.is_zero or N.is_zero:
        raise DegenerateSequence("comparison of degenerate sequences is not defined")
    P = min(M.P, N.P)
    if M.is_closed_form and N.is_closed_form:
        da = M.tail.a - N.tail.a
        db = M.tail.b - N.tail.b
        if db < 0:
            return RelationVerdict(Relation.TRIANGLE, ExtReal(math.exp(da)), ExtReal(0.0), P, True)
        if db == 0:
            c = ExtReal(math.exp(da))
            return RelationVerdict(Relation.EQUIVALENT, c, c, P, True)
        return RelationVerdict(Relation.UNBOUNDED, ExtReal(INF), ExtReal(INF), P, True)
    p = np.arange(1, P + 1, dtype=float)
    lr = ((M.log_M[1:P + 1] - M.logM0) - (N.log_M[1:P + 1] - N.logM0)) / p
    rel, sup, limsup = classify_log_ratio(p, lr)
    return RelationVerdict(rel, ExtReal(sup), ExtReal(limsup), P, False)


def make_oscillating(
    N: WeightSequence,
    P: Optional[int] = None,
    threshold: float = math.log(2.5),
    threshold_step: float = 0.02,
    lead: float = math.log(4.0),
    drift: float = 0.25,
) -> WeightSequence:
    """A log-convex ``M`` whose roots against ``N`` swing between 0 and infinity.

    The quotients of ``M`` alternate between two regimes, switched by the
    running average ``D_p/p`` of ``log(mu_p/nu_p)``:

    * high regime: ``log mu_p = max(prev, log nu_p + lead)``, so ``M`` runs
      ahead of ``N`` until ``D_p/p`` exceeds the current threshold;
    * low regime: ``log mu_p`` grows by ``drift`` times the increment of
      ``log nu_p``, so ``M`` falls behind until ``D_p/p`` drops below minus
      the threshold.

    Thresholds start above ``log 2`` and grow by ``threshold_step`` at every
    switch, so the infinite construction has ``inf r_p = 0`` and
    ``sup r_p = inf``; the low-regime drift keeps ``mu_p`` unbounded.  How
    many swings fit into ``P`` terms depends on how fast ``nu_p`` grows.
    """
    if not N.is_log_convex or N.is_zero:
        raise InvalidSequence("the reference sequence must be log-convex")
    if not math.isinf(iota(N).iota):
        raise InvalidSequence("the reference sequence must have N_iota = +inf")
    P = P or N.P
    nu = np.array([N.logmu(p) for p in range(1, P + 1)]) if P > N.P else N.log_mu[:P]
    m = np.empty(P)
    high = True
    th = threshold
    D = 0.0
    prev = -INF
    for i in range(P):
        if high:
            mi = max(prev, nu[i] + lead)
        else:
            mi = prev + drift * (nu[i] - nu[i - 1])
        m[i] = mi
        prev = mi
        D += mi - nu[i]
        avg = D / (i + 1)
        if high and avg > th:
            high, th = False, th + threshold_step
        elif not high and avg < -th:
            high, th = True, th + threshold_step
    return WeightSequence(N.logM0, m, TailSpec.explicit())


# ---------------------------------------------------------------------------
# growth conditions


@dataclass(frozen=True)
class MgCertificate:
    """Moderate growth ``sup_p mu_{2p}/mu_p < inf`` with the observed constant."""

    holds: bool
    constant: ExtReal
    exact: bool

    def __bool__(self) -> bool:
        return self.holds


def _require_lc(M: WeightSequence) -> None:
    if M.is_zero or not M.is_log_convex:
        raise InvalidSequence("a log-convex, non-degenerate sequence is required")


def has_mg(M: WeightSequence) -> MgCertificate:
    _require_lc(M)
    if M.is_closed_form:
        return MgCertificate(True, ExtReal(2.0 ** M.tail.b), True)
    half = M.P // 2
    p = np.arange(1, half + 1, dtype=float)
    lrho = M.log_mu[1::2][:half] - M.log_mu[:half]
    w0 = tail_start(half) - 1
    slope = loglog_slope(p[w0:], lrho[w0:])
    if monotone(lrho[w0:], True) and slope > EPS_MARGIN:
        return MgCertificate(False, ExtReal(INF), False)
    return MgCertificate(True, ExtReal(float(np.exp(np.max(lrho)))), False)


def _om1_log_ratio(M: WeightSequence, Q: int, p: np.ndarray) -> np.ndarray:
    """``log((M_{Qp})^{1/(Qp)} / (M_p)^{1/p})`` for normalized values."""
    lM = M.log_M - M.logM0
    return lM[Q * p] / (Q * p) - lM[p] / p


def has_om1_criterion(M: WeightSequence) -> bool:
    """``liminf_p (M_{Qp})^{1/(Qp)}/(M_p)^{1/p} > 1`` for some ``Q`` in ``{2,4,8,16}``.

    Closed-form tails use the exact limit ``Q^b``.  Otherwise, for every
    ``Q`` with at least ``OM1_MIN_DEPTH`` admissible indices, the liminf is
    taken as the smaller of the tail-window minimum and a quadratic
    extrapolation in ``1/log p``; slowly growing quotients drift towards 1
    too slowly for the raw window minimum alone.
    """
    _require_lc(M)
    threshold = math.log1p(EPS_MARGIN)
    if M.is_closed_form:
        return any(M.tail.b * math.log(Q) > threshold for Q in OM1_FACTORS)
    for Q in OM1_FACTORS:
        PQ = M.P // Q
        if PQ < OM1_MIN_DEPTH:
            continue
        p = np.arange(tail_start(PQ), PQ + 1)
        window_min = float(np.min(_om1_log_ratio(M, Q, p)))
        probe = np.array([PQ // 16, PQ // 4, PQ])
        extrapolated = quad_extrapolate(probe.astype(float), _om1_log_ratio(M, Q, probe))
        if min(window_min, extrapolated) > threshold:
            return True
    return False


def has_om1_strong(M: WeightSequence) -> bool:
    """``lim_p (M_{Qp})^{1/(Qp)}/(M_p)^{1/p} = inf`` for some ``Q``.

    Never true for closed-form tails (their ratios converge to ``Q^b``).
    For stored data the ``Q = 2`` ratio must increase across the tail window
    with log-log slope at least ``EPS_MARGIN``.
    """
    _require_lc(M)
    if M.is_closed_form:
        return False
    PQ = M.P // 2
    p = np.arange(tail_start(PQ), PQ + 1)
    lr = _om1_log_ratio(M, 2, p)
    if not np.all(np.diff(lr) > 0):
        return False
    return loglog_slope(p.astype(float), np.log(np.maximum(lr, 1e-300))) >= EPS_MARGIN and lr[-1] > 0


def check_power_inequality(M: WeightSequence, c: int, p: int) -> bool:
    """``(M_p/M_0)^c <= M_{cp}/M_0``, which holds for every log-convex sequence."""
    lhs = c * (M.logM(p) - M.logM0)
    rhs = M.logM(c * p) - M.logM0
    return lhs <= rhs + 1e-12 * max(1.0, abs(rhs))


# ---------------------------------------------------------------------------
# sequence definition files


def parse_sequence(text: str) -> WeightSequence:
    """Parse the ``key: value`` sequence format.

    Keys: ``kind`` (``gevrey``, ``quotients`` or ``zero``), ``s`` (gevrey
    exponent), ``logM0``, ``logmu`` (comma-separated log quotients) and
    ``P`` (truncation depth).  Blank lines and ``#`` comments are ignored.
    """
    fields: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise InvalidSequence(f"expected 'key: value', got {raw!r}")
        key, value = (part.strip() for part in line.split(":", 1))
        fields[key] = value
    kind = fields.get("kind")
    try:
        logM0 = float(fields.get("logM0", "0"))
        P = int(fields["P"]) if "P" in fields else None
        if kind == "gevrey":
            M = make_gevrey(float(fields["s"]), P or DEFAULT_DEPTH)
            return M if logM0 == 0.0 else WeightSequence(logM0, M.log_mu, M.tail)
        if kind == "quotients":
            mu = [float(v) for v in fields["logmu"].split(",") if v.strip()]
            if P is not None:
                if P > len(mu):
                    raise InvalidSequence(f"P={P} exceeds the {len(mu)} quotients given")
                mu = mu[:P]
            return make_from_quotients(logM0, mu)
        if kind == "zero":
            return make_zero(logM0, P or DEFAULT_DEPTH)
    except KeyError as exc:
        raise InvalidSequence(f"missing key {exc.args[0]!r} for kind {kind!r}") from None
    except ValueError as exc:
        if isinstance(exc, InvalidSequence):
            raise
        raise InvalidSequence(str(exc)) from None
    raise InvalidSequence(f"unknown sequence kind {kind!r}")


def load_sequence(path: Union[str, Path]) -> WeightSequence:
    return parse_sequence(Path(path).read_text(encoding="utf-8"))


def format_sequence(M: WeightSequence) -> str:
    """Inverse of :func:`parse_sequence` (closed forms other than Gevrey become explicit)."""
    if M.is_zero:
        return f"kind: zero\nlogM0: {M.logM0!r}\nP: {M.P}\n"
    if M.is_closed_form and M.tail.a == 0.0 and M.tail.b > 0:
        return f"kind: gevrey\ns: {M.tail.b!r}\nlogM0: {M.logM0!r}\nP: {M.P}\n"
    mu = ",".join(repr(float(v)) for v in M.log_mu)
    return f"kind: quotients\nlogM0: {M.logM0!r}\nlogmu: {mu}\nP: {M.P}\n"
