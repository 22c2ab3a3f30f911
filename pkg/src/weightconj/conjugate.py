"""Generalized lower and upper Legendre conjugates.

``sigma lower-star tau (t) = inf_{s>0} (sigma(s) + tau(t/s))`` and
``sigma upper-star tau (t) = sup_{s>=0} (sigma(s) - tau(s/t))``.

Generic operands are handled on a global lattice ``u_k = k h`` in
``u = log s`` (``h = ln 10 / per_decade``).  Each ``t`` gets its own window
of ``+-decades`` decades around the natural centre, which is extended only
when monotonicity of the operands shows the optimum may lie outside.  The
incumbent is then refined by successively finer local sub-grids followed by
golden-section steps.  Because the lattice is shared by all ``t``, nested
conjugates reuse cached inner values.

Associated weights of log-convex sequences take the exact route through
pointwise products and quotients of the sequences.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from ._probe import tail_limits
from .errors import NonNormalizedDivisor, NotSubordinate, RangeExceeded
from .extreal import INF, Divergent, ExtReal, ext_add, ext_sub
from .sequences import (
    Relation,
    WeightSequence,
    compare,
    iota,
    make_zero,
    pointwise_product,
    pointwise_quotient,
)
from .weightfn import (
    Associated,
    Constant,
    LowerConj,
    Monomial,
    UpperConj,
    WeightFunction,
    to_log,
)

__all__ = [
    "ConjOptions",
    "DomainInterval",
    "WellDefCert",
    "UpperConjResult",
    "lower_conj_log",
    "upper_conj_log",
    "lower_conj_eval",
    "upper_conj_eval",
    "lower_conj_assoc",
    "upper_conj_assoc",
    "minimizer_witness",
    "lower_legendre_envelope",
    "upper_legendre_envelope",
    "upper_welldef_check",
    "sweep_threads",
]

LN10 = math.log(10.0)
_U_CAP = 700.0
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_CHUNK = 128


@dataclass(frozen=True)
class ConjOptions:
    """Grid and refinement settings for the generic conjugate evaluators.

    ``per_decade`` sets the lattice spacing in ``log s``; ``decades`` is the
    half-width of the initial window; ``refine_rounds`` local sub-grid
    rounds (each followed by golden-section steps) polish the incumbent;
    ``divergence_window`` trailing samples decide blow-up of the upper
    conjugate; ``max_extension_decades`` caps window growth.
    """

    per_decade: int = 400
    decades: float = 4.0
    refine_rounds: int = 3
    divergence_window: int = 32
    max_extension_decades: float = 60.0
    divergence_slope: float = 1e-3

    def __post_init__(self) -> None:
        if self.per_decade < 1:
            raise ValueError("per_decade must be positive")
        if self.refine_rounds < 0:
            raise ValueError("refine_rounds must be non-negative")
        if self.divergence_window < 2:
            raise ValueError("divergence_window must be at least 2")

    @property
    def h(self) -> float:
        return LN10 / self.per_decade

    @property
    def half_width(self) -> int:
        return int(math.ceil(self.decades * LN10 / self.h))


_DEFAULT = ConjOptions()


def sweep_threads() -> int:
    """Worker count for sweeps over independent ``t``, capped by ``WEIGHTCONJ_THREADS``."""
    raw = os.environ.get("WEIGHTCONJ_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 1
    return max(1, n)


@dataclass(frozen=True)
class DomainInterval:
    """Finiteness domain ``[0, hi)`` of a conjugate."""

    hi: ExtReal
    lo: float = 0.0

    def __post_init__(self) -> None:
        if not float(self.hi) > 0:
            raise ValueError("domain must have positive length")


def _log_hi(f: WeightFunction) -> float:
    hi = f.domain_hi
    if hi == 0.0:
        return -INF
    return math.log(hi) if math.isfinite(hi) else INF


def _val(f: WeightFunction, lt: np.ndarray) -> np.ndarray:
    return np.asarray(f.eval_log(lt), dtype=float)


def _at_zero(f: WeightFunction) -> float:
    return float(_val(f, np.array([-INF]))[0])


def _is_conj(f: WeightFunction) -> bool:
    return isinstance(f, (LowerConj, UpperConj))


def _chunked(fn, L: np.ndarray, *extra):
    outs = [fn(L[i:i + _CHUNK], *extra) for i in range(0, L.size, _CHUNK)]
    if not outs:
        return fn(L, *extra)
    if isinstance(outs[0], tuple):
        return tuple(np.concatenate(parts) for parts in zip(*outs))
    return np.concatenate(outs)


# ---------------------------------------------------------------------------
# lower conjugate


def _lower_objective(sigma, tau, u: np.ndarray, L: np.ndarray) -> np.ndarray:
    with np.errstate(invalid="ignore"):
        return _val(sigma, u) + _val(tau, L - u)


def _refine(objective, u0, best, lo, hi, h, rounds, sign):
    """Polish ``sign * objective`` minima around ``u0`` inside ``[lo, hi]`` rowwise."""
    c = u0.copy()
    w = np.full(c.shape, h)
    for _ in range(rounds):
        offs = np.linspace(-1.0, 1.0, 17)
        U = np.clip(c[:, None] + w[:, None] * offs[None, :], lo[:, None], hi[:, None])
        V = sign * objective(U)
        V = np.where(np.isnan(V), INF, V)
        j = np.argmin(V, axis=1)
        vj = V[np.arange(c.size), j]
        better = vj < best
        best = np.where(better, vj, best)
        c = np.where(better, U[np.arange(c.size), j], c)
        w = w / 8.0
    if rounds:
        a = np.maximum(c - w, lo)
        b = np.minimum(c + w, hi)
        x1 = b - _GOLDEN * (b - a)
        x2 = a + _GOLDEN * (b - a)
        f1 = sign * objective(x1[:, None])[:, 0]
        f2 = sign * objective(x2[:, None])[:, 0]
        for _ in range(16):
            left = f1 < f2
            b = np.where(left, x2, b)
            a = np.where(left, a, x1)
            x2n = np.where(left, x1, a + _GOLDEN * (b - a))
            x1n = np.where(left, b - _GOLDEN * (b - a), x2)
            newx = np.where(left, x1n, x2n)
            fn = sign * objective(newx[:, None])[:, 0]
            f1, f2 = np.where(left, fn, f2), np.where(left, f1, fn)
            x1, x2 = x1n, x2n
            for x, fx in ((x1, f1), (x2, f2)):
                ok = fx < best
                best = np.where(ok, fx, best)
                c = np.where(ok, x, c)
    return best, c


def _lower_rows(sigma, tau, L: np.ndarray, opts: ConjOptions) -> np.ndarray:
    h, W = opts.h, opts.half_width
    ls_hi, lt_hi = _log_hi(sigma), _log_hi(tau)
    n = L.size
    out = np.full(n, INF)
    if ls_hi == -INF or lt_hi == -INF:
        return out
    total = ls_hi + lt_hi
    rows = np.flatnonzero(L <= total)
    if rows.size == 0:
        return out
    Lr = L[rows]
    umin = Lr - lt_hi if math.isfinite(lt_hi) else np.full(Lr.size, -INF)
    umax = np.full(Lr.size, ls_hi)
    center = np.clip(Lr / 2.0, umin, umax)
    k0 = np.floor(center / h).astype(np.int64)
    offs = np.arange(-W, W + 1, dtype=np.int64)

    def obj(U):
        return _lower_objective(sigma, tau, U, Lr[:, None] if U.ndim == 2 else Lr)

    K = k0[:, None] + offs[None, :]
    V = obj(K * h)
    j = np.argmin(V, axis=1)
    best = V[np.arange(Lr.size), j]
    best_u = K[np.arange(Lr.size), j] * h
    for ends in (umin, umax):
        fin = np.isfinite(ends)
        if np.any(fin):
            e = np.where(fin, ends, 0.0)
            ve = np.where(fin, obj(e[:, None])[:, 0], INF)
            better = ve < best
            best = np.where(better, ve, best)
            best_u = np.where(better, e, best_u)
    k_lo = k0 - W
    k_hi = k0 + W
    s0, t0 = _at_zero(sigma), _at_zero(tau)
    max_steps = int(math.ceil(opts.max_extension_decades / (2 * opts.decades)))
    for _ in range(max_steps):
        ulo, uhi = k_lo * h, k_hi * h
        left_bound = _val(tau, Lr - ulo) + s0
        right_bound = _val(sigma, uhi) + t0
        need_l = (ulo > umin) & (left_bound < best) & (ulo > -_U_CAP)
        need_r = (uhi < umax) & (right_bound < best) & (uhi < _U_CAP)
        if not (np.any(need_l) or np.any(need_r)):
            break
        for need, sgn in ((need_l, -1), (need_r, 1)):
            idx = np.flatnonzero(need)
            if idx.size == 0:
                continue
            start = k_lo[idx] - 2 * W - 1 if sgn < 0 else k_hi[idx] + 1
            Kb = start[:, None] + np.arange(2 * W + 1, dtype=np.int64)[None, :]
            Vb = _lower_objective(sigma, tau, Kb * h, Lr[idx][:, None])
            jb = np.argmin(Vb, axis=1)
            vb = Vb[np.arange(idx.size), jb]
            better = vb < best[idx]
            best[idx] = np.where(better, vb, best[idx])
            best_u[idx] = np.where(better, Kb[np.arange(idx.size), jb] * h, best_u[idx])
            if sgn < 0:
                k_lo[idx] = start
            else:
                k_hi[idx] = start + 2 * W
    fin = np.isfinite(best)
    if opts.refine_rounds and np.any(fin):
        f_idx = np.flatnonzero(fin)
        Lf = Lr[f_idx]
        lo = np.maximum(umin[f_idx], -_U_CAP)
        hi = np.minimum(umax[f_idx], _U_CAP)

        def obj_f(U):
            return _lower_objective(sigma, tau, U, Lf[:, None])

        b2, _ = _refine(obj_f, best_u[f_idx], best[f_idx], lo, hi, h, opts.refine_rounds, 1.0)
        best[f_idx] = b2
    out[rows] = best
    return out


def lower_conj_log(sigma: WeightFunction, tau: WeightFunction, lt, opts: Optional[ConjOptions] = None) -> np.ndarray:
    """``sigma lower-star tau`` at ``exp(lt)``; ``lt = -inf`` gives ``sigma(0) + tau(0)``."""
    opts = opts or _DEFAULT
    lt = np.asarray(lt, dtype=float)
    shape = lt.shape
    lt = lt.ravel()
    if _is_conj(tau) and not _is_conj(sigma):
        # commutativity: keep the expensive operand on the shared lattice
        sigma, tau = tau, sigma
    out = np.empty(lt.size)
    zero = np.isneginf(lt)
    if np.any(zero):
        out[zero] = float(ext_add(_at_zero(sigma), _at_zero(tau)))
    pos = np.flatnonzero(~zero)
    if pos.size:
        out[pos] = _chunked(lambda x: _lower_rows(sigma, tau, x, opts), lt[pos])
    return out.reshape(shape)


def lower_conj_eval(sigma: WeightFunction, tau: WeightFunction, t: float, opts: Optional[ConjOptions] = None) -> ExtReal:
    """``inf_{s>0} (sigma(s) + tau(t/s))`` for ``t > 0``; ``sigma(0) + tau(0)`` at ``t = 0``."""
    return ExtReal(float(lower_conj_log(sigma, tau, np.array([float(to_log(t))]), opts)[0]))


# ---------------------------------------------------------------------------
# upper conjugate


def _upper_objective(sigma, tau, u: np.ndarray, L: np.ndarray, umax: np.ndarray) -> np.ndarray:
    with np.errstate(invalid="ignore", over="ignore"):
        v = ext_sub(_val(sigma, u), _val(tau, u - L))
    return np.where(u > umax, -INF, v)


def _upper_rows(sigma, tau, L: np.ndarray, opts: ConjOptions) -> tuple[np.ndarray, np.ndarray]:
    h, W = opts.h, opts.half_width
    ls_hi, lt_hi = _log_hi(sigma), _log_hi(tau)
    n = L.size
    out = np.full(n, INF)
    div = np.zeros(n, dtype=bool)
    s0 = float(ext_sub(_at_zero(sigma), _at_zero(tau)))
    # sigma = +inf on (sigma_hi, tau_hi t) while tau(s/t) stays finite
    if lt_hi == -INF:
        out[:] = s0
        return out, div
    if ls_hi == INF:
        inf_rows = np.zeros(n, dtype=bool)
    else:
        inf_rows = ls_hi < lt_hi + L
    rows = np.flatnonzero(~inf_rows)
    if rows.size == 0:
        return out, div
    Lr = L[rows]
    umax = Lr + lt_hi if math.isfinite(lt_hi) else np.full(Lr.size, INF)
    center = np.minimum(Lr, umax)
    k0 = np.floor(center / h).astype(np.int64)
    offs = np.arange(-W, W + 1, dtype=np.int64)

    def obj(U, idx=None):
        Ls = Lr if idx is None else Lr[idx]
        um = umax if idx is None else umax[idx]
        return _upper_objective(sigma, tau, U, Ls[:, None], um[:, None])

    K = k0[:, None] + offs[None, :]
    V = obj(K * h)
    vmax = np.max(V, axis=1)
    tol = 1e-12 * (1.0 + np.abs(np.where(np.isfinite(vmax), vmax, 0.0)))
    j = np.argmax(V >= (vmax - tol)[:, None], axis=1)
    best = vmax.copy()
    best_u = K[np.arange(Lr.size), j] * h
    best_k = K[np.arange(Lr.size), j]
    tail = V[:, -opts.divergence_window:]
    fin_end = np.isfinite(umax)
    if np.any(fin_end):
        e = np.where(fin_end, umax, 0.0)
        ve = np.where(fin_end, _upper_objective(sigma, tau, e[:, None], Lr[:, None], e[:, None])[:, 0], -INF)
        better = ve > best
        best = np.where(better, ve, best)
        best_u = np.where(better, e, best_u)
    best = np.maximum(best, s0)
    k_lo = k0 - W
    k_hi = k0 + W
    t0 = _at_zero(tau)
    max_steps = int(math.ceil(opts.max_extension_decades / (2 * opts.decades)))
    edge = opts.divergence_window
    for _ in range(max_steps):
        ulo, uhi = k_lo * h, k_hi * h
        left_bound = _val(sigma, ulo) - t0
        need_l = (left_bound > best) & (ulo > -_U_CAP) & np.isfinite(best)
        need_r = (best_k >= k_hi - edge) & (uhi < umax) & (uhi < _U_CAP) & np.isfinite(best)
        if not (np.any(need_l) or np.any(need_r)):
            break
        for need, sgn in ((need_l, -1), (need_r, 1)):
            idx = np.flatnonzero(need)
            if idx.size == 0:
                continue
            start = k_lo[idx] - 2 * W - 1 if sgn < 0 else k_hi[idx] + 1
            Kb = start[:, None] + np.arange(2 * W + 1, dtype=np.int64)[None, :]
            Vb = obj(Kb * h, idx)
            vb = np.max(Vb, axis=1)
            tolb = 1e-12 * (1.0 + np.abs(np.where(np.isfinite(vb), vb, 0.0)))
            jb = np.argmax(Vb >= (vb - tolb)[:, None], axis=1)
            better = vb > best[idx] + tolb
            best[idx] = np.where(better, vb, best[idx])
            best_u[idx] = np.where(better, Kb[np.arange(idx.size), jb] * h, best_u[idx])
            best_k[idx] = np.where(better, Kb[np.arange(idx.size), jb], best_k[idx])
            if sgn < 0:
                k_lo[idx] = start
            else:
                k_hi[idx] = start + 2 * W
                tail[idx] = Vb[:, -opts.divergence_window:]
    # blow-up: maximum pinned at the right edge of a strictly increasing tail
    at_edge = (best_k >= k_hi - edge) & (k_hi * h < umax)
    with np.errstate(invalid="ignore"):
        inc = np.all(np.diff(tail, axis=1) > 0, axis=1)
        slope = (tail[:, -1] - tail[:, 0]) / ((tail.shape[1] - 1) * h)
    blow = at_edge & inc & (slope > opts.divergence_slope)
    blow |= np.isinf(best) & (best > 0)
    fin = np.isfinite(best) & ~blow
    if opts.refine_rounds and np.any(fin):
        f_idx = np.flatnonzero(fin)
        lo = np.full(f_idx.size, -_U_CAP)
        hi = np.minimum(umax[f_idx], _U_CAP)

        def obj_f(U):
            return obj(U, f_idx)

        b2, _ = _refine(obj_f, best_u[f_idx], -best[f_idx], lo, hi, h, opts.refine_rounds, -1.0)
        best[f_idx] = -b2
    best[blow] = INF
    out[rows] = best
    div[rows] = blow
    return out, div


def upper_conj_log(
    sigma: WeightFunction,
    tau: WeightFunction,
    lt,
    opts: Optional[ConjOptions] = None,
    allow_nonnormalized: bool = False,
) -> tuple[np.ndarray, np.ndarray]:
    """``sigma upper-star tau`` at ``exp(lt)`` and a per-point divergence flag.

    ``lt = -inf`` gives ``sigma(0) - tau(0)``.  A divisor with
    ``tau(0) != 0`` raises :class:`NonNormalizedDivisor` unless
    ``allow_nonnormalized`` is set.
    """
    opts = opts or _DEFAULT
    if not allow_nonnormalized and _at_zero(tau) != 0.0:
        raise NonNormalizedDivisor(f"{tau.to_expr()} does not vanish at 0")
    lt = np.asarray(lt, dtype=float)
    shape = lt.shape
    lt = lt.ravel()
    out = np.empty(lt.size)
    div = np.zeros(lt.size, dtype=bool)
    zero = np.isneginf(lt)
    if np.any(zero):
        out[zero] = float(ext_sub(_at_zero(sigma), _at_zero(tau)))
    pos = np.flatnonzero(~zero)
    if pos.size:
        v, d = _chunked(lambda x: _upper_rows(sigma, tau, x, opts), lt[pos])
        out[pos] = v
        div[pos] = d
    return out.reshape(shape), div.reshape(shape)


def upper_conj_eval(
    sigma: WeightFunction,
    tau: WeightFunction,
    t: float,
    opts: Optional[ConjOptions] = None,
    allow_nonnormalized: bool = False,
) -> ExtReal:
    """``sup_{s>=0} (sigma(s) - tau(s/t))``; :class:`Divergent` on detected blow-up."""
    v, d = upper_conj_log(sigma, tau, np.array([float(to_log(t))]), opts, allow_nonnormalized)
    return Divergent() if d[0] else ExtReal(float(v[0]))


# ---------------------------------------------------------------------------
# envelopes


def lower_legendre_envelope(sigma: WeightFunction, alpha: float, t: float, opts: Optional[ConjOptions] = None) -> ExtReal:
    """``sigma lower-star t^(1/alpha)``, the lower envelope in multiplicative form."""
    return lower_conj_eval(sigma, Monomial(alpha), t, opts)


def upper_legendre_envelope(sigma: WeightFunction, alpha: float, t: float, opts: Optional[ConjOptions] = None) -> ExtReal:
    """``sigma upper-star t^(1/alpha)``, the upper envelope in multiplicative form."""
    return upper_conj_eval(sigma, Monomial(alpha), t, opts)


# ---------------------------------------------------------------------------
# sequence routes


def lower_conj_assoc(M: WeightSequence, N: WeightSequence) -> Associated:
    """``omega_M lower-star omega_N`` as ``omega_{M.N}``, evaluated exactly.

    The domain is ``[0, M_iota N_iota)``; a degenerate operand gives the
    function that is 0 at the origin and ``+inf`` elsewhere.
    """
    return Associated.of(pointwise_product(M, N))


def lower_conj_domain(M: WeightSequence, N: WeightSequence) -> DomainInterval:
    """``[0, M_iota N_iota)``; raises for a degenerate operand (empty domain)."""
    a, b = float(iota(M).iota), float(iota(N).iota)
    return DomainInterval(ExtReal(a * b if a and b else 0.0))


class UpperConjResult(NamedTuple):
    """Exact-route result: the function and whether it equals the conjugate.

    ``exactness`` is ``"Exact"`` when ``M/N`` is log-convex (equality) and
    ``"UpperBoundOnly"`` otherwise; the grid evaluator
    ``UpperConj(Associated.of(M), Associated.of(N))`` then gives the true
    values, which lie below the returned function.
    """

    function: WeightFunction
    exactness: str


def upper_conj_assoc(M: WeightSequence, N: WeightSequence) -> UpperConjResult:
    """``omega_M upper-star omega_N`` through the quotient ``M/N``.

    Standard operands (``M_iota = N_iota = +inf``) need ``N`` subordinate to
    ``M``; otherwise :class:`NotSubordinate` is raised.  Operands with finite
    or zero ``iota`` follow the non-standard rules: ``N`` degenerate gives
    the zero function; ``M`` degenerate, or ``M_iota`` finite with
    ``N_iota = +inf``, gives 0 at the origin and ``+inf`` elsewhere.
    """
    im, in_ = float(iota(M).iota), float(iota(N).iota)
    if N.is_zero or in_ == 0.0:
        return UpperConjResult(Constant(0.0), "Exact")
    if M.is_zero or im == 0.0:
        return UpperConjResult(Associated.of(M), "Exact")
    if math.isinf(in_) and not math.isinf(im):
        # M/N has iota 0: value 0 at the origin and +inf elsewhere
        return UpperConjResult(Associated.of(make_zero(M.logM0 - N.logM0, min(M.P, N.P))), "Exact")
    if math.isinf(im) and math.isinf(in_):
        verdict = compare(N, M)
        if verdict.relation not in (Relation.TRIANGLE, Relation.PRECEQ, Relation.EQUIVALENT):
            raise NotSubordinate(f"N is not subordinate to M ({verdict.relation})")
    Q = pointwise_quotient(M, N)
    fn = Associated.of(Q)
    return UpperConjResult(fn, "Exact" if Q.is_log_convex else "UpperBoundOnly")


def minimizer_witness(M: WeightSequence, N: WeightSequence, t: float) -> float:
    """A point ``s_t`` with ``omega_M(s_t) + omega_N(t/s_t) = omega_{M.N}(t)``.

    For ``t`` between ``mu_p nu_p`` and ``mu_{p+1} nu_{p+1}`` write
    ``t = (mu_p nu_p)^(1-theta) (mu_{p+1} nu_{p+1})^theta`` and take
    ``s_t = mu_p^(1-theta) mu_{p+1}^theta``.  Below ``mu_1 nu_1`` any
    ``s`` with ``s < mu_1`` and ``t/s < nu_1`` works.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    P = min(M.P, N.P)
    lm = M.log_mu[:P]
    ln_ = N.log_mu[:P]
    m1, n1 = math.exp(lm[0]), math.exp(ln_[0])
    if t < m1 * n1:
        if t == 0.0:
            return m1 / 2.0
        return math.sqrt(t * m1 / n1)
    lt = math.log(t)
    if lm[-1] + ln_[-1] < lt:
        if not (M.is_closed_form and N.is_closed_form):
            raise RangeExceeded(f"t={t} lies beyond the stored quotients")
        while lm[-1] + ln_[-1] < lt:
            P *= 2
            if P > 1 << 26:
                raise RangeExceeded(f"t={t} is too large to locate")
            q = np.arange(1, P + 1, dtype=float)
            lm, ln_ = M.tail.log_mu(q), N.tail.log_mu(q)
    lam = lm + ln_
    p = int(np.searchsorted(lam, lt, side="right"))  # lam[p-1] <= lt < lam[p]
    if p >= lam.size:
        return math.exp(lm[-1])
    a, b = lam[p - 1], lam[p]
    theta = 0.0 if b == a else (lt - a) / (b - a)
    return math.exp((1.0 - theta) * lm[p - 1] + theta * lm[p])


# ---------------------------------------------------------------------------
# well-definedness


@dataclass(frozen=True)
class WellDefCert:
    """Verdict on whether ``sigma upper-star tau`` is finite.

    ``status`` is ``WellDefined``, ``WellDefinedUpTo`` (finite on
    ``[0, t0)`` with finite ``t0``), ``IllDefined`` (``+inf`` from ``t0`` on)
    or ``Unknown``.  ``samples`` maps probe points ``t`` to the smallest
    observed ``D_t`` with ``sigma(tu) <= tau(u) + D_t`` on the probe.
    """

    status: str
    evidence: str
    t0: Optional[ExtReal] = None
    samples: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status not in ("WellDefined", "WellDefinedUpTo", "IllDefined", "Unknown"):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "WellDefinedUpTo" and not (self.t0 is not None and math.isfinite(float(self.t0))):
            raise ValueError("WellDefinedUpTo needs a finite t0")

    @property
    def well_defined(self) -> bool:
        return self.status == "WellDefined"


def _exact_welldef(M: WeightSequence, N: WeightSequence) -> WellDefCert:
    ev = "ExactSequenceCriterion"
    im, in_ = float(iota(M).iota), float(iota(N).iota)
    if N.is_zero or in_ == 0.0:
        return WellDefCert("WellDefined", ev)
    if M.is_zero or im == 0.0:
        return WellDefCert("IllDefined", ev, ExtReal(0.0))
    if math.isinf(im) and not math.isinf(in_):
        return WellDefCert("WellDefined", ev)
    if not math.isinf(im) and math.isinf(in_):
        return WellDefCert("IllDefined", ev, ExtReal(0.0))
    if not math.isinf(im):
        return WellDefCert("WellDefinedUpTo", ev, ExtReal(im / in_))
    verdict = compare(N, M)
    if verdict.relation is Relation.TRIANGLE:
        return WellDefCert("WellDefined", ev)
    if verdict.relation in (Relation.PRECEQ, Relation.EQUIVALENT):
        return WellDefCert("WellDefinedUpTo", ev, ExtReal(1.0 / float(verdict.C_limsup)))
    return WellDefCert("IllDefined", ev, ExtReal(0.0))


def upper_welldef_check(
    sigma: WeightFunction,
    tau: WeightFunction,
    opts: Optional[ConjOptions] = None,
    eps: float = 0.05,
) -> WellDefCert:
    """Decide finiteness of ``sigma upper-star tau``.

    Associated operands use the sequence criterion (``N`` strictly below
    ``M``: well defined; ``N`` bounded by ``M``: finite up to
    ``t0 = 1/limsup (N_p/M_p)^(1/p)``).  Other operands are probed through
    ``sigma(tu)/tau(u)`` for large ``u``: a uniform bound below ``1 - eps``
    means well defined, a tail above ``1 + eps`` at some ``t`` means
    ``+inf`` from that ``t`` on, anything else is ``Unknown``.
    """
    if isinstance(sigma, Associated) and isinstance(tau, Associated):
        return _exact_welldef(sigma.seq, tau.seq)
    ev = "LimsupProbe"
    ts = np.geomspace(1e-4, 1e4, 33)
    us = np.geomspace(1e2, 1e8, 200)
    lu = np.log(us)
    tv = _val(tau, lu)
    sup_limsup = 0.0
    samples = {}
    for t in ts:
        sv = _val(sigma, lu + math.log(t))
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(tv > 0, sv / tv, np.where(sv > 0, INF, 0.0))
        hi, lo = tail_limits(us[us.size // 2:], ratio[us.size // 2:])
        d = sv - tv
        samples[float(t)] = float(np.max(np.where(np.isnan(d), 0.0, d)))
        if lo > 1.0 + eps:
            return WellDefCert("IllDefined", ev, ExtReal(float(t)), samples)
        sup_limsup = max(sup_limsup, hi)
    if sup_limsup < 1.0 - eps:
        return WellDefCert("WellDefined", ev, None, samples)
    return WellDefCert("Unknown", ev, None, samples)
