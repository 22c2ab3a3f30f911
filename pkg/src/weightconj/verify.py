"""Runnable checks of the identities and inequalities relating sequences,
associated weights, conjugates and growth indices.

Each check compares independent routes (exact sequence arithmetic, grid
conjugates, direct optimisation, index brackets) and returns a
:class:`CheckReport`.  A check whose hypotheses fail on the given operands
reports ``skipped`` with the reason instead of passing.

:func:`run_suite` runs the standard fixture list in a fixed order and
:func:`write_csv` serialises the reports.
"""

from __future__ import annotations

import csv
import io
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Optional, TextIO

import numpy as np
from scipy.optimize import minimize_scalar

from .conjugate import (
    ConjOptions,
    lower_conj_assoc,
    lower_legendre_envelope,
    minimizer_witness,
    sweep_threads,
    upper_conj_assoc,
    upper_conj_eval,
    upper_legendre_envelope,
    upper_welldef_check,
)
from .errors import RangeExceeded, WeightConjError
from .extreal import INF, is_divergent
from .indices import IndexOptions, gamma_lower, gamma_upper
from .sequences import (
    Relation,
    WeightSequence,
    compare,
    has_mg,
    has_om1_criterion,
    has_om1_strong,
    iota,
    make_from_quotients,
    make_gevrey,
    make_zero,
    pointwise_product,
    pointwise_quotient,
)
from .weightfn import (
    Associated,
    LogPlus,
    LowerConj,
    Monomial,
    ProbeSpec,
    Scale,
    Shift,
    UpperConj,
    WeightFunction,
    ZeroValue,
    check_om1,
    check_om6,
    eval_weight,
    relate,
    to_log,
)

__all__ = [
    "CheckReport",
    "TOL_EXACT",
    "TOL_GRID",
    "TOL_INDEX",
    "SuiteConfig",
    "verify_product_identity",
    "verify_quotient_identity",
    "verify_inverse_roundtrips",
    "verify_index_theorems",
    "verify_preservation_lemmas",
    "verify_bigO_propositions",
    "verify_general_inverse_bounds",
    "verify_nonstandard_suite",
    "verify_lower_basic",
    "verify_upper_basic",
    "verify_logplus_fixed_points",
    "verify_lower_relation_preservation",
    "verify_upper_divergence",
    "verify_welldef_probe",
    "verify_envelope_criterion",
    "verify_subordination_chain",
    "verify_upper_equivalence_transfer",
    "verify_sequence_welldef",
    "suite",
    "run_suite",
    "write_csv",
]

TOL_EXACT = 1e-9
TOL_GRID = 1e-3
TOL_INDEX = 0.1

O_RELATIONS = (Relation.PRECEQ, Relation.TRIANGLE, Relation.EQUIVALENT)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check.

    ``status`` is ``pass``, ``fail`` or ``skipped``; ``reason`` explains
    skips and failures (and carries notes on partially skipped parts).
    ``max_abs_err`` is the largest deviation or inequality violation seen,
    compared against ``tolerance``.
    """

    check_id: str
    status: str
    max_abs_err: float
    grid_size: int
    runtime_ms: int
    tolerance: float
    reason: str = ""

    def __post_init__(self) -> None:
        if self.status not in ("pass", "fail", "skipped"):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "pass" and not self.max_abs_err <= self.tolerance:
            raise ValueError("a passing check must stay within its tolerance")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    @property
    def status_text(self) -> str:
        return f"skipped({self.reason})" if self.status == "skipped" else self.status


class _Skip(Exception):
    """Raised inside a check body when its hypotheses do not hold."""


@dataclass
class _Tally:
    """Accumulates deviations, point counts and failed assertions."""

    tol: float
    err: float = 0.0
    n: int = 0
    problems: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    asserted: int = 0

    def close(self, got, want, label: str, tol: Optional[float] = None) -> float:
        """Record ``|got - want|`` (equal infinities count as 0)."""
        e = _abs_err(got, want)
        self.asserted += 1
        self.n += int(np.size(got))
        limit = self.tol if tol is None else tol
        if tol is None:
            self.err = max(self.err, e)
        elif e > limit:
            self.problems.append(f"{label}: error {e:.3g} > {limit:.3g}")
        if tol is None and e > limit:
            self.problems.append(f"{label}: error {e:.3g}")
        return e

    def below(self, lhs, rhs, label: str) -> float:
        """Record the violation of ``lhs <= rhs`` (0 when satisfied)."""
        v = _violation(lhs, rhs)
        self.asserted += 1
        self.n += int(np.size(lhs))
        self.err = max(self.err, v)
        if v > self.tol:
            self.problems.append(f"{label}: violated by {v:.3g}")
        return v

    def require(self, cond: bool, label: str) -> None:
        self.asserted += 1
        if not cond:
            self.problems.append(label)


def _abs_err(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    same = (a == b) | (np.isnan(a) & np.isnan(b))
    with np.errstate(invalid="ignore"):
        d = np.abs(a - b)
    d = np.where(same, 0.0, d)
    d = np.where(np.isnan(d), INF, d)
    return float(np.max(d)) if d.size else 0.0


def _violation(lhs, rhs) -> float:
    lhs = np.asarray(lhs, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    ok = (lhs <= rhs) | (np.isneginf(lhs)) | (np.isposinf(rhs))
    with np.errstate(invalid="ignore"):
        d = lhs - rhs
    d = np.where(ok, 0.0, d)
    d = np.where(np.isnan(d), INF, d)
    return float(np.max(d)) if d.size else 0.0


def _run(check_id: str, tol: float, body: Callable[[_Tally], None]) -> CheckReport:
    tally = _Tally(tol)
    start = time.perf_counter()
    status, reason = "pass", ""
    try:
        body(tally)
        if tally.problems:
            status, reason = "fail", "; ".join(tally.problems)
        elif tally.asserted == 0:
            status, reason = "skipped", "; ".join(tally.notes) or "no assertion applied"
        else:
            reason = "; ".join(tally.notes)
    except _Skip as exc:
        status, reason = "skipped", str(exc)
    except WeightConjError as exc:
        status, reason = "fail", f"{type(exc).__name__}: {exc}"
    ms = int(round((time.perf_counter() - start) * 1000))
    err = tally.err
    if status == "pass" and not err <= tol:
        status = "fail"
    return CheckReport(check_id, status, err, tally.n, ms, tol, reason)


def _values(f: WeightFunction, t) -> np.ndarray:
    return np.asarray(f.eval_log(to_log(np.asarray(t, dtype=float))), dtype=float)


def _label(M: WeightSequence) -> str:
    if M.is_closed_form and M.tail.label:
        return M.tail.label
    return M.tail.kind


def _assoc(M: WeightSequence) -> Associated:
    return Associated.of(M, _label(M))


def _iotas(M: WeightSequence, N: WeightSequence) -> tuple[float, float]:
    return float(iota(M).iota), float(iota(N).iota)


def _grid(t_grid, lo: float, hi: float, count: int) -> np.ndarray:
    return np.linspace(lo, hi, count) if t_grid is None else np.asarray(t_grid, dtype=float)


# ---------------------------------------------------------------------------
# sequence identities


def verify_product_identity(
    M: WeightSequence,
    N: WeightSequence,
    t_grid=None,
    tol: float = TOL_GRID,
    conj: Optional[ConjOptions] = None,
    check_id: Optional[str] = None,
) -> CheckReport:
    """``omega_{M.N} = omega_M lower-star omega_N`` against the grid conjugate.

    Finite ``M_iota N_iota`` restricts the comparison to ``[0, M_iota N_iota)``
    and requires ``+inf`` from both routes beyond it.  The minimizer witness
    must reproduce the exact value to ``TOL_EXACT`` wherever it is defined.
    """
    t = _grid(t_grid, 0.0, 100.0, 200)
    cid = check_id or f"product_identity[{_label(M)},{_label(N)}]"

    def body(tally: _Tally) -> None:
        im, in_ = _iotas(M, N)
        exact = lower_conj_assoc(M, N)
        grid = LowerConj(_assoc(M), _assoc(N), conj)
        hi = im * in_ if im > 0 and in_ > 0 else 0.0
        inside = t < hi * (1.0 - 1e-2) if math.isfinite(hi) else np.ones(t.size, dtype=bool)
        if hi == 0.0:
            inside = t == 0.0
        beyond = t > hi * (1.0 + 1e-2)
        if math.isfinite(hi):
            # the stored quotients fix omega_{M.N} exactly only below mu_P nu_P
            lam = np.exp(exact.seq.log_mu[-1]) if not exact.seq.is_zero else 0.0
            inside &= (t < lam) | exact.seq.is_closed_form
        ev = _values(exact, t[inside])
        gv = _values(grid, t[inside])
        tally.close(gv, ev, "grid vs exact")
        if np.any(beyond):
            tally.require(bool(np.all(np.isposinf(_values(grid, t[beyond])))), "grid finite beyond M_iota N_iota")
            tally.require(bool(np.all(np.isposinf(_values(exact, t[beyond])))), "exact finite beyond M_iota N_iota")
        if M.is_zero or N.is_zero or hi == 0.0:
            return
        wM, wN = _assoc(M), _assoc(N)
        worst = 0.0
        for ti, vi in zip(t[inside], ev):
            try:
                s = minimizer_witness(M, N, float(ti))
            except RangeExceeded:
                continue
            w = float(eval_weight(wM, s)) + float(eval_weight(wN, float(ti) / s))
            worst = max(worst, abs(w - vi) / max(1.0, abs(vi)))
        tally.require(worst <= TOL_EXACT, f"witness misses the exact value by {worst:.3g}")

    return _run(cid, tol, body)


def _upper_grid(M: WeightSequence, N: WeightSequence, conj) -> UpperConj:
    return UpperConj(_assoc(M), _assoc(N), conj)


def verify_quotient_identity(
    M: WeightSequence,
    N: WeightSequence,
    t_grid=None,
    tol: float = TOL_GRID,
    conj: Optional[ConjOptions] = None,
    check_id: Optional[str] = None,
) -> CheckReport:
    """``omega_M upper-star omega_N <= omega_{M/N}``, with equality when ``M/N`` is log-convex.

    With ``N`` only bounded by ``M`` the identity is compared on
    ``[0, 1/C)`` (``C`` the limsup of the roots of ``N/M``) and both routes
    must give ``+inf`` beyond.
    """
    t = _grid(t_grid, 0.0, 50.0, 200)
    cid = check_id or f"quotient_identity[{_label(M)},{_label(N)}]"

    def body(tally: _Tally) -> None:
        im, in_ = _iotas(M, N)
        t0 = INF
        if math.isinf(im) and math.isinf(in_) and not (M.is_zero or N.is_zero):
            verdict = compare(N, M)
            if verdict.relation not in O_RELATIONS:
                raise _Skip(f"N is not bounded by M ({verdict.relation})")
            if verdict.relation is not Relation.TRIANGLE:
                t0 = 1.0 / float(verdict.C_limsup)
        elif 0 < im < INF and 0 < in_ < INF:
            t0 = im / in_
        res = upper_conj_assoc(M, N)
        grid = _upper_grid(M, N, conj)
        keep = np.abs(t / t0 - 1.0) > 2e-2 if math.isfinite(t0) else np.ones(t.size, dtype=bool)
        ts = t[keep]
        ev = _values(res.function, ts)
        gv = _values(grid, ts)
        tally.below(gv, ev + 0.0, "grid above omega_{M/N}")
        if res.exactness == "Exact":
            tally.close(gv, ev, "grid vs omega_{M/N}")
        else:
            tally.notes.append("equality skipped: M/N is not log-convex")

    return _run(cid, tol, body)


def verify_inverse_roundtrips(
    M: WeightSequence,
    N: WeightSequence,
    t_grid=None,
    tol: float = TOL_GRID,
    conj: Optional[ConjOptions] = None,
    check_id: Optional[str] = None,
) -> CheckReport:
    """Both inverse identities, through exact sequence arithmetic and nested grid conjugates.

    (i) ``(omega_M lower-star omega_N) upper-star omega_N = omega_M`` on
    ``[0, M_iota)`` when ``N_iota = +inf`` (on all of ``[0, inf)`` when
    ``M_iota = +inf``; then also the variant dividing by ``omega_M``, which
    recovers ``omega_N`` on ``[0, N_iota)``).
    (ii) ``omega_N lower-star (omega_M upper-star omega_N) = omega_M`` when
    ``M_iota = +inf``, ``M/N`` is log-convex and ``N`` is bounded by ``M``.
    """
    t = _grid(t_grid, 0.0, 50.0, 50)
    cid = check_id or f"inverse_roundtrips[{_label(M)},{_label(N)}]"

    def body(tally: _Tally) -> None:
        im, in_ = _iotas(M, N)
        aM, aN = _assoc(M), _assoc(N)
        if math.isinf(in_) or math.isinf(im):
            ts = t[t < 0.98 * im] if math.isfinite(im) else t
            ref = _values(aM, ts)
            P = pointwise_product(M, N)
            exact = upper_conj_assoc(P, N).function
            tally.close(_values(exact, ts), ref, "(i) exact route")
            nested = UpperConj(LowerConj(aM, aN, conj), aN, conj)
            tally.close(_values(nested, ts), ref, "(i) grid route")
            if math.isinf(im) and math.isfinite(in_):
                tn = t[t < 0.98 * in_]
                refn = _values(aN, tn)
                tally.close(_values(upper_conj_assoc(P, M).function, tn), refn, "(i) variant exact route")
                swapped = UpperConj(LowerConj(aM, aN, conj), aM, conj)
                tally.close(_values(swapped, tn), refn, "(i) variant grid route")
        else:
            tally.notes.append("(i) skipped: both iota finite")
        Q = pointwise_quotient(M, N)
        if not math.isinf(im):
            tally.notes.append("(ii) skipped: M_iota finite")
            return
        if not Q.is_log_convex:
            tally.notes.append("(ii) skipped: M/N not log-convex")
            return
        if math.isinf(in_):
            rel = compare(N, M).relation
            if rel not in O_RELATIONS:
                tally.notes.append(f"(ii) skipped: N not bounded by M ({rel})")
                return
        ref = _values(aM, t)
        exact = lower_conj_assoc(N, Q)
        tally.close(_values(exact, t), ref, "(ii) exact route")
        nested = LowerConj(aN, UpperConj(aM, aN, conj), conj)
        tally.close(_values(nested, t), ref, "(ii) grid route")

    return _run(cid, tol, body)


# ---------------------------------------------------------------------------
# growth indices


def verify_index_theorems(
    sigma: WeightFunction,
    tau: WeightFunction,
    tol_idx: float = TOL_INDEX,
    opts: Optional[IndexOptions] = None,
    check_id: Optional[str] = None,
) -> CheckReport:
    """Index inequalities for both conjugates, asserted on brackets with slack ``tol_idx``.

    Operand indices may come from the analytic rules; conjugate indices are
    always estimated numerically.  Lower-bound sides use bracket lower ends,
    upper-bound sides bracket upper ends.  Inequalities with an infinite
    index involved hold only formally and are skipped.  When both operands
    have ``gamma = gamma_bar`` finite, the bracket of each conjugate must
    also reach the sum (resp. difference) of the operand indices.
    """
    opts = opts or IndexOptions()
    num = replace(opts, use_analytic=False)
    cid = check_id or f"index_theorems[{sigma.to_expr()},{tau.to_expr()}]"

    def body(tally: _Tally) -> None:
        tally.n = opts.tail_count
        gs, Gs = gamma_lower(sigma, opts), gamma_upper(sigma, opts)
        gt, Gt = gamma_lower(tau, opts), gamma_upper(tau, opts)
        fin = lambda *xs: all(math.isfinite(float(x)) for x in xs)  # noqa: E731
        lower = LowerConj(sigma, tau)
        gL, GL = gamma_lower(lower, num), gamma_upper(lower, num)
        if float(gs.hi) > 0 and float(gt.hi) > 0:
            if fin(gs.lo, gt.lo, gL.hi):
                tally.below(float(gs.lo) + float(gt.lo), float(gL.hi), "gamma sum below lower conjugate")
            else:
                tally.notes.append("lower (i) formal: infinite index")
        if fin(Gs.hi, Gt.hi):
            if fin(GL.lo):
                tally.below(float(GL.lo), float(Gs.hi) + float(Gt.hi), "gamma_bar of lower conjugate below sum")
            else:
                tally.require(False, "gamma_bar of lower conjugate infinite for finite operand indices")
        exact_ops = gs.exact and gt.exact and fin(gs.lo, gt.lo) and gs.lo == Gs.lo and gt.lo == Gt.lo
        if exact_ops:
            total = float(gs.lo) + float(gt.lo)
            tally.below(_gap(gL, total), 0.0, "lower conjugate gamma misses the sum")
            tally.below(_gap(GL, total), 0.0, "lower conjugate gamma_bar misses the sum")
        if eval_weight(tau, 0.0) != 0.0:
            tally.notes.append("upper skipped: tau(0) != 0")
            return
        cert = upper_welldef_check(sigma, tau)
        if not cert.well_defined:
            tally.notes.append(f"upper skipped: {cert.status}")
            return
        upper = UpperConj(sigma, tau)
        gU, GU = gamma_lower(upper, num), gamma_upper(upper, num)
        if float(gs.hi) > 0 and fin(Gt.hi):
            if fin(gs.lo, gU.hi):
                tally.below(float(gs.lo), float(gU.hi) + float(Gt.hi), "gamma(sigma) above gamma(upper)+gamma_bar(tau)")
            else:
                tally.notes.append("upper (i) formal: infinite index")
        if float(gt.hi) > 0 and float(gt.lo) <= float(Gs.hi) and fin(Gs.hi):
            if fin(GU.lo):
                tally.below(float(GU.lo) + float(gt.lo), float(Gs.hi), "gamma_bar(upper)+gamma(tau) above gamma_bar(sigma)")
            else:
                tally.require(False, "gamma_bar of upper conjugate infinite")
        if exact_ops and float(gs.lo) > float(gt.lo):
            diff = float(gs.lo) - float(gt.lo)
            tally.below(_gap(gU, diff), 0.0, "upper conjugate gamma misses the difference")
            tally.below(_gap(GU, diff), 0.0, "upper conjugate gamma_bar misses the difference")

    return _run(cid, tol_idx, body)


def _gap(est, x: float) -> float:
    """Distance from ``x`` to the bracket ``[lo, hi]`` (0 inside)."""
    lo, hi = float(est.lo), float(est.hi)
    if math.isinf(lo):
        return INF
    return max(0.0, lo - x, x - hi)


# ---------------------------------------------------------------------------
# sequence conditions


def verify_preservation_lemmas(M: WeightSequence, N: WeightSequence, check_id: Optional[str] = None) -> CheckReport:
    """Conditions carried over to ``M.N`` and ``M/N``.

    (i) the liminf criterion and moderate growth pass to ``M.N`` (with
    constant at most the product); (ii) ``M`` with unbounded root ratios
    and ``N`` with moderate growth give ``M/N`` the liminf criterion;
    (iii) ``M`` with moderate growth, ``N`` with the criterion and
    log-convex ``M/N`` give ``M/N`` moderate growth.  When the criterion
    holds for both, the lower index of ``omega_{M.N}`` must be positive.
    """
    cid = check_id or f"preservation_lemmas[{_label(M)},{_label(N)}]"

    def body(tally: _Tally) -> None:
        P = pointwise_product(M, N)
        Q = pointwise_quotient(M, N)
        om1M, om1N = has_om1_criterion(M), has_om1_criterion(N)
        mgM, mgN = has_mg(M), has_mg(N)
        if om1M and om1N:
            tally.require(has_om1_criterion(P), "M.N lost the liminf criterion")
            est = gamma_lower(_assoc(P), IndexOptions(use_analytic=False))
            tally.require(float(est.lo) > 0.0, "gamma(omega_{M.N}) not positive")
        if mgM and mgN:
            mgP = has_mg(P)
            bound = float(mgM.constant) * float(mgN.constant) * (1.0 + 1e-9)
            tally.require(bool(mgP) and float(mgP.constant) <= bound, "M.N lost moderate growth or its constant grew")
        if not Q.is_log_convex:
            tally.notes.append("(ii),(iii) skipped: M/N not log-convex")
            return
        if has_om1_strong(M) and mgN:
            tally.require(has_om1_criterion(Q), "M/N lacks the liminf criterion")
        if mgM and om1N:
            tally.require(bool(has_mg(Q)), "M/N lacks moderate growth")

    return _run(cid, 0.0, body)


def verify_bigO_propositions(
    M: WeightSequence,
    N: WeightSequence,
    probe: ProbeSpec = ProbeSpec(),
    check_id: Optional[str] = None,
) -> CheckReport:
    """O/o relations between ``omega_M``, ``omega_N`` and the exact conjugates.

    Lower side: ``omega_{M.N} = O(omega_M), O(omega_N)`` always, and ``o``
    for an operand with moderate growth.  Upper side (``N`` strictly below
    ``M``, ``M/N`` log-convex): ``omega_M = O(omega_{M/N})``, and ``o`` when
    ``M`` has moderate growth.
    """
    cid = check_id or f"bigO_propositions[{_label(M)},{_label(N)}]"

    def body(tally: _Tally) -> None:
        wM, wN = _assoc(M), _assoc(N)
        L = lower_conj_assoc(M, N)
        for w, S, name in ((wM, M, "M"), (wN, N, "N")):
            rel = relate(w, L, probe).relation
            tally.require(rel in O_RELATIONS, f"omega_(M.N) not O(omega_{name}) ({rel})")
            if has_mg(S):
                tally.require(rel is Relation.TRIANGLE, f"omega_(M.N) not o(omega_{name}) ({rel})")
        if compare(N, M).relation is not Relation.TRIANGLE:
            tally.notes.append("quotient side skipped: N not strictly below M")
            return
        Q = pointwise_quotient(M, N)
        if not Q.is_log_convex:
            tally.notes.append("quotient side skipped: M/N not log-convex")
            return
        U = upper_conj_assoc(M, N).function
        rel = relate(U, wM, probe).relation
        tally.require(rel in O_RELATIONS, f"omega_M not O(upper conjugate) ({rel})")
        if has_mg(M):
            tally.require(rel is Relation.TRIANGLE, f"omega_M not o(upper conjugate) ({rel})")

    return _run(cid, 0.0, body)


# ---------------------------------------------------------------------------
# general weights


def verify_general_inverse_bounds(
    omega: WeightFunction,
    sigma: WeightFunction,
    tau: WeightFunction,
    t_grid=None,
    tol: float = TOL_GRID,
    conj: Optional[ConjOptions] = None,
    check_id: Optional[str] = None,
) -> CheckReport:
    """Sandwich bounds for composed conjugates.

    With ``sigma upper-star tau`` well defined and ``tau(0) = 0``:
    ``sigma(t) + inf_u (omega(u) - tau(u)) <= omega lower-star (sigma upper-star tau)(t)
    <= min(omega(t) + (sigma upper-star tau)(1), (sigma upper-star tau)(t) + omega(1))``.
    Always: ``sigma lower-star tau (t) - tau(1) <= (sigma lower-star tau) upper-star tau (t) <= sigma(t)``.
    When ``sigma(0)`` lies below ``inf_{s>0} sigma(s)`` and ``tau`` vanishes on
    ``[0, 1]``, the last conjugate jumps at the origin by at least that gap.
    """
    t = _grid(t_grid, 0.0, 50.0, 50)
    cid = check_id or f"general_inverse_bounds[{omega.to_expr()},{sigma.to_expr()},{tau.to_expr()}]"

    def body(tally: _Tally) -> None:
        if eval_weight(tau, 0.0) != 0.0:
            raise _Skip("tau(0) != 0")
        sv = _values(sigma, t)
        cert = upper_welldef_check(sigma, tau)
        if cert.well_defined:
            U = UpperConj(sigma, tau, conj)
            W = LowerConj(omega, U, conj)
            wv = _values(W, t)
            u = np.geomspace(1e-6, 1e8, 400)
            diff = _values(omega, u) - _values(tau, u)
            k = int(np.argmin(diff))
            if k < u.size - 20:
                C = float(diff[k])
                pos = t > 0
                tally.below(sv[pos] + C, wv[pos], "lower bound sigma + C")
            else:
                tally.notes.append("lower bound skipped: inf of omega - tau not attained on the probe")
            U1, w1 = float(eval_weight(U, 1.0)), float(eval_weight(omega, 1.0))
            bound = np.minimum(_values(omega, t) + U1, _values(U, t) + w1)
            tally.below(wv, bound, "upper bound min(...)")
        else:
            tally.notes.append(f"composition bounds skipped: {cert.status}")
        Lst = LowerConj(sigma, tau, conj)
        V = UpperConj(Lst, tau, conj)
        vv = _values(V, t)
        tally.below(_values(Lst, t) - float(eval_weight(tau, 1.0)), vv, "lower bound of the round trip")
        tally.below(vv, sv, "round trip above sigma")
        s0 = float(eval_weight(sigma, 0.0))
        s_lim = float(np.min(_values(sigma, np.geomspace(1e-12, 1e-6, 7))))
        tv = _values(tau, np.linspace(0.0, 1.0, 11))
        if s0 < s_lim and np.all(tv == 0.0):
            # sigma upper-star tau (0) = sigma(0) - tau(0), yet every t > 0 sees inf_{s>0} sigma(s)
            gap = s_lim - s0
            tally.notes.append(f"origin gap {gap:g} checked")
            for f, name in ((UpperConj(sigma, tau, conj), "sigma upper-star tau"), (V, "round trip")):
                jump = float(eval_weight(f, 1e-9)) - float(eval_weight(f, 0.0))
                tally.below(gap, jump + tol, f"{name}: jump at the origin below sigma's gap")

    return _run(cid, tol, body)


def verify_lower_basic(
    sigma: WeightFunction,
    tau: WeightFunction,
    tol: float = TOL_GRID,
    conj: Optional[ConjOptions] = None,
    check_id: Optional[str] = None,
) -> CheckReport:
    """Commutativity, ``W(tu) <= min(sigma(t)+tau(u), sigma(u)+tau(t))``,
    monotonicity, ``W(0) = sigma(0)+tau(0)`` and ``W = O(sigma), O(tau)``
    for ``W = sigma lower-star tau``."""
    cid = check_id or f"lower_basic[{sigma.to_expr()},{tau.to_expr()}]"

    def body(tally: _Tally) -> None:
        W = LowerConj(sigma, tau, conj)
        W2 = LowerConj(tau, sigma, conj)
        t = np.concatenate(([0.0], np.geomspace(1e-2, 1e2, 13)))
        wv = _values(W, t)
        tally.close(wv, _values(W2, t), "commutativity")
        tally.below(-np.diff(wv), 0.0, "monotonicity")
        tally.close(wv[0], float(eval_weight(sigma, 0.0)) + float(eval_weight(tau, 0.0)), "value at 0", TOL_EXACT)
        T, U = np.meshgrid(t, t)
        bound = np.minimum(_values(sigma, T) + _values(tau, U), _values(sigma, U) + _values(tau, T))
        tally.below(_values(W, T * U), bound, "sandwich")
        probe = ProbeSpec(count=60)
        for f, name in ((sigma, "sigma"), (tau, "tau")):
            rel = relate(f, W, probe).relation
            tally.require(rel in O_RELATIONS, f"lower conjugate not O({name}) ({rel})")

    return _run(cid, tol, body)


def verify_upper_basic(
    sigma: WeightFunction,
    tau: WeightFunction,
    tol: float = TOL_GRID,
    conj: Optional[ConjOptions] = None,
    check_id: Optional[str] = None,
) -> CheckReport:
    """For well-defined ``U = sigma upper-star tau`` with ``tau(0) = 0``:
    ``U(0) = sigma(0) - tau(0)``, ``U >= 0``, monotonicity,
    ``U(tu) >= max(sigma(t) - tau(1/u), sigma(u) - tau(1/t))`` and ``sigma = O(U)``."""
    cid = check_id or f"upper_basic[{sigma.to_expr()},{tau.to_expr()}]"

    def body(tally: _Tally) -> None:
        if eval_weight(tau, 0.0) != 0.0:
            raise _Skip("tau(0) != 0")
        cert = upper_welldef_check(sigma, tau)
        if not cert.well_defined:
            raise _Skip(f"upper conjugate {cert.status}")
        U = UpperConj(sigma, tau, conj)
        t = np.concatenate(([0.0], np.geomspace(1e-2, 1e2, 13)))
        uv = _values(U, t)
        tally.close(uv[0], float(eval_weight(sigma, 0.0)) - float(eval_weight(tau, 0.0)), "value at 0", TOL_EXACT)
        tally.below(-uv, 0.0, "non-negativity")
        tally.below(-np.diff(uv), 0.0, "monotonicity")
        tp = t[1:]
        T, V = np.meshgrid(tp, tp)
        bound = np.maximum(_values(sigma, T) - _values(tau, 1.0 / V), _values(sigma, V) - _values(tau, 1.0 / T))
        tally.below(bound, _values(U, T * V), "lower sandwich")
        rel = relate(U, sigma, ProbeSpec(count=60)).relation
        tally.require(rel in O_RELATIONS, f"sigma not O(upper conjugate) ({rel})")

    return _run(cid, tol, body)


def verify_logplus_fixed_points(count: int = 100, tol: float = 1e-6, conj: Optional[ConjOptions] = None) -> CheckReport:
    """``log_+`` is a fixed point of both conjugates on ``[0, e^5]``."""

    def body(tally: _Tally) -> None:
        lp = LogPlus()
        t = np.linspace(0.0, math.exp(5.0), count)
        ref = _values(lp, t)
        tally.close(_values(LowerConj(lp, lp, conj), t), ref, "lower conjugate")
        tally.close(_values(UpperConj(lp, lp, conj), t), ref, "upper conjugate")

    return _run("logplus_fixed_points", tol, body)


def verify_lower_relation_preservation(
    sigma: WeightFunction,
    sigma1: WeightFunction,
    tau: WeightFunction,
    tau1: WeightFunction,
    strict: bool,
    probe: ProbeSpec = ProbeSpec(count=60),
    check_id: Optional[str] = None,
) -> CheckReport:
    """Relations between operands carry over to the lower conjugates.

    ``strict=False``: ``sigma1 = O(sigma)`` and ``tau1 = O(tau)`` give the
    same for the conjugates; ``strict=True`` does the same for ``o``.
    """
    kind = "strict" if strict else "bounded"
    cid = check_id or f"lower_relation_preservation[{kind}]"
    want = (Relation.TRIANGLE,) if strict else O_RELATIONS

    def body(tally: _Tally) -> None:
        for a, b, name in ((sigma, sigma1, "sigma"), (tau, tau1, "tau")):
            rel = relate(a, b, probe).relation
            if rel not in want:
                raise _Skip(f"hypothesis on {name} not observed ({rel})")
        rel = relate(LowerConj(sigma, tau), LowerConj(sigma1, tau1), probe).relation
        tally.require(rel in want, f"conjugates not related ({rel})")

    return _run(cid, 0.0, body)


def verify_upper_divergence(check_id: str = "upper_divergence[mono(0.5),mono(1)]") -> CheckReport:
    """``t^2`` upper-star ``t`` is ``+inf`` for every ``t > 0`` but 0 at the origin,
    and the well-definedness probe flags it."""

    def body(tally: _Tally) -> None:
        s, tau = Monomial(0.5), Monomial(1.0)
        tally.require(float(upper_conj_eval(s, tau, 0.0)) == 0.0, "value at 0 is not 0")
        for t in (0.5, 1.0, 2.0):
            tally.require(is_divergent(upper_conj_eval(s, tau, t)), f"no divergence at t={t}")
        tally.require(upper_welldef_check(s, tau).status == "IllDefined", "probe did not flag ill-definedness")

    return _run(check_id, 0.0, body)


def verify_welldef_probe(
    sigma: WeightFunction,
    tau: WeightFunction,
    conj: Optional[ConjOptions] = None,
    check_id: Optional[str] = None,
) -> CheckReport:
    """The limsup probe agrees with the grid evaluator on finiteness."""
    cid = check_id or f"welldef_probe[{sigma.to_expr()},{tau.to_expr()}]"

    def body(tally: _Tally) -> None:
        cert = upper_welldef_check(sigma, tau)
        U = UpperConj(sigma, tau, conj)
        if cert.status == "WellDefined":
            v = _values(U, np.array([0.1, 1.0, 10.0]))
            tally.require(bool(np.all(np.isfinite(v))), "grid diverges although the probe says finite")
        elif cert.status == "IllDefined":
            t0 = float(cert.t0)
            # points well inside the region the grid's divergence window resolves
            ts = np.array([2.0, 10.0]) * max(t0, 0.1)
            tally.require(bool(np.all(np.isposinf(_values(U, ts)))), "grid finite although the probe says +inf")
        else:
            raise _Skip(f"probe inconclusive ({cert.status})")

    return _run(cid, 0.0, body)


def _brute_min(fun: Callable[[np.ndarray], np.ndarray], lo: float, hi: float, sign: float) -> float:
    """Optimum of ``sign * fun`` over ``log v`` in ``[lo, hi]`` by a dense scan and bounded Brent."""
    x = np.linspace(lo, hi, 20001)
    y = sign * fun(x)
    k = int(np.argmin(y))
    a, b = x[max(k - 1, 0)], x[min(k + 1, x.size - 1)]
    if b <= a:
        return float(sign * y[k])
    res = minimize_scalar(lambda z: float(sign * fun(np.array([z]))[0]), bounds=(a, b), method="bounded",
                          options={"xatol": 1e-12})
    return float(sign * min(res.fun, y[k]))


def verify_envelope_criterion(
    sigma: WeightFunction,
    alpha: float,
    tol: float = TOL_GRID,
    conj: Optional[ConjOptions] = None,
    check_id: Optional[str] = None,
) -> CheckReport:
    """Envelopes against ``t^(1/alpha)``.

    The probe verdict on ``sigma upper-star t^(1/alpha)`` must match
    ``sigma = o(t^(1/alpha))``.  The lower envelope is compared with
    ``inf_v sigma(v^-alpha) + t^(1/alpha) v`` and, when well defined, the
    upper envelope with ``sup_y sigma(y^alpha) - y t^(-1/alpha)``, both
    optimised directly.
    """
    cid = check_id or f"envelope_criterion[{sigma.to_expr()},{alpha:g}]"
    a = float(alpha)

    def body(tally: _Tally) -> None:
        cert = upper_welldef_check(sigma, Monomial(a))
        rel = relate(Monomial(a), sigma).relation
        if cert.status in ("WellDefined", "IllDefined"):
            tally.require(cert.well_defined == (rel is Relation.TRIANGLE),
                          f"probe {cert.status} but relation {rel}")
        else:
            tally.notes.append(f"criterion skipped: probe {cert.status}")
        ts = np.array([0.5, 1.0, 3.0, 10.0, 40.0])
        got, want = [], []
        for t in ts:
            c = t ** (1.0 / a)

            def lower_obj(lv, c=c):
                return np.asarray(sigma.eval_log(-a * lv), dtype=float) + c * np.exp(lv)

            got.append(float(lower_legendre_envelope(sigma, a, float(t), conj)))
            want.append(_brute_min(lower_obj, -40.0, 40.0, 1.0))
        tally.close(got, want, "lower envelope")
        if not cert.well_defined:
            return
        got, want = [], []
        for t in ts:
            c = t ** (-1.0 / a)

            def upper_obj(ly, c=c):
                return np.asarray(sigma.eval_log(a * ly), dtype=float) - c * np.exp(ly)

            got.append(float(upper_legendre_envelope(sigma, a, float(t), conj)))
            want.append(max(_brute_min(upper_obj, -40.0, 40.0, -1.0), float(eval_weight(sigma, 0.0))))
        tally.close(got, want, "upper envelope")

    return _run(cid, tol, body)


def _sup_limsup(sigma: WeightFunction, tau: WeightFunction) -> float:
    """``sup_t limsup_u sigma(tu)/tau(u)`` over a finite probe in ``t`` and ``u``."""
    u = np.geomspace(1e4, 1e10, 120)
    lu = np.log(u)
    tv = np.asarray(tau.eval_log(lu), dtype=float)
    best = 0.0
    for t in np.geomspace(1e-2, 1e2, 9):
        sv = np.asarray(sigma.eval_log(lu + math.log(t)), dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            r = np.where(tv > 0, sv / tv, INF)
        hi, _ = tail_limits_clipped(u, r)
        best = max(best, hi)
    return best


def tail_limits_clipped(u: np.ndarray, r: np.ndarray) -> tuple[float, float]:
    from ._probe import tail_limits

    hi, lo = tail_limits(u, r)
    return max(hi, 0.0), max(lo, 0.0)


def verify_subordination_chain(
    sigma: WeightFunction,
    tau: WeightFunction,
    eps: float = 0.05,
    check_id: Optional[str] = None,
) -> CheckReport:
    """Implications between ``sup_t limsup sigma(tu)/tau(u) <= 1``, ``sigma = o(tau)``
    and ``sup_t lim sigma(tu)/tau(u) = 0``.

    The first implies the second when either weight passes the ``(omega_6)``
    probe; the second implies the third when either passes ``(omega_1)``.
    Each implication is asserted only when its premise and certificate hold.
    """
    cid = check_id or f"subordination_chain[{sigma.to_expr()},{tau.to_expr()}]"

    def body(tally: _Tally) -> None:
        s = _sup_limsup(sigma, tau)
        c1 = s <= 1.0 + eps
        c2 = relate(tau, sigma).relation is Relation.TRIANGLE
        c3 = s <= eps
        om6 = bool(check_om6(sigma)) or bool(check_om6(tau))
        om1 = bool(check_om1(sigma)) or bool(check_om1(tau))
        if c1 and om6:
            tally.require(c2, "(i) holds under omega_6 but sigma is not o(tau)")
        else:
            tally.notes.append("(i)=>(ii) not applicable")
        if c2 and om1:
            tally.require(c3, f"(ii) holds under omega_1 but the limits reach {s:.3g}")
        else:
            tally.notes.append("(ii)=>(iii) not applicable")

    return _run(cid, 0.0, body)


def verify_upper_equivalence_transfer(
    sigma: WeightFunction,
    sigma1: WeightFunction,
    tau: WeightFunction,
    tau1: WeightFunction,
    probe: ProbeSpec = ProbeSpec(count=60),
    check_id: Optional[str] = None,
) -> CheckReport:
    """Equivalent operands give equivalent upper conjugates.

    With ``sigma upper-star tau`` well defined, ``gamma_bar(tau)`` finite and
    ``gamma_bar(tau) < gamma(sigma)`` (which makes the lower index of the
    conjugates positive): ``sigma1 ~ sigma`` gives
    ``sigma1 upper-star tau ~ sigma upper-star tau`` and ``tau1 ~ tau`` gives
    ``sigma upper-star tau1 ~ sigma upper-star tau``.
    """
    cid = check_id or f"upper_equivalence_transfer[{sigma.to_expr()},{tau.to_expr()}]"

    def body(tally: _Tally) -> None:
        if eval_weight(tau, 0.0) != 0.0 or eval_weight(tau1, 0.0) != 0.0:
            raise _Skip("divisor does not vanish at 0")
        if not upper_welldef_check(sigma, tau).well_defined:
            raise _Skip("sigma upper-star tau not shown well defined")
        Gt = gamma_upper(tau)
        gs = gamma_lower(sigma)
        if not (math.isfinite(float(Gt.hi)) and float(Gt.hi) < float(gs.lo)):
            raise _Skip("index condition gamma_bar(tau) < gamma(sigma) not established")
        U = UpperConj(sigma, tau)
        for a, b, Ub, name in ((sigma, sigma1, UpperConj(sigma1, tau), "sigma"), (tau, tau1, UpperConj(sigma, tau1), "tau")):
            if relate(a, b, probe).relation is not Relation.EQUIVALENT:
                tally.notes.append(f"{name} side skipped: operands not equivalent")
                continue
            vals = _values(Ub, probe.points())
            tally.require(bool(np.all(np.isfinite(vals))), f"{name} side: conjugate not finite")
            rel = relate(U, Ub, probe).relation
            tally.require(rel is Relation.EQUIVALENT, f"{name} side: conjugates not equivalent ({rel})")

    return _run(cid, 0.0, body)


def verify_sequence_welldef(
    M: WeightSequence,
    N: WeightSequence,
    conj: Optional[ConjOptions] = None,
    check_id: Optional[str] = None,
) -> CheckReport:
    """The exact sequence criterion for finiteness of ``omega_M upper-star omega_N``
    against the grid evaluator: finite where the criterion says so, ``+inf``
    past ``t0``."""
    cid = check_id or f"sequence_welldef[{_label(M)},{_label(N)}]"

    def body(tally: _Tally) -> None:
        cert = upper_welldef_check(_assoc(M), _assoc(N))
        U = _upper_grid(M, N, conj)
        if cert.status == "WellDefined":
            v = _values(U, np.array([0.5, 2.0, 10.0]))
            tally.require(bool(np.all(np.isfinite(v))), "grid diverges although the criterion says finite")
        elif cert.status == "WellDefinedUpTo":
            t0 = float(cert.t0)
            tally.require(bool(np.all(np.isfinite(_values(U, np.array([0.25, 0.5]) * t0)))), "grid infinite below t0")
            tally.require(bool(np.all(np.isposinf(_values(U, np.array([2.0, 4.0]) * t0)))), "grid finite beyond t0")
        elif cert.status == "IllDefined":
            tally.require(bool(np.all(np.isposinf(_values(U, np.array([0.5, 2.0]))))), "grid finite for ill-defined pair")
        else:
            raise _Skip(f"criterion inconclusive ({cert.status})")
        tally.notes.append(cert.status)

    return _run(cid, 0.0, body)


# ---------------------------------------------------------------------------
# non-standard operands


def finite_iota_sequence(limit: float, P: int = 512) -> WeightSequence:
    """Quotients ``limit - 1/p``: log-convex with ``M_iota = limit``."""
    p = np.arange(1, P + 1, dtype=float)
    return make_from_quotients(0.0, np.log(limit - 1.0 / p))


def verify_nonstandard_suite(conj: Optional[ConjOptions] = None) -> CheckReport:
    """Both conjugates over operands with finite, infinite and zero ``iota``.

    Lower conjugate: finite exactly on ``[0, M_iota N_iota)``, commutative,
    ``+inf`` beyond, equal to ``omega_{M.N}``; a zero-``iota`` operand gives
    0 at the origin and ``+inf`` elsewhere.  Upper conjugate: the
    finite-``iota`` cases and the three degenerate cases, with the tabulated
    values reproduced exactly.
    """

    def body(tally: _Tally) -> None:
        F2, F3 = finite_iota_sequence(2.0), finite_iota_sequence(3.0)
        G = make_gevrey(1.0)
        Z = make_zero()
        classes = {"finite": F2, "inf": G, "zero": Z}
        partner = {"finite": F3, "inf": make_gevrey(0.5), "zero": Z}
        probe = np.array([0.0, 0.5, 1.0, 3.0, 5.5, 6.5, 10.0, 100.0])
        for na, M in classes.items():
            for nb in classes:
                N = partner[nb]
                im, in_ = _iotas(M, N)
                hi = im * in_ if im > 0 and in_ > 0 else 0.0
                W = LowerConj(_assoc(M), _assoc(N), conj)
                W2 = LowerConj(_assoc(N), _assoc(M), conj)
                wv, wv2 = _values(W, probe), _values(W2, probe)
                tag = f"lower[{na},{nb}]"
                if hi == 0.0:
                    expect = np.where(probe == 0.0, 0.0, INF)
                    tally.close(wv, expect, f"{tag} degenerate grid", 0.0)
                    tally.close(_values(lower_conj_assoc(M, N), probe), expect, f"{tag} degenerate exact", 0.0)
                    continue
                inside = probe < hi
                tally.require(bool(np.all(np.isfinite(wv[inside]))), f"{tag} infinite inside the domain")
                tally.require(bool(np.all(np.isposinf(wv[~inside]))), f"{tag} finite beyond the domain")
                tally.close(wv, wv2, f"{tag} commutativity")
                E = lower_conj_assoc(M, N)
                # explicit quotients fix omega_{M.N} exactly only below mu_P
                known = inside & (E.seq.is_closed_form | (probe < np.exp(E.seq.log_mu[-1])))
                tally.close(wv[known], _values(E, probe[known]), f"{tag} vs omega_(M.N)")
        t = np.array([0.0, 0.5, 1.0, 2.0, 2.5, 4.0, 10.0])
        # (a) M_iota = inf > N_iota: finite everywhere, equal to omega_{M/N}
        U = _upper_grid(G, F2, conj)
        tally.close(_values(U, t), _values(upper_conj_assoc(G, F2).function, t), "upper[inf,finite]")
        # (b) M_iota finite < N_iota = inf: 0 at the origin, +inf elsewhere
        expect = np.where(t == 0.0, 0.0, INF)
        tally.close(_values(_upper_grid(F2, G, conj), t), expect, "upper[finite,inf] grid", 0.0)
        tally.close(_values(upper_conj_assoc(F2, G).function, t), expect, "upper[finite,inf] exact", 0.0)
        # (c) both finite: equal to omega_{M/N} on [0, M_iota/N_iota), +inf beyond
        F6 = pointwise_product(F2, F3)
        U = _upper_grid(F6, F2, conj)
        uv = _values(U, t)
        inside = t < 3.0
        tally.close(uv[inside], _values(upper_conj_assoc(F6, F2).function, t[inside]), "upper[finite,finite]")
        tally.require(bool(np.all(np.isposinf(uv[~inside]))), "upper[finite,finite] finite beyond M_iota/N_iota")
        # degenerate operands
        for M, N, expect, tag in (
            (Z, G, np.where(t == 0.0, 0.0, INF), "upper[zero,inf]"),
            (Z, F2, np.where(t == 0.0, 0.0, INF), "upper[zero,finite]"),
            (G, Z, np.zeros(t.size), "upper[inf,zero]"),
            (F2, Z, np.zeros(t.size), "upper[finite,zero]"),
            (Z, Z, np.zeros(t.size), "upper[zero,zero]"),
        ):
            tally.close(_values(_upper_grid(M, N, conj), t), expect, f"{tag} grid", 0.0)
            tally.close(_values(upper_conj_assoc(M, N).function, t), expect, f"{tag} exact", 0.0)

    return _run("nonstandard_suite", TOL_GRID, body)


# ---------------------------------------------------------------------------
# suite


@dataclass(frozen=True)
class SuiteConfig:
    """Tolerances and grid settings for :func:`run_suite`."""

    tol_grid: float = TOL_GRID
    tol_index: float = TOL_INDEX
    conj: Optional[ConjOptions] = None


def suite(config: SuiteConfig = SuiteConfig()) -> list[tuple[str, Callable[[], CheckReport]]]:
    """The standard checks as ``(check_id, thunk)`` pairs in run order."""
    c, tg, ti = config.conj, config.tol_grid, config.tol_index
    G = make_gevrey
    lp = LogPlus()
    items: list[tuple[str, Callable[[], CheckReport]]] = []

    def add(cid: str, fn: Callable[..., CheckReport], *args, **kw) -> None:
        items.append((cid, lambda: fn(*args, check_id=cid, **kw)))

    for a, b in ((1.0, 1.0), (1.2, 0.7), (2.0, 0.5)):
        add(f"product_identity[G^{a:g},G^{b:g}]", verify_product_identity, G(a), G(b), tol=tg, conj=c)
    add("product_identity[finite2,finite3]", verify_product_identity,
        finite_iota_sequence(2.0), finite_iota_sequence(3.0), np.linspace(0.0, 10.0, 41), tol=tg, conj=c)
    for a, b in ((2.0, 1.0), (3.0, 1.5), (1.0, 1.0)):
        add(f"quotient_identity[G^{a:g},G^{b:g}]", verify_quotient_identity, G(a), G(b), tol=tg, conj=c)
    M_nlc, N_nlc = non_lc_quotient_pair()
    add("quotient_identity[non_lc_quotient]", verify_quotient_identity, M_nlc, N_nlc, tol=tg, conj=c)
    for a, b in ((1.0, 0.5), (2.0, 1.0)):
        add(f"inverse_roundtrips[G^{a:g},G^{b:g}]", verify_inverse_roundtrips, G(a), G(b), tol=tg, conj=c)
    add("inverse_roundtrips[G^1,finite2]", verify_inverse_roundtrips, G(1.0), finite_iota_sequence(2.0),
        tol=tg, conj=c)
    add("lower_basic[mono(1),mono(2)]", verify_lower_basic, Monomial(1.0), Monomial(2.0), tol=tg, conj=c)
    add("lower_basic[logplus,mono(1)]", verify_lower_basic, lp, Monomial(1.0), tol=tg, conj=c)
    items.append(("logplus_fixed_points", lambda: verify_logplus_fixed_points(conj=c)))
    add("lower_relation_preservation[bounded]", verify_lower_relation_preservation,
        Monomial(2.0), Scale(2.0, Monomial(2.0)), Monomial(1.0), Shift(1.0, Monomial(1.0)), False)
    add("lower_relation_preservation[strict]", verify_lower_relation_preservation,
        Monomial(2.0), Monomial(3.0), Monomial(1.0), Monomial(2.0), True)
    for s, t in ((Monomial(1.5), Monomial(0.5)), (Monomial(3.0), Monomial(1.0)), (Monomial(2.0), Monomial(0.5))):
        add(f"index_theorems[{s.to_expr()},{t.to_expr()}]", verify_index_theorems, s, t, ti)
    add("index_theorems[assoc(G^2),assoc(G^1)]", verify_index_theorems, _assoc(G(2.0)), _assoc(G(1.0)), ti)
    add("index_theorems[logplus,logplus]", verify_index_theorems, lp, lp, ti)
    add("upper_basic[mono(2),mono(1)]", verify_upper_basic, Monomial(2.0), Monomial(1.0), tol=tg, conj=c)
    add("upper_basic[logplus,logplus]", verify_upper_basic, lp, lp, tol=tg, conj=c)
    items.append(("upper_divergence[mono(0.5),mono(1)]", verify_upper_divergence))
    add("welldef_probe[mono(2),mono(1)]", verify_welldef_probe, Monomial(2.0), Monomial(1.0), conj=c)
    add("welldef_probe[mono(0.5),mono(1)]", verify_welldef_probe, Monomial(0.5), Monomial(1.0), conj=c)
    add("envelope_criterion[assoc(G^2),1]", verify_envelope_criterion, _assoc(G(2.0)), 1.0, tol=tg, conj=c)
    add("envelope_criterion[mono(0.5),1]", verify_envelope_criterion, Monomial(0.5), 1.0, tol=tg, conj=c)
    add("subordination_chain[mono(2),mono(1)]", verify_subordination_chain, Monomial(2.0), Monomial(1.0))
    add("subordination_chain[assoc(G^2),assoc(G^1)]", verify_subordination_chain, _assoc(G(2.0)), _assoc(G(1.0)))
    add("upper_equivalence_transfer[mono(2),mono(1)]", verify_upper_equivalence_transfer,
        Monomial(2.0), Scale(2.0, Monomial(2.0)), Monomial(1.0), Scale(2.0, Monomial(1.0)))
    for a, b in ((2.0, 1.0), (1.0, 1.0), (1.0, 2.0)):
        add(f"sequence_welldef[G^{a:g},G^{b:g}]", verify_sequence_welldef, G(a), G(b), conj=c)
    for a, b in ((1.0, 2.0), (3.0, 1.0), (2.0, 1.0)):
        add(f"preservation_lemmas[G^{a:g},G^{b:g}]", verify_preservation_lemmas, G(a), G(b))
    for a, b in ((1.0, 1.0), (2.0, 1.0), (1.0, 2.0)):
        add(f"bigO_propositions[G^{a:g},G^{b:g}]", verify_bigO_propositions, G(a), G(b))
    add("general_inverse_bounds[assoc(G^1),assoc(G^2),assoc(G^1)]", verify_general_inverse_bounds,
        _assoc(G(1.0)), _assoc(G(2.0)), _assoc(G(1.0)), np.linspace(0.0, 50.0, 26), tol=tg, conj=c)
    add("general_inverse_bounds[logplus,logplus,logplus]", verify_general_inverse_bounds, lp, lp, lp, tol=tg, conj=c)
    add("general_inverse_bounds[origin_gap]", verify_general_inverse_bounds,
        lp, ZeroValue(0.0, Shift(1.0, lp)), lp, np.linspace(0.0, 20.0, 21), tol=tg, conj=c)
    items.append(("nonstandard_suite", lambda: verify_nonstandard_suite(conj=c)))
    return items


def non_lc_quotient_pair(P: int = 512) -> tuple[WeightSequence, WeightSequence]:
    """``M = G^2`` and ``N`` with quotients ``2^floor(log2 p)``: ``N`` lies strictly
    below ``M`` but ``M/N`` drops at every power of two."""
    p = np.arange(1, P + 1, dtype=float)
    N = make_from_quotients(0.0, np.floor(np.log2(p)) * math.log(2.0))
    M = make_from_quotients(0.0, 2.0 * np.log(p))
    return M, N


def run_suite(
    filter: Optional[str] = None,
    config: SuiteConfig = SuiteConfig(),
    workers: Optional[int] = None,
) -> list[CheckReport]:
    """Run the checks whose id contains ``filter`` (all when ``None``), in suite order.

    ``workers`` defaults to :func:`sweep_threads`; results keep suite order
    whatever the worker count.
    """
    chosen = [(cid, fn) for cid, fn in suite(config) if not filter or filter in cid]
    n = workers or sweep_threads()
    if n <= 1:
        return [fn() for _, fn in chosen]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(lambda item: item[1](), chosen))


CSV_COLUMNS = ("check_id", "status", "max_abs_err", "grid_size", "runtime_ms")


def write_csv(reports: Iterable[CheckReport], out: Optional[TextIO] = None) -> str:
    """Serialise reports with columns ``check_id,status,max_abs_err,grid_size,runtime_ms``.

    Returns the CSV text; also writes it to ``out`` when given.
    """
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow((r.check_id, r.status_text, repr(float(r.max_abs_err)), r.grid_size, r.runtime_ms))
    text = buf.getvalue()
    if out is not None:
        out.write(text)
    return text
