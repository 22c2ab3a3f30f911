"""Weight functions as immutable expression trees.

Every node evaluates on arrays of ``log t`` (``-inf`` encodes ``t = 0``),
which keeps very large and very small arguments representable and makes
the variable substitutions ``t -> t^(1/alpha)`` and ``t -> 1/t`` exact.

The builtins are ``t^(1/alpha)`` (:class:`Monomial`), ``log_+``
(:class:`LogPlus`) and associated weights (:class:`Associated`).  The
combinators cover the substitutions, positive scaling and shifting, an
override of the value at the origin, and the two conjugates, whose
evaluation lives in :mod:`weightconj.conjugate`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Optional, Union

import numpy as np

from ._probe import tail_limits, tail_start
from .assoc import AssociatedWeight, associated
from .errors import ExpressionError
from .extreal import INF, ExtReal
from .sequences import (
    DEFAULT_DEPTH,
    Relation,
    RelationVerdict,
    WeightSequence,
    classify_log_ratio,
    load_sequence,
)

__all__ = [
    "WeightFunction",
    "Monomial",
    "LogPlus",
    "Associated",
    "PowerSub",
    "InvertVar",
    "LowerConj",
    "UpperConj",
    "Scale",
    "Shift",
    "ZeroValue",
    "Constant",
    "ProbeSpec",
    "PropertyCertificate",
    "eval_weight",
    "with_conj_options",
    "relate",
    "check_om1",
    "check_om6",
    "parse_expr",
    "to_log",
]


def to_log(t) -> np.ndarray:
    """``log t`` with ``log 0 = -inf``; rejects negative input."""
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0) or np.any(np.isnan(arr)):
        raise ValueError("weight functions are evaluated at t >= 0")
    with np.errstate(divide="ignore"):
        return np.log(arr)


class WeightFunction:
    """Base class: a function on ``[0, inf)`` evaluated through ``log t``."""

    is_weight: bool = True

    def eval_log(self, lt: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @property
    def domain_hi(self) -> float:
        """Right end of the interval on which the function is finite."""
        return INF

    def to_expr(self) -> str:
        raise NotImplementedError

    def __call__(self, t):
        out = self.eval_log(to_log(t))
        return ExtReal(float(out)) if np.ndim(out) == 0 else out

    def __str__(self) -> str:
        return self.to_expr()


def _as_array(lt) -> np.ndarray:
    return np.asarray(lt, dtype=float)


@dataclass(frozen=True, eq=False)
class Monomial(WeightFunction):
    """``t -> t^(1/alpha)``."""

    alpha: float

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            raise ValueError("Monomial exponent alpha must be positive")

    def eval_log(self, lt):
        with np.errstate(over="ignore"):
            return np.exp(_as_array(lt) / self.alpha)

    def to_expr(self) -> str:
        return f"mono({self.alpha!r})"


@dataclass(frozen=True, eq=False)
class LogPlus(WeightFunction):
    """``max(0, log t)`` with value 0 at the origin."""

    def eval_log(self, lt):
        return np.maximum(_as_array(lt), 0.0)

    def to_expr(self) -> str:
        return "logplus"


@dataclass(frozen=True, eq=False)
class Associated(WeightFunction):
    """The associated weight ``omega_M`` of a weight sequence."""

    weight: AssociatedWeight
    source: str = ""

    @classmethod
    def of(cls, M: WeightSequence, source: str = "") -> "Associated":
        return cls(associated(M), source)

    @property
    def seq(self) -> WeightSequence:
        return self.weight.seq

    @property
    def is_weight(self) -> bool:
        return math.isinf(self.weight.domain_hi)

    def eval_log(self, lt):
        return self.weight.eval_log(_as_array(lt))

    @property
    def domain_hi(self) -> float:
        return self.weight.domain_hi

    def to_expr(self) -> str:
        return f"assoc({self.source or repr(self.weight.seq)})"


@dataclass(frozen=True, eq=False)
class PowerSub(WeightFunction):
    """``omega^(1/alpha)(t) = omega(t^(1/alpha))``."""

    inner: WeightFunction
    alpha: float

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            raise ValueError("PowerSub exponent alpha must be positive")

    @property
    def is_weight(self) -> bool:
        return self.inner.is_weight

    def eval_log(self, lt):
        return self.inner.eval_log(_as_array(lt) / self.alpha)

    @property
    def domain_hi(self) -> float:
        hi = self.inner.domain_hi
        return hi ** self.alpha if math.isfinite(hi) else INF

    def to_expr(self) -> str:
        return f"powsub({self.inner.to_expr()},{self.alpha!r})"


@dataclass(frozen=True, eq=False)
class InvertVar(WeightFunction):
    """``omega^iota(t) = omega(1/t)`` for ``t > 0``; non-increasing, so not a weight."""

    inner: WeightFunction
    is_weight = False

    def eval_log(self, lt):
        lt = _as_array(lt)
        if np.any(np.isneginf(lt)):
            raise ValueError("omega(1/t) is not defined at t = 0")
        return self.inner.eval_log(-lt)

    def to_expr(self) -> str:
        return f"inv({self.inner.to_expr()})"


@dataclass(frozen=True, eq=False)
class Scale(WeightFunction):
    """``c * omega`` for ``c > 0``."""

    c: float
    inner: WeightFunction

    def __post_init__(self) -> None:
        if not self.c > 0:
            raise ValueError("scale factor must be positive")

    @property
    def is_weight(self) -> bool:
        return self.inner.is_weight

    def eval_log(self, lt):
        return self.c * self.inner.eval_log(lt)

    @property
    def domain_hi(self) -> float:
        return self.inner.domain_hi

    def to_expr(self) -> str:
        return f"scale({self.c!r},{self.inner.to_expr()})"


@dataclass(frozen=True, eq=False)
class Shift(WeightFunction):
    """``c + omega`` for ``c >= 0`` (at every ``t``, including 0)."""

    c: float
    inner: WeightFunction

    def __post_init__(self) -> None:
        if not self.c >= 0:
            raise ValueError("shift must be non-negative")

    @property
    def is_weight(self) -> bool:
        return self.inner.is_weight

    def eval_log(self, lt):
        return self.c + self.inner.eval_log(lt)

    @property
    def domain_hi(self) -> float:
        return self.inner.domain_hi

    def to_expr(self) -> str:
        return f"shift({self.c!r},{self.inner.to_expr()})"


@dataclass(frozen=True, eq=False)
class ZeroValue(WeightFunction):
    """``omega`` with its value at ``t = 0`` replaced by ``c``.

    This builds weights that are discontinuous at the origin, where the
    conjugates at ``t = 0`` differ from their limits as ``t -> 0+``.
    """

    c: float
    inner: WeightFunction

    def __post_init__(self) -> None:
        if not self.c >= 0:
            raise ValueError("value at the origin must be non-negative")

    @property
    def is_weight(self) -> bool:
        return self.inner.is_weight

    def eval_log(self, lt):
        lt = _as_array(lt)
        out = np.asarray(self.inner.eval_log(lt), dtype=float)
        return np.where(np.isneginf(lt), self.c, out)

    @property
    def domain_hi(self) -> float:
        return self.inner.domain_hi

    def to_expr(self) -> str:
        return f"zeroval({self.c!r},{self.inner.to_expr()})"


@dataclass(frozen=True, eq=False)
class Constant(WeightFunction):
    """The constant function ``c``; bounded, hence not a weight function."""

    c: float = 0.0
    is_weight = False

    def eval_log(self, lt):
        return np.full(np.shape(lt), float(self.c))

    def to_expr(self) -> str:
        return f"const({self.c!r})"


class _Memo:
    """Cache of conjugate values keyed by the exact ``log t`` float."""

    def __init__(self) -> None:
        self.values: dict[float, float] = {}
        self.divergent: set[float] = set()

    def lookup(self, lt: np.ndarray, compute: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]) -> np.ndarray:
        flat = lt.ravel()
        uniq, inv = np.unique(flat, return_inverse=True)
        missing = [u for u in uniq.tolist() if u not in self.values]
        if missing:
            vals, div = compute(np.array(missing))
            for u, v, d in zip(missing, vals.tolist(), div.tolist()):
                self.values[u] = v
                if d:
                    self.divergent.add(u)
        res = np.array([self.values[u] for u in uniq.tolist()])
        return res[inv].reshape(lt.shape)


@dataclass(frozen=True, eq=False)
class LowerConj(WeightFunction):
    """``sigma lower-star tau (t) = inf_{s>0} (sigma(s) + tau(t/s))``."""

    sigma: WeightFunction
    tau: WeightFunction
    opts: Optional[object] = None
    _memo: _Memo = field(default_factory=_Memo, init=False, repr=False)

    @property
    def is_weight(self) -> bool:
        return self.sigma.is_weight and self.tau.is_weight and math.isinf(self.domain_hi)

    def eval_log(self, lt):
        from .conjugate import lower_conj_log

        lt = _as_array(lt)

        def compute(x):
            v = lower_conj_log(self.sigma, self.tau, x, self.opts)
            return v, np.zeros(v.shape, dtype=bool)

        return self._memo.lookup(lt, compute)

    @property
    def domain_hi(self) -> float:
        a, b = self.sigma.domain_hi, self.tau.domain_hi
        if a == 0.0 or b == 0.0:
            return 0.0
        return a * b

    def to_expr(self) -> str:
        return f"lconj({self.sigma.to_expr()},{self.tau.to_expr()})"


@dataclass(frozen=True, eq=False)
class UpperConj(WeightFunction):
    """``sigma upper-star tau (t) = sup_{s>=0} (sigma(s) - tau(s/t))``."""

    sigma: WeightFunction
    tau: WeightFunction
    opts: Optional[object] = None
    allow_nonnormalized: bool = False
    _memo: _Memo = field(default_factory=_Memo, init=False, repr=False)

    @property
    def is_weight(self) -> bool:
        return self.sigma.is_weight and self.tau.is_weight and math.isinf(self.domain_hi)

    def eval_log(self, lt):
        from .conjugate import upper_conj_log

        lt = _as_array(lt)
        return self._memo.lookup(
            lt,
            lambda x: upper_conj_log(self.sigma, self.tau, x, self.opts, self.allow_nonnormalized),
        )

    def divergent_at(self, t: float) -> bool:
        lt = float(to_log(t))
        self.eval_log(np.array([lt]))
        return lt in self._memo.divergent

    @property
    def domain_hi(self) -> float:
        a, b = self.sigma.domain_hi, self.tau.domain_hi
        if b == 0.0:
            return INF
        if math.isinf(b):
            return INF if math.isinf(a) else 0.0
        return a / b

    def to_expr(self) -> str:
        return f"uconj({self.sigma.to_expr()},{self.tau.to_expr()})"


def with_conj_options(f: WeightFunction, opts) -> WeightFunction:
    """Copy of ``f`` whose conjugate nodes all use ``opts`` (with fresh caches)."""
    if isinstance(f, (LowerConj, UpperConj)):
        return replace(f, sigma=with_conj_options(f.sigma, opts), tau=with_conj_options(f.tau, opts), opts=opts)
    if isinstance(f, (PowerSub, InvertVar, Scale, Shift, ZeroValue)):
        return replace(f, inner=with_conj_options(f.inner, opts))
    return f


def eval_weight(f: WeightFunction, t: float) -> ExtReal:
    """Evaluate ``f`` at a single ``t >= 0``."""
    if t < 0:
        raise ValueError("weight functions are evaluated at t >= 0")
    return ExtReal(float(np.asarray(f.eval_log(np.array([float(to_log(t))])))[0]))


# ---------------------------------------------------------------------------
# relations and growth conditions


@dataclass(frozen=True)
class ProbeSpec:
    """Geometric probe grid ``[t_min, t_max]`` and decision thresholds."""

    t_min: float = 1.0
    t_max: float = 1e8
    count: int = 200
    eps_rel: float = 1e-6
    slope_eps: float = 0.05

    def points(self) -> np.ndarray:
        return np.geomspace(self.t_min, self.t_max, self.count)


def _log_ratio(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    """``log(num/den)`` with ``0/0 = 0``, ``c/0 = inf`` and ``inf/inf = 1``."""
    num = np.asarray(num, dtype=float)
    den = np.asarray(den, dtype=float)
    out = np.empty(num.shape)
    both_inf = np.isinf(num) & np.isinf(den)
    zero_den = (den == 0.0) & ~both_inf
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        plain = np.log(num) - np.log(den)
    out[:] = plain
    out[both_inf] = 0.0
    out[zero_den] = np.where(num[zero_den] == 0.0, -INF, INF)
    out[np.isinf(den) & ~np.isinf(num)] = -INF
    return out


def relate(f: WeightFunction, g: WeightFunction, probe: ProbeSpec = ProbeSpec()) -> RelationVerdict:
    """Compare two weight functions through the ratio ``g(t)/f(t)``.

    ``Preceq`` means ``g = O(f)``, ``Triangle`` means ``g = o(f)``,
    ``Equivalent`` means both ratios stay bounded and ``Unbounded`` that
    ``g/f`` grows without bound.  The verdict is finite evidence from
    ``probe``; it is never flagged exact.
    """
    _require_weight(f)
    _require_weight(g)
    t = probe.points()
    lt = np.log(t)
    fv = np.asarray(f.eval_log(lt), dtype=float)
    gv = np.asarray(g.eval_log(lt), dtype=float)
    lr = _log_ratio(gv, fv)
    rel, _, limsup = classify_log_ratio(t, lr, probe.slope_eps, probe.eps_rel, oscillation=False)
    pos = fv > 0
    sup = float(np.exp(np.max(lr[pos]))) if np.any(pos) else INF
    if rel is Relation.UNBOUNDED:
        sup = INF
    limsup = min(limsup, sup) if rel is not Relation.UNBOUNDED else INF
    return RelationVerdict(rel, ExtReal(sup), ExtReal(limsup), probe.count, False)


@dataclass(frozen=True)
class PropertyCertificate:
    """Result of probing ``(omega_1)`` (constant ``L``) or ``(omega_6)`` (constant ``H``)."""

    property: str
    constant: float
    probe_range: tuple[float, float]
    holds: bool
    exact: bool = False

    def __bool__(self) -> bool:
        return self.holds


def _require_weight(f: WeightFunction) -> None:
    if not f.is_weight:
        raise ValueError(f"{f.to_expr()} is not a weight function")


def _tail_ratio_limits(num: np.ndarray, den: np.ndarray, t: np.ndarray) -> tuple[float, float]:
    w0 = tail_start(t.size) - 1
    ratio = np.exp(_log_ratio(num[w0:], den[w0:]))
    return tail_limits(t[w0:], ratio)


def check_om1(f: WeightFunction, probe: ProbeSpec = ProbeSpec()) -> PropertyCertificate:
    """``omega(2t) <= L omega(t) + L`` with the smallest ``L = 2^k``, ``k = 0..20``.

    Besides the inequality on the probe grid, the asymptotic ratio
    ``omega(2t)/omega(t)`` estimated from the tail must not exceed ``L``.
    """
    _require_weight(f)
    t = probe.points()
    lt = np.concatenate(([-INF], np.log(t)))
    w = np.asarray(f.eval_log(lt), dtype=float)
    w2 = np.asarray(f.eval_log(lt + math.log(2.0)), dtype=float)
    sup_ratio, _ = _tail_ratio_limits(w2[1:], w[1:], t)
    for k in range(21):
        L = 2.0 ** k
        with np.errstate(invalid="ignore", over="ignore"):
            ok = np.all(w2 <= L * w + L)
        if ok and sup_ratio <= L * (1.0 + 1e-6):
            return PropertyCertificate("Om1", L, (probe.t_min, probe.t_max), True)
    return PropertyCertificate("Om1", INF, (probe.t_min, probe.t_max), False)


def check_om6(f: WeightFunction, probe: ProbeSpec = ProbeSpec()) -> PropertyCertificate:
    """``2 omega(t) <= omega(H t) + H`` with the smallest ``H = 2^k``, ``k = 0..20``.

    Besides the inequality on the probe grid, the asymptotic ratio
    ``omega(Ht)/omega(t)`` estimated from the tail must reach 2; slowly
    varying weights fail here even when a large ``H`` hides the defect on a
    finite grid.
    """
    _require_weight(f)
    t = probe.points()
    lt = np.concatenate(([-INF], np.log(t)))
    w = np.asarray(f.eval_log(lt), dtype=float)
    for k in range(21):
        H = 2.0 ** k
        wh = np.asarray(f.eval_log(lt + math.log(H)), dtype=float)
        with np.errstate(invalid="ignore", over="ignore"):
            ok = np.all(2.0 * w <= wh + H)
        if not ok:
            continue
        _, inf_ratio = _tail_ratio_limits(wh[1:], w[1:], t)
        if inf_ratio >= 2.0 * (1.0 - 1e-6):
            return PropertyCertificate("Om6", H, (probe.t_min, probe.t_max), True)
    return PropertyCertificate("Om6", INF, (probe.t_min, probe.t_max), False)


# ---------------------------------------------------------------------------
# expression syntax

_TOKEN = re.compile(r"\s*(?:(?P<num>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<punct>[(),]))")


class _Parser:
    def __init__(self, text: str, base: Path, depth: int) -> None:
        self.text = text
        self.pos = 0
        self.base = base
        self.depth = depth

    def error(self, msg: str) -> ExpressionError:
        return ExpressionError(f"{msg} at position {self.pos} in {self.text!r}")

    def peek(self) -> Optional[tuple[str, str]]:
        m = _TOKEN.match(self.text, self.pos)
        if not m or m.end() == self.pos:
            return None
        kind = m.lastgroup
        return kind, m.group(kind)

    def take(self) -> tuple[str, str]:
        m = _TOKEN.match(self.text, self.pos)
        if not m or m.end() == self.pos:
            raise self.error("unexpected input")
        self.pos = m.end()
        return m.lastgroup, m.group(m.lastgroup)

    def expect(self, ch: str) -> None:
        kind, val = self.take()
        if val != ch:
            raise self.error(f"expected {ch!r}, got {val!r}")

    def number(self) -> float:
        kind, val = self.take()
        if kind != "num":
            raise self.error(f"expected a number, got {val!r}")
        return float(val)

    def raw_argument(self) -> str:
        end = self.text.find(")", self.pos)
        if end < 0:
            raise self.error("unterminated assoc(...)")
        arg = self.text[self.pos:end].strip()
        self.pos = end
        return arg

    def expr(self) -> WeightFunction:
        kind, name = self.take()
        if kind != "name":
            raise self.error(f"expected a function name, got {name!r}")
        if name == "logplus":
            if self.peek() == ("punct", "("):
                self.take()
                self.expect(")")
            return LogPlus()
        self.expect("(")
        if name == "mono":
            node: WeightFunction = Monomial(self.number())
        elif name == "assoc":
            src = self.raw_argument()
            path = Path(src)
            if not path.is_absolute():
                path = self.base / path
            try:
                seq = load_sequence(path)
            except OSError as exc:
                raise ExpressionError(f"cannot read sequence file {src!r}: {exc}") from exc
            if seq.P > self.depth and not seq.is_zero:
                seq = seq.truncate(self.depth)
            node = Associated.of(seq, src)
        elif name in ("powsub",):
            inner = self.expr()
            self.expect(",")
            node = PowerSub(inner, self.number())
        elif name == "inv":
            node = InvertVar(self.expr())
        elif name in ("lconj", "uconj"):
            a = self.expr()
            self.expect(",")
            b = self.expr()
            node = LowerConj(a, b) if name == "lconj" else UpperConj(a, b)
        elif name in ("scale", "shift", "zeroval"):
            c = self.number()
            self.expect(",")
            inner = self.expr()
            node = {"scale": Scale, "shift": Shift, "zeroval": ZeroValue}[name](c, inner)
        else:
            raise self.error(f"unknown function {name!r}")
        self.expect(")")
        return node


def parse_expr(text: str, base: Union[str, Path, None] = None, depth: int = DEFAULT_DEPTH) -> WeightFunction:
    """Parse the expression syntax ``mono(a)``, ``logplus``, ``assoc(file)``,
    ``powsub(f,a)``, ``inv(f)``, ``lconj(f,g)``, ``uconj(f,g)``,
    ``scale(c,f)``, ``shift(c,f)`` and ``zeroval(c,f)``.

    Sequence files named in ``assoc(...)`` are resolved against ``base``
    (default: the working directory) and truncated to ``depth``.
    """
    parser = _Parser(text, Path(base) if base is not None else Path.cwd(), depth)
    try:
        node = parser.expr()
    except (ValueError, TypeError) as exc:
        if isinstance(exc, ExpressionError):
            raise
        raise ExpressionError(str(exc)) from exc
    if parser.text[parser.pos:].strip():
        raise parser.error("trailing input")
    return node
