"""Command-line interface: ``weightconj {eval,table,indices,verify,compare}``.

Exit codes: 0 success, 1 a verification check failed, 2 parse or usage
error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, TextIO

import numpy as np

from .conjugate import ConjOptions
from .errors import ExpressionError, InvalidSequence, WeightConjError
from .extreal import to_text
from .indices import IndexOptions, gamma_analytic, gamma_lower, gamma_upper
from .sequences import DEFAULT_DEPTH, compare, load_sequence
from .verify import SuiteConfig, TOL_GRID, run_suite, write_csv
from .weightfn import Associated, UpperConj, WeightFunction, eval_weight, parse_expr, relate, with_conj_options

__all__ = ["CliConfig", "EXIT_OK", "EXIT_FAIL", "EXIT_USAGE", "EXIT_IO", "main", "build_parser"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3


class _UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    """Parsed command line."""

    command: str
    expr: Optional[str] = None
    expr2: Optional[str] = None
    seq: tuple = ()
    t: Optional[float] = None
    t_min: float = 0.0
    t_max: float = 10.0
    count: int = 101
    out: Optional[str] = None
    filter: Optional[str] = None
    tol: Optional[float] = None
    grid_per_decade: Optional[int] = None
    depth: int = DEFAULT_DEPTH

    def __post_init__(self) -> None:
        if not self.t_min < self.t_max:
            raise _UsageError("--t-min must be smaller than --t-max")
        if self.count < 2:
            raise _UsageError("--count must be at least 2")
        if self.t_min < 0:
            raise _UsageError("weights live on t >= 0")

    @property
    def conj(self) -> Optional[ConjOptions]:
        return None if self.grid_per_decade is None else ConjOptions(per_decade=self.grid_per_decade)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 already; keep the message format
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weightconj", description="Weight sequences, associated weights and their conjugates.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp: argparse.ArgumentParser, need_t: bool = False) -> None:
        sp.add_argument("--expr", help="weight expression, e.g. 'lconj(mono(1),logplus)'")
        sp.add_argument("--seq", action="append", default=[], help="sequence file; stands for assoc(FILE)")
        sp.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="number of stored quotients P")
        sp.add_argument("--grid-per-decade", type=int, dest="grid_per_decade",
                        help="conjugate grid points per decade of log s")

    e = sub.add_parser("eval", help="evaluate an expression at one t")
    common(e)
    e.add_argument("--t", type=float, required=True)

    t = sub.add_parser("table", help="tabulate an expression to CSV")
    common(t)
    t.add_argument("--t-min", type=float, default=0.0, dest="t_min")
    t.add_argument("--t-max", type=float, default=10.0, dest="t_max")
    t.add_argument("--count", type=int, default=101)
    t.add_argument("--out", help="output file (default: stdout)")

    i = sub.add_parser("indices", help="growth index brackets")
    common(i)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--filter", help="run only checks whose id contains this text")
    v.add_argument("--tol", type=float, help=f"grid tolerance (default {TOL_GRID:g})")
    v.add_argument("--grid-per-decade", type=int, dest="grid_per_decade")
    v.add_argument("--out", help="CSV report file (default: stdout)")

    c = sub.add_parser("compare", help="relation between two weights or two sequences")
    common(c)
    c.add_argument("--expr2", help="second weight expression")
    return p


def _config(ns: argparse.Namespace) -> CliConfig:
    kw = {k: v for k, v in vars(ns).items() if v is not None}
    kw["seq"] = tuple(kw.get("seq", ()))
    return CliConfig(**kw)


def _weight(text: Optional[str], seqs: Sequence[str], cfg: CliConfig, which: int = 0) -> WeightFunction:
    if text is None:
        if len(seqs) <= which:
            raise _UsageError("give --expr (or --seq)")
        return Associated.of(_load(seqs[which], cfg), seqs[which])
    f = parse_expr(text, depth=cfg.depth)
    return f if cfg.conj is None else with_conj_options(f, cfg.conj)


def _load(path: str, cfg: CliConfig):
    M = load_sequence(path)
    return M.truncate(cfg.depth) if M.P > cfg.depth and not M.is_zero else M


def cmd_eval(cfg: CliConfig, out: TextIO) -> int:
    f = _weight(cfg.expr, cfg.seq, cfg)
    if cfg.t is None or cfg.t < 0:
        raise _UsageError("--t must be a number >= 0")
    value = eval_weight(f, cfg.t)
    out.write(to_text(value) + "\n")
    if isinstance(f, UpperConj) and f.divergent_at(cfg.t):
        print(f"note: the supremum diverges at t={cfg.t:g}; the upper conjugate is +inf there", file=sys.stderr)
    return EXIT_OK


def cmd_table(cfg: CliConfig, out: TextIO) -> int:
    f = _weight(cfg.expr, cfg.seq, cfg)
    t = np.linspace(cfg.t_min, cfg.t_max, cfg.count)
    with np.errstate(divide="ignore"):
        values = f.eval_log(np.log(t))

    def emit(handle: TextIO) -> None:
        w = csv.writer(handle, lineterminator="\n")
        w.writerow(("t", "value"))
        for ti, vi in zip(t, values):
            w.writerow((repr(float(ti)), to_text(float(vi))))

    if cfg.out is None:
        emit(out)
    else:
        with open(cfg.out, "w", encoding="utf-8", newline="") as handle:
            emit(handle)
    return EXIT_OK


def _bracket(est) -> str:
    return f"[{to_text(float(est.lo))}, {to_text(float(est.hi))}]"


def cmd_indices(cfg: CliConfig, out: TextIO) -> int:
    f = _weight(cfg.expr, cfg.seq, cfg)
    numeric = IndexOptions(use_analytic=False)
    g, G = gamma_lower(f, numeric), gamma_upper(f, numeric)
    out.write(f"gamma      in {_bracket(g)}\n")
    out.write(f"gamma_bar  in {_bracket(G)}\n")
    exact = gamma_analytic(f)
    if exact is None:
        out.write("analytic   unavailable\n")
    else:
        out.write(f"analytic   ({to_text(exact[0])}, {to_text(exact[1])})\n")
    return EXIT_OK


def cmd_verify(cfg: CliConfig, out: TextIO) -> int:
    config = SuiteConfig(tol_grid=cfg.tol if cfg.tol is not None else TOL_GRID, conj=cfg.conj)
    reports = run_suite(cfg.filter, config)
    if not reports:
        raise _UsageError(f"no check matches {cfg.filter!r}")
    if cfg.out is None:
        write_csv(reports, out)
    else:
        with open(cfg.out, "w", encoding="utf-8", newline="") as handle:
            write_csv(reports, handle)
    failed = [r for r in reports if r.failed]
    for r in failed:
        print(f"FAIL {r.check_id}: {r.reason}", file=sys.stderr)
    n_skip = sum(r.status == "skipped" for r in reports)
    print(f"{len(reports) - len(failed) - n_skip} passed, {len(failed)} failed, {n_skip} skipped", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_compare(cfg: CliConfig, out: TextIO) -> int:
    if cfg.expr is None and cfg.expr2 is None and len(cfg.seq) == 2:
        M, N = _load(cfg.seq[0], cfg), _load(cfg.seq[1], cfg)
        v = compare(M, N)
        out.write(f"relation   {v.relation}\n")
        out.write(f"C_upper    {to_text(float(v.C_upper))}\n")
        out.write(f"C_limsup   {to_text(float(v.C_limsup))}\n")
        out.write(f"exact      {str(v.exact).lower()}\n")
        return EXIT_OK
    f = _weight(cfg.expr, cfg.seq, cfg, 0)
    g = _weight(cfg.expr2, cfg.seq, cfg, 1 if cfg.expr is None else 0)
    v = relate(f, g)
    out.write(f"relation   {v.relation}\n")
    out.write(f"C_upper    {to_text(float(v.C_upper))}\n")
    out.write(f"C_limsup   {to_text(float(v.C_limsup))}\n")
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "table": cmd_table, "indices": cmd_indices, "verify": cmd_verify, "compare": cmd_compare}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    try:
        cfg = _config(build_parser().parse_args(argv))
        return COMMANDS[cfg.command](cfg, out)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ExpressionError, InvalidSequence) as exc:
        if isinstance(exc.__cause__, OSError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (WeightConjError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
