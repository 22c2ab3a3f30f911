"""Weight sequences, associated weight functions and generalized Legendre conjugates.

The submodules build on each other: :mod:`extreal` (arithmetic on
``[-inf, +inf]``), :mod:`sequences`, :mod:`assoc` (``omega_M``),
:mod:`weightfn` (expression trees), :mod:`conjugate` (both conjugates),
:mod:`indices` (growth indices) and :mod:`verify` (runnable checks).
"""

from .assoc import AssociatedWeight, associated, omega_eval, omega_sup_oracle, reconstruct_sequence
from .conjugate import (
    ConjOptions,
    UpperConjResult,
    WellDefCert,
    lower_conj_assoc,
    lower_conj_eval,
    minimizer_witness,
    upper_conj_assoc,
    upper_conj_eval,
    upper_welldef_check,
)
from .errors import (
    DegenerateSequence,
    ExpressionError,
    InvalidSequence,
    NonNormalizedDivisor,
    NotSubordinate,
    RangeExceeded,
    WeightConjError,
)
from .extreal import INF, Divergent, ExtReal, is_divergent
from .indices import GrowthIndexEstimate, IndexOptions, gamma_analytic, gamma_lower, gamma_upper
from .sequences import (
    Relation,
    WeightSequence,
    compare,
    has_mg,
    has_om1_criterion,
    iota,
    load_sequence,
    make_from_quotients,
    make_gevrey,
    make_zero,
    pointwise_product,
    pointwise_quotient,
)
from .verify import CheckReport, run_suite
from .weightfn import (
    Associated,
    LogPlus,
    LowerConj,
    Monomial,
    UpperConj,
    WeightFunction,
    eval_weight,
    parse_expr,
    relate,
)

__version__ = "0.1.0"

__all__ = [
    "Associated",
    "AssociatedWeight",
    "CheckReport",
    "ConjOptions",
    "DegenerateSequence",
    "Divergent",
    "ExpressionError",
    "ExtReal",
    "GrowthIndexEstimate",
    "INF",
    "IndexOptions",
    "InvalidSequence",
    "LogPlus",
    "LowerConj",
    "Monomial",
    "NonNormalizedDivisor",
    "NotSubordinate",
    "RangeExceeded",
    "Relation",
    "UpperConj",
    "UpperConjResult",
    "WeightConjError",
    "WeightFunction",
    "WeightSequence",
    "WellDefCert",
    "associated",
    "compare",
    "eval_weight",
    "gamma_analytic",
    "gamma_lower",
    "gamma_upper",
    "has_mg",
    "has_om1_criterion",
    "iota",
    "is_divergent",
    "load_sequence",
    "lower_conj_assoc",
    "lower_conj_eval",
    "make_from_quotients",
    "make_gevrey",
    "make_zero",
    "minimizer_witness",
    "omega_eval",
    "omega_sup_oracle",
    "parse_expr",
    "pointwise_product",
    "pointwise_quotient",
    "reconstruct_sequence",
    "relate",
    "run_suite",
    "upper_conj_assoc",
    "upper_conj_eval",
    "upper_welldef_check",
]
