"""
Growth indices from samples
===========================

The lower and upper growth indices of t^(1/s) are both s.  The numeric
estimators bracket them from samples alone; the conjugates add indices
(lower) or subtract them (upper).
"""

from weightconj.indices import IndexOptions, gamma_analytic, gamma_lower, gamma_upper
from weightconj.sequences import make_gevrey
from weightconj.weightfn import Associated, LowerConj, Monomial, UpperConj

numeric = IndexOptions(use_analytic=False)

for f in (Monomial(0.5), Associated.of(make_gevrey(2.0), "G2"),
          LowerConj(Monomial(1.5), Monomial(0.5)), UpperConj(Monomial(3.0), Monomial(1.0))):
    lo, hi = gamma_lower(f, numeric), gamma_upper(f, numeric)
    print("%-34s gamma in [%.3f, %.3f]  gamma_bar in [%.3f, %.3f]  closed form %s"
          % (f.to_expr()[:34], lo.lo, lo.hi, hi.lo, hi.hi, gamma_analytic(f)))
