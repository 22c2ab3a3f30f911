import math

import pytest

from weightconj.extreal import INF
from weightconj.indices import GrowthIndexEstimate, IndexOptions, gamma_analytic, gamma_lower, gamma_upper
from weightconj.sequences import make_gevrey
from weightconj.weightfn import Associated, InvertVar, LogPlus, LowerConj, Monomial, PowerSub, Scale, Shift, UpperConj

NUMERIC = IndexOptions(use_analytic=False)
SLACK = 0.05

BUILTINS = [Monomial(0.5), Monomial(2.0), Associated.of(make_gevrey(1.0)), Associated.of(make_gevrey(1.5)),
            PowerSub(Monomial(1.0), 3.0), Shift(2.0, Monomial(1.0))]


def ids(f):
    return f.to_expr()[:24]


class TestExamples:
    def test_gamma_lower(self):
        assert gamma_lower(Monomial(2.0), NUMERIC).contains(2.0, SLACK)
        assert gamma_lower(Associated.of(make_gevrey(1.5)), NUMERIC).contains(1.5, SLACK)
        g = gamma_lower(LogPlus(), NUMERIC)
        assert g.lo == INF and g.hi == INF

    def test_gamma_upper(self):
        assert gamma_upper(Monomial(0.5), NUMERIC).contains(0.5, SLACK)
        assert gamma_upper(Associated.of(make_gevrey(1.0)), NUMERIC).contains(1.0, SLACK)
        assert gamma_upper(LogPlus(), NUMERIC).lo == INF

    def test_analytic(self):
        assert gamma_analytic(LowerConj(Monomial(1.5), Monomial(0.5))) == (2.0, 2.0)
        assert gamma_analytic(UpperConj(Monomial(3.0), Monomial(1.0))) == (2.0, 2.0)
        assert gamma_analytic(Monomial(7.0)) == (7.0, 7.0)
        assert gamma_analytic(Associated.of(make_gevrey(1.5))) == (1.5, 1.5)
        assert gamma_analytic(LogPlus()) == (INF, INF)

    def test_analytic_not_available(self):
        assert gamma_analytic(UpperConj(Monomial(1.0), Monomial(3.0))) is None
        assert gamma_analytic(InvertVar(Monomial(1.0))) is None

    def test_analytic_path_is_used_by_default(self):
        est = gamma_lower(Monomial(2.0))
        assert est.exact and est.lo == est.hi == 2.0

    def test_numeric_brackets_are_narrow(self):
        for f in BUILTINS:
            for est in (gamma_lower(f, NUMERIC), gamma_upper(f, NUMERIC)):
                assert not est.exact
                assert float(est.hi) - float(est.lo) <= 0.1
                assert est.lo <= est.hi

    def test_non_weights_rejected(self):
        with pytest.raises(ValueError):
            gamma_lower(InvertVar(Monomial(1.0)))


class TestProperties:
    @pytest.mark.parametrize("f", BUILTINS, ids=ids)
    def test_lower_below_upper(self, f):
        g, G = gamma_lower(f, NUMERIC), gamma_upper(f, NUMERIC)
        assert float(g.hi) <= float(G.hi) + 2 * SLACK

    @pytest.mark.parametrize("f", BUILTINS, ids=ids)
    @pytest.mark.parametrize("c", [0.1, 7.0])
    def test_scale_invariance(self, f, c):
        for est in (gamma_lower, gamma_upper):
            a, b = est(f, NUMERIC), est(Scale(c, f), NUMERIC)
            assert abs(a.mid - b.mid) <= 0.1

    @pytest.mark.parametrize("f", BUILTINS, ids=ids)
    def test_numeric_agrees_with_analytic(self, f):
        exact = gamma_analytic(f)
        assert exact is not None
        assert gamma_lower(f, NUMERIC).contains(exact[0], SLACK)
        assert gamma_upper(f, NUMERIC).contains(exact[1], SLACK)

    def test_additivity_under_lower_conjugate(self):
        f = LowerConj(Monomial(1.5), Monomial(0.5))
        assert gamma_lower(f, NUMERIC).contains(2.0, 0.1)
        assert gamma_upper(f, NUMERIC).contains(2.0, 0.1)

    def test_subtraction_under_upper_conjugate(self):
        f = UpperConj(Monomial(3.0), Monomial(1.0))
        assert gamma_lower(f, NUMERIC).contains(2.0, 0.1)


class TestEstimate:
    def test_contains_and_mid(self):
        e = GrowthIndexEstimate("GammaLower", 1.0, 2.0, 4.0, False)
        assert e.mid == 1.5 and e.contains(2.04, 0.05) and not e.contains(2.2, 0.05)
        inf = GrowthIndexEstimate("GammaUpper", INF, INF, math.nan, False)
        assert inf.contains(INF) and inf.mid == INF

    def test_bracket_must_be_ordered(self):
        with pytest.raises(ValueError):
            GrowthIndexEstimate("GammaLower", 2.0, 1.0, 4.0, False)
