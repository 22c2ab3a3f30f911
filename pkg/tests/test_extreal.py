import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from weightconj.extreal import (
    INF,
    NINF,
    Divergent,
    ExtReal,
    ere_add,
    ere_div,
    ere_mul,
    ere_sub,
    ext_add,
    ext_sub,
    is_divergent,
    parse_text,
    to_text,
)

finite = st.floats(allow_nan=False, allow_infinity=False, min_value=-1e300, max_value=1e300)
extended = st.one_of(finite, st.sampled_from([INF, NINF]))


class TestConventions:
    def test_addition(self):
        assert ere_add(INF, NINF) == 0.0
        assert ere_add(NINF, INF) == 0.0
        assert ere_add(3, INF) == INF
        assert ere_add(1.5, 2.5) == 4.0

    def test_subtraction(self):
        assert ere_sub(INF, INF) == 0.0
        assert ere_sub(NINF, NINF) == 0.0
        assert ere_sub(0, INF) == NINF
        assert ere_sub(5, 2) == 3.0

    def test_multiplication(self):
        assert ere_mul(0, INF) == 0.0
        assert ere_mul(INF, 0) == 0.0
        assert ere_mul(2, NINF) == NINF
        assert ere_mul(3, 4) == 12.0
        assert ere_mul(NINF, INF) == NINF

    def test_division(self):
        assert ere_div(0, 0) == 0.0
        assert ere_div(7, 0) == INF
        assert ere_div(1, INF) == 0.0
        assert ere_div(INF, INF) == 1.0

    def test_operators_follow_conventions(self):
        x = ExtReal(INF)
        assert x - INF == 0.0
        assert INF - x == 0.0
        assert ExtReal(0.0) * INF == 0.0
        assert ExtReal(0.0) / 0 == 0.0
        assert isinstance(x + 1, ExtReal)

    def test_nan_rejected(self):
        with pytest.raises(ValueError):
            ExtReal(math.nan)
        with pytest.raises(ValueError):
            ere_add(math.nan, 1.0)

    def test_array_helpers_map_indeterminate_forms_to_zero(self):
        a = np.array([INF, NINF, 1.0])
        b = np.array([INF, NINF, 2.0])
        assert ext_sub(a, b).tolist() == [0.0, 0.0, -1.0]
        assert ext_add(a, -b).tolist() == [0.0, 0.0, -1.0]

    def test_divergent_is_plus_infinity(self):
        d = Divergent()
        assert d == INF
        assert is_divergent(d)
        assert not is_divergent(ExtReal(INF))
        assert d - INF == 0.0


class TestText:
    def test_rendering(self):
        assert to_text(INF) == "inf"
        assert to_text(NINF) == "-inf"
        assert to_text(0.5) == "0.5"

    def test_bad_text(self):
        with pytest.raises(ValueError):
            parse_text("nan")
        with pytest.raises(ValueError):
            parse_text("seven")

    @given(extended)
    def test_round_trip_is_bit_exact(self, x):
        assert parse_text(to_text(x)) == x
        assert math.copysign(1.0, parse_text(to_text(x))) == math.copysign(1.0, x) or x == 0.0


class TestProperties:
    @given(extended)
    def test_zero_annihilates(self, x):
        assert ere_mul(0.0, x) == 0.0
        assert ere_mul(x, 0.0) == 0.0

    @given(extended)
    def test_self_difference_vanishes(self, x):
        assert ere_sub(x, x) == 0.0

    @given(extended, extended)
    def test_total_order(self, a, b):
        a, b = ExtReal(a), ExtReal(b)
        assert [a < b, a == b, a > b].count(True) == 1

    @given(finite, finite)
    def test_finite_arithmetic_matches_floats(self, a, b):
        assert ere_add(a, b) == a + b
        assert ere_sub(a, b) == a - b
        if math.isfinite(a * b):
            assert ere_mul(a, b) == a * b
        if b != 0 and math.isfinite(a / b):
            assert ere_div(a, b) == a / b

    @given(st.floats(min_value=0.0, max_value=1e300), st.floats(min_value=0.0, max_value=1e300))
    def test_nonnegative_ratios_are_nonnegative(self, a, b):
        assert ere_div(a, b) >= 0.0

    @given(extended)
    def test_never_nan(self, x):
        for y in (INF, NINF, 0.0, 1.0):
            for op in (ere_add, ere_sub, ere_mul, ere_div):
                assert not math.isnan(op(x, y))
