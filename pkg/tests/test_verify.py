import csv
import io
import math

import numpy as np
import pytest

from strategies import finite_two
from weightconj.conjugate import ConjOptions
from weightconj.sequences import make_gevrey, pointwise_quotient
from weightconj.verify import (
    CSV_COLUMNS,
    CheckReport,
    SuiteConfig,
    finite_iota_sequence,
    non_lc_quotient_pair,
    run_suite,
    suite,
    verify_bigO_propositions,
    verify_general_inverse_bounds,
    verify_index_theorems,
    verify_inverse_roundtrips,
    verify_logplus_fixed_points,
    verify_nonstandard_suite,
    verify_preservation_lemmas,
    verify_product_identity,
    verify_quotient_identity,
    verify_upper_divergence,
    write_csv,
)
from weightconj.weightfn import Associated, LogPlus, Monomial, Shift, ZeroValue

G = make_gevrey


def passed(r):
    assert r.status == "pass", f"{r.check_id}: {r.status_text} err={r.max_abs_err} {r.reason}"
    assert r.max_abs_err <= r.tolerance
    return r


class TestReport:
    def test_pass_requires_error_within_tolerance(self):
        with pytest.raises(ValueError):
            CheckReport("x", "pass", 0.2, 10, 1, 0.1)
        CheckReport("x", "fail", 0.2, 10, 1, 0.1)

    def test_status_text(self):
        r = CheckReport("x", "skipped", 0.0, 0, 0, 0.1, "hypothesis fails")
        assert r.status_text == "skipped(hypothesis fails)"
        assert not r.passed and not r.failed
        assert CheckReport("x", "pass", 0.0, 1, 1, 0.1).status_text == "pass"

    def test_unknown_status_rejected(self):
        with pytest.raises(ValueError):
            CheckReport("x", "maybe", 0.0, 0, 0, 0.1)


class TestIdentities:
    def test_product(self):
        passed(verify_product_identity(G(1.2), G(0.7), np.linspace(0, 100, 200)))
        r = passed(verify_product_identity(G(1.0), G(1.0)))
        assert r.grid_size > 0

    def test_product_finite_iota(self):
        passed(verify_product_identity(finite_iota_sequence(2.0), finite_iota_sequence(3.0)))

    def test_product_reports_failure_at_tight_tolerance(self):
        coarse = ConjOptions(per_decade=5, decades=1, refine_rounds=0)
        r = verify_product_identity(G(1.2), G(0.7), tol=1e-12, conj=coarse)
        assert r.failed and r.max_abs_err > 1e-12

    def test_quotient(self):
        passed(verify_quotient_identity(G(2.0), G(1.0), np.linspace(0, 50, 200)))
        passed(verify_quotient_identity(G(1.0), G(1.0)))

    def test_quotient_non_log_convex(self):
        M, N = non_lc_quotient_pair()
        assert not pointwise_quotient(M, N).is_log_convex
        r = passed(verify_quotient_identity(M, N))
        assert r.reason.startswith("equality skipped")

    def test_round_trips(self):
        passed(verify_inverse_roundtrips(G(1.0), G(0.5)))
        passed(verify_inverse_roundtrips(G(2.0), G(1.0)))
        passed(verify_inverse_roundtrips(G(1.0), finite_two()))

    def test_fixed_points(self):
        r = passed(verify_logplus_fixed_points())
        # both conjugates on the same 100 points
        assert r.grid_size == 200 and r.tolerance == 1e-6

    def test_nonstandard(self):
        r = passed(verify_nonstandard_suite())
        assert r.check_id == "nonstandard_suite"

    def test_divergence(self):
        passed(verify_upper_divergence())


class TestConditional:
    def test_index_theorems(self):
        passed(verify_index_theorems(Monomial(1.5), Monomial(0.5)))
        passed(verify_index_theorems(Monomial(3.0), Monomial(1.0)))

    def test_index_theorems_skip_extreme_indices(self):
        r = verify_index_theorems(LogPlus(), LogPlus())
        assert r.status == "skipped" and r.reason

    def test_preservation(self):
        passed(verify_preservation_lemmas(G(1.0), G(2.0)))
        passed(verify_preservation_lemmas(G(3.0), G(1.0)))

    def test_big_o(self):
        passed(verify_bigO_propositions(G(1.0), G(1.0)))
        passed(verify_bigO_propositions(G(2.0), G(1.0)))

    def test_general_inverse_bounds(self):
        a1, a2 = Associated.of(G(1.0)), Associated.of(G(2.0))
        passed(verify_general_inverse_bounds(a1, a2, a1))
        passed(verify_general_inverse_bounds(LogPlus(), LogPlus(), LogPlus()))

    def test_origin_gap(self):
        sigma = ZeroValue(0.0, Shift(1.0, LogPlus()))
        r = passed(verify_general_inverse_bounds(LogPlus(), sigma, LogPlus()))
        assert "origin gap 1 checked" in r.reason


class TestSuite:
    def test_ids_are_unique_and_descriptive(self):
        ids = [i for i, _ in suite()]
        assert len(ids) == len(set(ids))
        assert all(i and " " not in i for i in ids)
        for family in ("product_identity", "quotient_identity", "inverse_roundtrips", "index_theorems",
                       "preservation_lemmas", "bigO_propositions", "general_inverse_bounds", "nonstandard_suite"):
            assert any(i.startswith(family) for i in ids), family

    def test_filter(self):
        reports = run_suite("product")
        assert reports and all("product" in r.check_id for r in reports)
        assert all(r.passed for r in reports)
        assert run_suite("no-such-check") == []

    def test_csv(self):
        reports = run_suite("nonstandard")
        buf = io.StringIO()
        text = write_csv(reports, buf)
        assert buf.getvalue() == text
        rows = list(csv.reader(io.StringIO(text)))
        assert tuple(rows[0]) == CSV_COLUMNS
        assert rows[0][:5] == ["check_id", "status", "max_abs_err", "grid_size", "runtime_ms"]
        assert rows[1][0] == "nonstandard_suite" and rows[1][1] == "pass"
        assert math.isfinite(float(rows[1][2]))

    def test_deterministic_apart_from_runtime(self):
        cfg = SuiteConfig(conj=ConjOptions(per_decade=100, decades=3))

        def strip(reports):
            return [(r.check_id, r.status, r.max_abs_err, r.grid_size, r.reason) for r in reports]

        assert strip(run_suite("lower_basic", cfg)) == strip(run_suite("lower_basic", cfg, workers=2))
