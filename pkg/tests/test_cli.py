import csv
import io
import math
import subprocess
import sys

import pytest

from weightconj.cli import EXIT_FAIL, EXIT_IO, EXIT_OK, EXIT_USAGE, main
from weightconj.sequences import format_sequence, make_gevrey


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    (tmp_path / "g1.seq").write_text(format_sequence(make_gevrey(1.0)))
    (tmp_path / "g2.seq").write_text(format_sequence(make_gevrey(2.0)))
    monkeypatch.chdir(tmp_path)
    return tmp_path


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


class TestEval:
    def test_logplus(self):
        code, out = run("eval", "--expr", "logplus", "--t", "2.718281828")
        assert code == EXIT_OK
        assert float(out) == pytest.approx(1.0, abs=1e-9)

    def test_lower_conjugate_of_files(self, workdir):
        code, out = run("eval", "--expr", "lconj(assoc(g1.seq),assoc(g1.seq))", "--t", "4")
        assert code == EXIT_OK and float(out) == pytest.approx(math.log(4), abs=1e-4)

    def test_divergent(self, capsys):
        code, out = run("eval", "--expr", "uconj(mono(0.5),mono(1))", "--t", "1")
        assert code == EXIT_OK and out.strip() == "inf"
        assert "diverges" in capsys.readouterr().err

    def test_seq_flag(self, workdir):
        code, out = run("eval", "--seq", "g1.seq", "--t", "3")
        assert code == EXIT_OK and float(out) == pytest.approx(math.log(4.5), abs=1e-12)

    def test_grid_override(self):
        code, out = run("eval", "--expr", "lconj(logplus,logplus)", "--t", "2.718281828", "--grid-per-decade", "50")
        assert code == EXIT_OK and float(out) == pytest.approx(1.0, abs=1e-6)


class TestTable:
    def test_gevrey_rows(self, workdir):
        code, out = run("table", "--seq", "g1.seq", "--t-min", "0", "--t-max", "5", "--count", "11")
        assert code == EXIT_OK
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["t", "value"] and len(rows) == 12
        values = {float(t): float(v) for t, v in rows[1:]}
        assert values[0.0] == 0.0 and values[0.5] == 0.0
        assert values[3.0] == pytest.approx(math.log(4.5), abs=1e-9)

    def test_output_file_and_stability(self, workdir):
        args = ("table", "--expr", "lconj(mono(1),logplus)", "--t-max", "20", "--count", "7")
        assert run(*args, "--out", "a.csv")[0] == EXIT_OK
        assert run(*args, "--out", "b.csv")[0] == EXIT_OK
        assert (workdir / "a.csv").read_bytes() == (workdir / "b.csv").read_bytes()

    def test_unwritable(self, workdir):
        code, _ = run("table", "--expr", "mono(1)", "--out", str(workdir / "missing" / "x.csv"))
        assert code == EXIT_IO

    def test_bad_range(self):
        assert run("table", "--expr", "mono(1)", "--t-min", "5", "--t-max", "1")[0] == EXIT_USAGE
        assert run("table", "--expr", "mono(1)", "--count", "1")[0] == EXIT_USAGE


class TestIndices:
    def test_monomial(self):
        code, out = run("indices", "--expr", "mono(2)")
        assert code == EXIT_OK
        lines = out.splitlines()
        for line in lines[:2]:
            lo, hi = (float(x) for x in line.split("[")[1].rstrip("]").split(","))
            assert 1.95 <= lo <= 2.0 <= hi <= 2.05
        assert lines[2] == "analytic   (2.0, 2.0)"

    def test_logplus(self):
        code, out = run("indices", "--expr", "logplus")
        assert code == EXIT_OK
        assert "gamma      in [inf, inf]" in out and "gamma_bar  in [inf, inf]" in out

    def test_lower_conjugate(self):
        code, out = run("indices", "--expr", "lconj(mono(1),mono(1))")
        assert code == EXIT_OK and "analytic   (2.0, 2.0)" in out

    def test_unavailable(self):
        code, out = run("indices", "--expr", "shift(1, lconj(mono(1), logplus))")
        assert code == EXIT_OK and "analytic   unavailable" in out


class TestVerify:
    def test_product(self, capsys):
        code, out = run("verify", "--filter", "product")
        assert code == EXIT_OK
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0][:5] == ["check_id", "status", "max_abs_err", "grid_size", "runtime_ms"]
        assert all(r[1] == "pass" for r in rows[1:])
        assert "0 failed" in capsys.readouterr().err

    def test_nonstandard(self):
        assert run("verify", "--filter", "nonstandard")[0] == EXIT_OK

    def test_failure_exit_code(self, capsys):
        code, _ = run("verify", "--filter", "lower_basic[logplus", "--tol", "1e-300")
        assert code == EXIT_FAIL
        assert "FAIL lower_basic[logplus,mono(1)]" in capsys.readouterr().err

    def test_empty_filter(self):
        assert run("verify", "--filter", "nothing-matches")[0] == EXIT_USAGE


class TestCompare:
    def test_sequences(self, workdir):
        code, out = run("compare", "--seq", "g1.seq", "--seq", "g2.seq")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "relation   Triangle"
        assert "exact      true" in out

    def test_expressions(self):
        code, out = run("compare", "--expr", "mono(1)", "--expr2", "logplus")
        assert code == EXIT_OK and out.startswith("relation   Triangle")


class TestErrors:
    def test_parse_error(self):
        assert run("eval", "--expr", "mono(", "--t", "1")[0] == EXIT_USAGE

    def test_missing_file(self, workdir):
        assert run("eval", "--expr", "assoc(nope.seq)", "--t", "1")[0] == EXIT_IO
        assert run("eval", "--seq", "nope.seq", "--t", "1")[0] == EXIT_IO

    def test_usage(self):
        assert run("frobnicate")[0] == EXIT_USAGE
        assert run("eval", "--t", "1")[0] == EXIT_USAGE
        assert run("eval", "--expr", "mono(1)", "--t", "-1")[0] == EXIT_USAGE

    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "weightconj", "eval", "--expr", "mono(2)", "--t", "9"],
                              capture_output=True, text=True, check=False)
        assert proc.returncode == 0 and float(proc.stdout) == pytest.approx(3.0, abs=1e-12)
