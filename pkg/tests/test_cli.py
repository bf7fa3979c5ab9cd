import numpy as np
import pytest

from invnorm.cli import BenchReport, bench, main
from invnorm.approx import Method
from invnorm.errors import UsageError
from invnorm.sweep import GridSpec


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_phi_at_zero(self, capsys):
        code, out, _ = run(capsys, "eval", "--method", "new-phi", "--x", "0")
        assert code == 0
        assert float(out.strip()) == 0.5

    def test_default_method(self, capsys):
        code, out, _ = run(capsys, "eval", "--x", "1.0")
        assert code == 0
        assert float(out.strip()) == pytest.approx(0.84134, abs=1e-4)

    def test_erf_negative_odd_extension(self, capsys):
        code, pos, _ = run(capsys, "eval", "--method", "winitzki-erf", "--x", "1.5")
        code2, neg, _ = run(capsys, "eval", "--method", "winitzki-erf", "--x", "-1.5")
        assert code == code2 == 0
        assert float(neg.strip()) == -float(pos.strip())

    def test_nonfinite_is_domain_error(self, capsys):
        code, _, err = run(capsys, "eval", "--x", "nan")
        assert code == 3
        assert "domain error" in err

    def test_unknown_method_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--method", "bogus", "--x", "1"])
        assert exc.value.code == 2

    def test_unknown_flag_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--x", "1", "--frobnicate"])
        assert exc.value.code == 2


class TestInv:
    def test_quantile_median(self, capsys):
        code, out, _ = run(capsys, "inv", "--method", "new-phi", "--p", "0.5")
        assert code == 0
        assert float(out.strip()) == 0.0

    def test_out_of_domain_probability(self, capsys):
        code, _, err = run(capsys, "inv", "--method", "new-phi", "--p", "1.5")
        assert code == 3
        assert "domain error" in err

    def test_missing_value_is_usage_error(self, capsys):
        code, _, err = run(capsys, "inv", "--method", "new-phi")
        assert code == 2
        assert "usage error" in err

    def test_erf_method_needs_z(self, capsys):
        code, _, err = run(capsys, "inv", "--method", "winitzki-erf", "--p", "0.9")
        assert code == 2
        code, out, _ = run(capsys, "inv", "--method", "winitzki-erf", "--z", "0.5")
        assert code == 0
        assert float(out.strip()) == pytest.approx(0.4769, abs=1e-3)


class TestSweepCommand:
    def test_csv_to_stdout(self, capsys):
        code, out, err = run(
            capsys, "sweep", "--method", "new-phi", "--lo", "0", "--hi", "1", "--step", "0.5"
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "x,approx,exact,abs_err,rel_err"
        assert len(lines) == 4
        assert "max_abs_err" in err

    def test_csv_to_file(self, capsys, tmp_path):
        out_path = tmp_path / "curve.csv"
        code, out, _ = run(
            capsys, "sweep", "--lo", "0", "--hi", "2", "--step", "0.1", "--out", str(out_path)
        )
        assert code == 0
        lines = out_path.read_text().strip().split("\n")
        assert lines[0] == "x,approx,exact,abs_err,rel_err"
        assert len(lines) == 22

    def test_byte_identical_across_runs(self, capsys):
        args = ("sweep", "--method", "se2014-phi", "--lo", "0", "--hi", "3", "--step", "0.01")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2


class TestVerifyCommand:
    def test_full_default_grid_passes(self, capsys):
        code, out, _ = run(capsys, "verify")
        assert code == 0
        assert "new-phi" in out
        assert "abs 4.00e-05: PASS" in out
        assert out.count("PASS") == 10
        assert "FAIL" not in out
        assert "reduction" in out

    def test_output_stable(self, capsys):
        _, out1, _ = run(capsys, "verify", "--step", "1e-2")
        _, out2, _ = run(capsys, "verify", "--step", "1e-2")
        assert out1 == out2


class TestBench:
    def test_report_structure(self):
        r = bench(Method.NEW_PHI, 10**5, GridSpec(0.0, 7.0, 1e-4), repetitions=3)
        assert isinstance(r, BenchReport)
        assert r.ns_per_call_approx > 0 and r.ns_per_call_oracle > 0
        assert r.speedup > 0
        assert np.isfinite(r.checksum)

    def test_checksum_deterministic(self):
        a = bench(Method.WINITZKI_ERF, 10**5, repetitions=2)
        b = bench(Method.WINITZKI_ERF, 10**5, repetitions=2)
        assert a.checksum == b.checksum

    def test_iteration_floor(self):
        with pytest.raises(UsageError):
            bench(Method.NEW_PHI, 10**4)

    def test_cli_bench(self, capsys):
        code, out, _ = run(capsys, "bench", "--method", "new-phi", "--iters", "100000")
        assert code == 0
        assert "speedup" in out and "checksum" in out

    def test_cli_bench_low_iters(self, capsys):
        code, _, err = run(capsys, "bench", "--iters", "10")
        assert code == 2
        assert "usage error" in err
