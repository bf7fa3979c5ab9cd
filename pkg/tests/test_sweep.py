import io
import math

import numpy as np
import pytest

from invnorm import (
    ConfigError,
    DomainError,
    GridSpec,
    Method,
    PAPER_BOUNDS,
    UsageError,
    emit_csv,
    reduction_percent,
    sweep,
    tail_check,
    verify_bounds,
)
from invnorm.sweep import CSV_HEADER, BoundSpec

COARSE = GridSpec(0.0, 7.0, 1e-3)


@pytest.fixture(scope="module")
def coarse_reports():
    return {m: sweep(m, COARSE) for m in Method}


class TestGridSpec:
    def test_count_hits_endpoint(self):
        g = GridSpec(0.0, 7.0, 1e-4)
        assert g.count == 70001
        assert g.points()[-1] == pytest.approx(7.0, abs=1e-12)

    def test_degenerate_single_point(self):
        g = GridSpec(0.0, 0.0, 1.0)
        assert g.count == 1
        assert list(g.points()) == [0.0]

    @pytest.mark.parametrize(
        "lo,hi,step", [(0, 7, 0.0), (0, 7, -1e-3), (3, 2, 0.1), (0, math.inf, 1.0)]
    )
    def test_invalid(self, lo, hi, step):
        with pytest.raises(ConfigError):
            GridSpec(lo, hi, step)

    def test_too_many_points(self):
        with pytest.raises(ConfigError):
            GridSpec(0.0, 7.0, 1e-8)


class TestSweep:
    def test_new_phi_bounds_on_coarse_grid(self, coarse_reports):
        r = coarse_reports[Method.NEW_PHI]
        assert r.max_abs_err < 4.00e-5
        assert r.max_rel_err < 4.53e-5

    def test_winitzki_erf_bounds(self, coarse_reports):
        r = coarse_reports[Method.WINITZKI_ERF]
        assert r.max_abs_err < 1.25e-4
        assert r.max_rel_err < 1.28e-4

    def test_degenerate_grid_zero_error(self):
        r = sweep(Method.NEW_PHI, GridSpec(0.0, 0.0, 1.0))
        assert r.max_abs_err == 0.0
        assert r.max_rel_err == 0.0

    def test_maxima_match_rows(self, coarse_reports):
        r = coarse_reports[Method.NEW_PHI]
        assert r.max_abs_err == np.max(np.abs(r.abs_err))
        i = int(np.argmax(np.abs(r.abs_err)))
        assert r.argmax_abs == r.x[i]

    def test_rel_err_defined_zero_at_erf_origin(self, coarse_reports):
        r = coarse_reports[Method.WINITZKI_ERF]
        assert r.x[0] == 0.0 and r.rel_err[0] == 0.0

    def test_negative_lo_ok_for_phi(self):
        r = sweep(Method.NEW_PHI, GridSpec(-2.0, 2.0, 0.5))
        assert r.x[0] == -2.0

    def test_negative_lo_rejected_for_erf(self):
        with pytest.raises(ConfigError):
            sweep(Method.WINITZKI_ERF, GridSpec(-1.0, 1.0, 0.5))

    def test_error_vanishes_at_origin(self, coarse_reports):
        for m in (Method.NEW_PHI, Method.SE2014_PHI, Method.WINITZKI_PHI):
            r = coarse_reports[m]
            assert r.abs_err[0] == 0.0

    def test_abs_err_oscillates(self, coarse_reports):
        # the error curve crosses zero at least twice on [0, 7]
        signs = np.sign(coarse_reports[Method.NEW_PHI].abs_err)
        signs = signs[signs != 0]
        assert np.count_nonzero(np.diff(signs) != 0) >= 2

    def test_determinism(self):
        g = GridSpec(0.0, 5.0, 1e-2)
        a = sweep(Method.NEW_PHI, g)
        b = sweep(Method.NEW_PHI, g)
        assert np.array_equal(a.approx, b.approx)
        assert np.array_equal(a.exact, b.exact)
        assert (a.max_abs_err, a.argmax_abs, a.max_rel_err, a.argmax_rel) == (
            b.max_abs_err,
            b.argmax_abs,
            b.max_rel_err,
            b.argmax_rel,
        )

    def test_grid_refinement_stability(self):
        for m in Method:
            full = sweep(m, GridSpec(0.0, 7.0, 1e-3)).max_abs_err
            half = sweep(m, GridSpec(0.0, 7.0, 5e-4)).max_abs_err
            assert abs(half - full) / full < 0.01, m


class TestVerifyBounds:
    def test_all_methods_pass(self, coarse_reports):
        for m in Method:
            v = verify_bounds(coarse_reports[m], PAPER_BOUNDS[m])
            assert v.passed, (m, v)
            assert v.abs_margin > 0 and v.rel_margin > 0

    def test_forced_failure(self, coarse_reports):
        tight = BoundSpec(Method.NEW_PHI, 1e-6, 1e-6)
        v = verify_bounds(coarse_reports[Method.NEW_PHI], tight)
        assert not v.passed
        assert v.abs_margin < 0 and v.rel_margin < 0

    def test_method_mismatch(self, coarse_reports):
        with pytest.raises(UsageError):
            verify_bounds(coarse_reports[Method.NEW_PHI], PAPER_BOUNDS[Method.SE2014_PHI])

    def test_erf_from_new_abs_bound_flagged_derived(self):
        assert PAPER_BOUNDS[Method.ERF_FROM_NEW].abs_bound_derived
        assert not PAPER_BOUNDS[Method.NEW_PHI].abs_bound_derived


class TestReductionPercent:
    def test_arithmetic(self):
        assert reduction_percent(4e-5, 6.21e-5) == pytest.approx(35.59, abs=0.05)

    def test_equal_is_zero(self):
        assert reduction_percent(3.3, 3.3) == 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            reduction_percent(1.0, 0.0)


class TestTailCheck:
    def test_new_phi_far_tail(self):
        v = tail_check(Method.NEW_PHI, 7.0, 40.0)
        assert v.passed
        assert v.max_abs_err < 1e-10
        assert v.max_trivial_abs < 1e-10

    def test_single_point(self):
        v = tail_check(Method.NEW_PHI, 7.0, 7.0)
        assert v.passed
        assert v.max_trivial_abs == pytest.approx(1.28e-12, rel=0.01)

    def test_winitzki_phi(self):
        v = tail_check(Method.WINITZKI_PHI, 7.0, 40.0)
        assert v.passed

    def test_start_below_seven_rejected(self):
        with pytest.raises(ConfigError):
            tail_check(Method.NEW_PHI, 6.0, 40.0)


class TestEmitCsv:
    def test_header_and_line_count(self):
        r = sweep(Method.NEW_PHI, GridSpec(0.0, 2.0, 1.0))
        buf = io.StringIO()
        n = emit_csv(r, buf)
        lines = buf.getvalue().split("\n")
        assert n == 3
        assert lines[0] == CSV_HEADER == "x,approx,exact,abs_err,rel_err"
        assert len(lines) == 5 and lines[-1] == ""

    def test_roundtrip_bit_exact(self):
        r = sweep(Method.SE2014_PHI, GridSpec(0.0, 6.0, 1e-2))
        buf = io.StringIO()
        emit_csv(r, buf)
        body = buf.getvalue().strip().split("\n")[1:]
        parsed = np.array([[float(cell) for cell in line.split(",")] for line in body])
        for j, arr in enumerate((r.x, r.approx, r.exact, r.abs_err, r.rel_err)):
            assert np.array_equal(parsed[:, j], arr)
