"""Command-line front end.

Subcommands: eval (point value), inv (quantile / inverse erf), sweep (CSV
error curve), verify (bound table for all five methods), bench (throughput
vs the oracle). Diagnostics go to stderr; data to stdout or --out.

Exit codes: 0 success / all bounds pass, 1 verification failure, 2 usage
error, 3 domain error.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from dataclasses import dataclass

import numpy as np

from .approx import ERF_METHODS, PHI_METHODS, Method, erf_approx, erf_many, phi_full, phi_many
from .errors import ConfigError, DomainError, UsageError
from .inverse import inverse_erf, quantile
from .oracle import erf_ref_many, phi_ref_many
from .sweep import GridSpec, PAPER_BOUNDS, emit_csv, reduction_percent, sweep, verify_bounds

__all__ = ["main", "bench", "BenchReport"]

_DEFAULT_GRID = GridSpec(0.0, 7.0, 1e-4)
_BENCH_SEED = 0x5EED
_MIN_BENCH_ITERS = 10**5


@dataclass(frozen=True)
class BenchReport:
    """Median per-call timings for approximation vs oracle, plus a checksum."""

    method: Method
    ns_per_call_approx: float
    ns_per_call_oracle: float
    speedup: float
    checksum: float


def bench(
    method: Method,
    iterations: int,
    grid: GridSpec = _DEFAULT_GRID,
    repetitions: int = 5,
) -> BenchReport:
    """Time approximation and oracle on identical seeded random inputs.

    Reports medians of ``repetitions`` runs; the checksum (sum of all
    approximation outputs) keeps the measured loop from being optimized away
    and doubles as a determinism witness.
    """
    if iterations < _MIN_BENCH_ITERS:
        raise UsageError(f"iterations must be >= {_MIN_BENCH_ITERS}, got {iterations}")
    rng = np.random.default_rng(_BENCH_SEED)
    lo = max(grid.lo, 0.0) if method in ERF_METHODS else grid.lo
    xs = rng.uniform(lo, grid.hi, iterations)

    if method in PHI_METHODS:
        approx_fn = lambda a: phi_many(method, a)  # noqa: E731
        oracle_fn = phi_ref_many
    else:
        approx_fn = lambda a: erf_many(method, a)  # noqa: E731
        oracle_fn = erf_ref_many

    checksum = float(np.sum(approx_fn(xs)))
    approx_ns = []
    oracle_ns = []
    for _ in range(repetitions):
        t0 = time.perf_counter_ns()
        approx_fn(xs)
        approx_ns.append((time.perf_counter_ns() - t0) / iterations)
        t0 = time.perf_counter_ns()
        oracle_fn(xs)
        oracle_ns.append((time.perf_counter_ns() - t0) / iterations)
    a = statistics.median(approx_ns)
    o = statistics.median(oracle_ns)
    return BenchReport(method, a, o, o / a, checksum)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invnorm",
        description="Invertible closed-form normal CDF / erf approximations.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    method_names = [m.value for m in Method]

    def add_common(p: argparse.ArgumentParser, default_method: bool = True) -> None:
        p.add_argument("--method", choices=method_names, default="new-phi" if default_method else None)

    def add_grid(p: argparse.ArgumentParser) -> None:
        p.add_argument("--lo", type=float, default=0.0)
        p.add_argument("--hi", type=float, default=7.0)
        p.add_argument("--step", type=float, default=1e-4)

    p_eval = sub.add_parser("eval", help="evaluate the approximation at a point")
    add_common(p_eval)
    p_eval.add_argument("--x", type=float, required=True)

    p_inv = sub.add_parser("inv", help="invert the approximation")
    add_common(p_inv)
    p_inv.add_argument("--p", type=float, help="probability, CDF methods")
    p_inv.add_argument("--z", type=float, help="erf value, erf methods")

    p_sweep = sub.add_parser("sweep", help="error sweep vs the oracle, CSV output")
    add_common(p_sweep)
    add_grid(p_sweep)
    p_sweep.add_argument("--out", type=str, default=None)

    p_verify = sub.add_parser("verify", help="verify published bounds for all methods")
    add_grid(p_verify)

    p_bench = sub.add_parser("bench", help="micro-benchmark vs the oracle")
    add_common(p_bench)
    add_grid(p_bench)
    p_bench.add_argument("--iters", type=int, default=10**6)

    return parser


def _cmd_eval(args: argparse.Namespace) -> int:
    method = Method(args.method)
    if method in PHI_METHODS:
        value = phi_full(method, args.x)
    else:
        # odd extension for negative arguments lives here, not in the core
        x = args.x
        value = -erf_approx(method, -x) if x < 0 else erf_approx(method, x)
    print(repr(value))
    return 0


def _cmd_inv(args: argparse.Namespace) -> int:
    method = Method(args.method)
    if method in PHI_METHODS:
        if args.p is None:
            raise UsageError("CDF methods invert a probability: pass --p")
        value = quantile(method, args.p)
    else:
        if args.z is None:
            raise UsageError("erf methods invert an erf value: pass --z")
        value = inverse_erf(method, args.z)
    print(repr(value))
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    report = sweep(Method(args.method), GridSpec(args.lo, args.hi, args.step))
    if args.out is None:
        emit_csv(report, sys.stdout)
    else:
        with open(args.out, "w", encoding="ascii", newline="") as sink:
            emit_csv(report, sink)
    print(
        f"max_abs_err={report.max_abs_err:.6e} at x={report.argmax_abs:.6f}  "
        f"max_rel_err={report.max_rel_err:.6e} at x={report.argmax_rel:.6f}",
        file=sys.stderr,
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    grid = GridSpec(args.lo, args.hi, args.step)
    reports = {m: sweep(m, grid) for m in Method}
    all_pass = True
    for m in Method:
        v = verify_bounds(reports[m], PAPER_BOUNDS[m])
        all_pass &= v.passed
        b = PAPER_BOUNDS[m]
        abs_note = " (derived)" if b.abs_bound_derived else ""
        print(
            f"{m.value:13s} abs {b.abs_bound:.2e}{abs_note}: "
            f"{'PASS' if v.abs_margin > 0 else 'FAIL'}  "
            f"observed {v.max_abs_err:.4e} at x={v.argmax_abs:.4f}, margin {v.abs_margin:+.2e}"
        )
        print(
            f"{m.value:13s} rel {b.rel_bound:.2e}: "
            f"{'PASS' if v.rel_margin > 0 else 'FAIL'}  "
            f"observed {v.max_rel_err:.4e} at x={v.argmax_rel:.4f}, margin {v.rel_margin:+.2e}"
        )
    abs_red = reduction_percent(
        reports[Method.NEW_PHI].max_abs_err, reports[Method.WINITZKI_PHI].max_abs_err
    )
    rel_red = reduction_percent(
        reports[Method.NEW_PHI].max_rel_err, reports[Method.WINITZKI_PHI].max_rel_err
    )
    erf_red = reduction_percent(
        reports[Method.ERF_FROM_NEW].max_abs_err, reports[Method.WINITZKI_ERF].max_abs_err
    )
    print(f"abs-error reduction new-phi vs winitzki-phi: {abs_red:.2f}%")
    print(f"rel-error reduction new-phi vs winitzki-phi: {rel_red:.2f}%")
    print(f"abs-error reduction erf-from-new vs winitzki-erf: {erf_red:.2f}%")
    return 0 if all_pass else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    report = bench(Method(args.method), args.iters, GridSpec(args.lo, args.hi, args.step))
    print(
        f"{report.method.value}: approx {report.ns_per_call_approx:.1f} ns/call, "
        f"oracle {report.ns_per_call_oracle:.1f} ns/call, "
        f"speedup {report.speedup:.1f}x, checksum {report.checksum!r}"
    )
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "inv": _cmd_inv,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.subcommand](args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ConfigError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
