"""High-precision reference values for erf and the normal CDF.

Deliberately independent of :mod:`invnorm.approx`: everything here is built
from the defining integral, through two classical expansions, so measured
approximation errors are attributable to the approximations alone.

* |x| <= series_threshold: Maclaurin series
  erf(x) = (2/sqrt(pi)) * sum_n (-1)^n x^(2n+1) / (n! (2n+1)),
  with Kahan-compensated summation, truncated at 1e-17 relative.
* |x| > series_threshold: erfc through the continued fraction
  erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
  evaluated by the modified Lentz algorithm.

The normal CDF is always routed through erfc so the tails keep full relative
accuracy; absolute error stays below ~1e-15 on [-40, 40], far under the
1e-13 documentation target. quantile_ref is a plain bisection on phi_ref,
meant for tests only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "OracleConfig",
    "DEFAULT_CONFIG",
    "erf_ref",
    "phi_ref",
    "quantile_ref",
    "erf_ref_many",
    "phi_ref_many",
]

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)
_INV_SQRT_PI = 1.0 / math.sqrt(math.pi)
_INV_SQRT2 = 1.0 / math.sqrt(2.0)
_TINY = 1e-300


@dataclass(frozen=True)
class OracleConfig:
    """Branch crossover and term budgets for the reference evaluators."""

    series_threshold: float = 3.0
    cf_terms: int = 60
    target_abs_err: float = 1e-13

    def __post_init__(self) -> None:
        if not self.series_threshold > 0:
            raise ValueError("series_threshold must be > 0")
        if self.cf_terms < 20:
            raise ValueError("cf_terms must be >= 20")


DEFAULT_CONFIG = OracleConfig()


def _erf_series(x: np.ndarray) -> np.ndarray:
    """Maclaurin series for erf, compensated summation, |x| <= ~3."""
    x = np.asarray(x, dtype=float)
    u = x * x
    power = x.copy()  # x^(2n+1) / n!, signed
    total = np.zeros_like(x)
    comp = np.zeros_like(x)
    n = 0
    while True:
        term = power / (2 * n + 1)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        n += 1
        power = power * (-u) / n
        bound = np.abs(power) / (2 * n + 1)
        if np.all(bound <= 1e-17 * np.maximum(np.abs(total), _TINY)) or n > 500:
            break
    return _TWO_OVER_SQRT_PI * total


def _erfc_cf(x: np.ndarray, cf_terms: int) -> np.ndarray:
    """erfc for x > ~3 via the continued fraction, modified Lentz evaluation."""
    x = np.asarray(x, dtype=float)
    f = x.copy()
    C = x.copy()
    D = np.zeros_like(x)
    for j in range(1, cf_terms + 1):
        a = 0.5 * j
        D = x + a * D
        D = np.where(D == 0.0, _TINY, D)
        D = 1.0 / D
        C = x + a / C
        C = np.where(C == 0.0, _TINY, C)
        delta = C * D
        f = f * delta
        if np.all(np.abs(delta - 1.0) < 1e-17):
            break
    with np.errstate(under="ignore"):
        return np.exp(-x * x) * _INV_SQRT_PI / f


def _erfc_many(z: np.ndarray, config: OracleConfig) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    thr = config.series_threshold
    out = np.empty_like(z)
    mid = np.abs(z) <= thr
    hi = z > thr
    lo = z < -thr
    if mid.any():
        out[mid] = 1.0 - _erf_series(z[mid])
    if hi.any():
        out[hi] = _erfc_cf(z[hi], config.cf_terms)
    if lo.any():
        out[lo] = 2.0 - _erfc_cf(-z[lo], config.cf_terms)
    return out


def erf_ref_many(xs: np.ndarray, config: OracleConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Vectorized erf_ref over finite reals."""
    xs = np.asarray(xs, dtype=float)
    out = np.empty_like(xs)
    mid = np.abs(xs) <= config.series_threshold
    far = ~mid
    if mid.any():
        out[mid] = _erf_series(xs[mid])
    if far.any():
        tail = 1.0 - _erfc_cf(np.abs(xs[far]), config.cf_terms)
        out[far] = np.copysign(tail, xs[far])
    return out


def phi_ref_many(xs: np.ndarray, config: OracleConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Vectorized phi_ref: 0.5 * erfc(-x/sqrt(2))."""
    xs = np.asarray(xs, dtype=float)
    return 0.5 * _erfc_many(-xs * _INV_SQRT2, config)


def _check_finite(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {x!r}")
    return x


def erf_ref(x: float, config: OracleConfig = DEFAULT_CONFIG) -> float:
    """Reference erf(x), odd in x, absolute error well under 1e-13."""
    x = _check_finite(x)
    return float(erf_ref_many(np.array([x]), config)[0])


def phi_ref(x: float, config: OracleConfig = DEFAULT_CONFIG) -> float:
    """Reference normal CDF, tail-accurate through erfc; phi_ref(0) = 0.5."""
    x = _check_finite(x)
    return float(phi_ref_many(np.array([x]), config)[0])


def quantile_ref(p: float, config: OracleConfig = DEFAULT_CONFIG) -> float:
    """Bisection inverse of phi_ref on [-10, 10] to interval width 1e-12."""
    p = float(p)
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must be in (0, 1), got {p!r}")
    lo, hi = -10.0, 10.0
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if phi_ref(mid, config) < p:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
