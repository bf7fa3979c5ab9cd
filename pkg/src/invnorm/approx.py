"""Closed-form sigmoid approximations of the normal CDF and of erf.

All five methods share one shape: a rational function of u = x**2 sitting in
an exponent,

    value = sqrt(1 - exp(E(u))),   E(u) = -(p1*u + p2*u**2) / (q0 + q1*u + q2*u**2),

wrapped as 1/2 + 1/2*sqrt(...) for the CDF variants. The 1 - exp(E) factor is
always evaluated as -expm1(E); near x = 0 the exponent is ~1e-16 and the naive
subtraction would return 0 and destroy monotonicity.

Scalar entry points validate their domain and raise; the ``*_many`` variants
operate elementwise on numpy arrays and are the workhorses of the sweep and
benchmark layers. Both go through the same elementwise kernels, so scalar and
vector results are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, UsageError

__all__ = [
    "Method",
    "ExponentForm",
    "PHI_METHODS",
    "ERF_METHODS",
    "method_form",
    "exponent_eval",
    "phi_nonneg",
    "phi_full",
    "erf_approx",
    "phi_many",
    "erf_many",
]

_SQRT2 = math.sqrt(2.0)


class Method(Enum):
    """The five approximation methods. Values double as CLI spellings."""

    NEW_PHI = "new-phi"
    SE2014_PHI = "se2014-phi"
    WINITZKI_PHI = "winitzki-phi"
    WINITZKI_ERF = "winitzki-erf"
    ERF_FROM_NEW = "erf-from-new"


PHI_METHODS = frozenset({Method.NEW_PHI, Method.SE2014_PHI, Method.WINITZKI_PHI})
ERF_METHODS = frozenset({Method.WINITZKI_ERF, Method.ERF_FROM_NEW})


@dataclass(frozen=True)
class ExponentForm:
    """Coefficients of the rational exponent -(p1*u + p2*u^2)/(q0 + q1*u + q2*u^2)."""

    p1: float
    p2: float
    q0: float
    q1: float
    q2: float

    def __post_init__(self) -> None:
        if not (self.q0 > 0 and self.p1 > 0):
            raise ValueError("ExponentForm requires q0 > 0 and p1 > 0")
        if self.p2 < 0 or self.q1 < 0 or self.q2 < 0:
            raise ValueError("ExponentForm requires p2, q1, q2 >= 0")


# 4/pi is computed, never hard-coded as a decimal; the remaining constants are
# the exact published decimal literals of each formula.
_FOUR_OVER_PI = 4.0 / math.pi

_FORMS: dict[Method, ExponentForm] = {
    Method.NEW_PHI: ExponentForm(17.0, 1.0, 26.694, 2.0, 0.0),
    Method.SE2014_PHI: ExponentForm(1.2735457, 0.0743968, 2.0, 0.1480931, 0.0002580),
    Method.WINITZKI_PHI: ExponentForm(_FOUR_OVER_PI, 0.0735, 2.0, 0.147, 0.0),
    Method.WINITZKI_ERF: ExponentForm(_FOUR_OVER_PI, 0.147, 1.0, 0.147, 0.0),
    # erf-from-new has no form of its own: it is the new-phi form reached
    # through the substitution erf(x) = 2*Phi(x*sqrt(2)) - 1.
    Method.ERF_FROM_NEW: ExponentForm(17.0, 1.0, 26.694, 2.0, 0.0),
}


def method_form(method: Method) -> ExponentForm:
    """Return the exponent coefficients for ``method``. Pure lookup."""
    try:
        return _FORMS[method]
    except KeyError:
        raise UsageError(f"unknown method: {method!r}") from None


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def _exponent_kernel(form: ExponentForm, u):
    # elementwise; u may be a float or an ndarray
    num = u * (form.p1 + form.p2 * u)
    den = form.q0 + u * (form.q1 + form.q2 * u)
    return -num / den


def exponent_eval(form: ExponentForm, u: float) -> float:
    """E(u) for a single u >= 0. E(0) = 0 and E(u) <= 0 everywhere."""
    u = _check_finite("u", u)
    if u < 0:
        raise DomainError(f"u must be >= 0, got {u}")
    return float(_exponent_kernel(form, u))


def _phi_nonneg_kernel(form: ExponentForm, x):
    e = _exponent_kernel(form, x * x)
    return 0.5 + 0.5 * np.sqrt(-np.expm1(e))


def _erf_kernel(method: Method, x):
    if method is Method.WINITZKI_ERF:
        e = _exponent_kernel(_FORMS[method], x * x)
        return np.sqrt(-np.expm1(e))
    # erf-from-new: 2*Phi_new(x*sqrt(2)) - 1
    return 2.0 * _phi_nonneg_kernel(_FORMS[Method.NEW_PHI], x * _SQRT2) - 1.0


def phi_nonneg(method: Method, x: float) -> float:
    """Approximate Phi(x) for x >= 0; exactly 0.5 at x = 0, values in [1/2, 1]."""
    if method not in PHI_METHODS:
        raise UsageError(f"{method} is not a CDF method")
    x = _check_finite("x", x)
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x} (use phi_full for negatives)")
    return float(_phi_nonneg_kernel(_FORMS[method], x))


def phi_full(method: Method, x: float) -> float:
    """Approximate Phi(x) on all of R via the reflection Phi(-x) = 1 - Phi(x).

    Both signs go through one phi_nonneg evaluation of |x|, so
    phi_full(x) + phi_full(-x) == 1.0 holds exactly in floating point.
    """
    if method not in PHI_METHODS:
        raise UsageError(f"{method} is not a CDF method")
    x = _check_finite("x", x)
    if x >= 0:
        return phi_nonneg(method, x)
    return 1.0 - phi_nonneg(method, -x)


def erf_approx(method: Method, x: float) -> float:
    """Approximate erf(x) for x >= 0; exactly 0 at x = 0.

    Negative arguments are rejected here; odd extension is a presentation
    concern and lives in the CLI.
    """
    if method not in ERF_METHODS:
        raise UsageError(f"{method} is not an erf method")
    x = _check_finite("x", x)
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    return float(_erf_kernel(method, x))


def phi_many(method: Method, xs: np.ndarray) -> np.ndarray:
    """Vectorized phi_full over an array of finite reals."""
    if method not in PHI_METHODS:
        raise UsageError(f"{method} is not a CDF method")
    xs = np.asarray(xs, dtype=float)
    pos = _phi_nonneg_kernel(_FORMS[method], np.abs(xs))
    return np.where(xs >= 0, pos, 1.0 - pos)


def erf_many(method: Method, xs: np.ndarray) -> np.ndarray:
    """Vectorized erf_approx over an array of nonnegative finite reals."""
    if method not in ERF_METHODS:
        raise UsageError(f"{method} is not an erf method")
    xs = np.asarray(xs, dtype=float)
    if np.any(xs < 0):
        raise DomainError("erf grids must be nonnegative")
    return _erf_kernel(method, xs)
