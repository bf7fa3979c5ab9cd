"""Exact algebraic inverses of the closed-form approximations.

Inverting p = 1/2 + 1/2*sqrt(1 - exp(E(x^2))) amounts to two substitutions:
L = -ln(1 - (2p-1)^2) turns the equation into E(u) = -L with u = x^2, and
E(u) = -L is a quadratic in u,

    (p2 - L*q2)*u^2 + (p1 - L*q1)*u - L*q0 = 0,

whose unique nonnegative root gives x = sqrt(u). No iteration anywhere: the
inverse is exact for the approximation by construction.

The log-complement is computed in the factored form -(ln(2-2p) + ln(2p)).
The direct form loses every digit as p -> 1 because (2p-1)^2 -> 1; the
factored form stays fully accurate for tail probabilities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .approx import ERF_METHODS, PHI_METHODS, ExponentForm, Method, method_form
from .errors import DomainError, UsageError

__all__ = [
    "InverseSolution",
    "log_complement_phi",
    "solve_exponent_inverse",
    "quantile",
    "inverse_erf",
]

_SQRT2 = math.sqrt(2.0)

# Below this ratio the quadratic degenerates and the linear root is used.
_DEGENERATE_LEAD = 1e-300


@dataclass(frozen=True)
class InverseSolution:
    """Nonnegative root u of the inversion quadratic, with its residual.

    The residual a*u^2 + b*u + c is diagnostic only; it is ~1 ulp of the
    constant term for all reachable inputs.
    """

    u: float
    residual: float


def log_complement_phi(p: float) -> float:
    """L = -ln(1 - (2p-1)^2) for p in [1/2, 1), via the factored form."""
    p = float(p)
    if not 0.5 <= p < 1.0:
        raise DomainError(f"p must be in [1/2, 1), got {p!r}")
    return -(math.log(2.0 - 2.0 * p) + math.log(2.0 * p))


def solve_exponent_inverse(form: ExponentForm, L: float) -> InverseSolution:
    """Solve (p2 - L*q2)*u^2 + (p1 - L*q1)*u - L*q0 = 0 for its root u >= 0.

    Uses the sign-matched quadratic formula (roots q/a and c/q with
    q = -(b + sign(b)*sqrt(b^2 - 4ac))/2) so nothing nearly equal is ever
    subtracted. A vanishing leading coefficient falls back to the linear
    root L*q0 / (p1 - L*q1).
    """
    L = float(L)
    if not math.isfinite(L) or L < 0:
        raise DomainError(f"L must be finite and >= 0, got {L!r}")
    if L == 0.0:
        return InverseSolution(0.0, 0.0)

    a = form.p2 - L * form.q2
    b = form.p1 - L * form.q1
    c = -L * form.q0

    if abs(a) < _DEGENERATE_LEAD * max(1.0, abs(b)):
        if b <= 0:
            raise DomainError("no nonnegative root: degenerate quadratic with b <= 0")
        u = -c / b
        return InverseSolution(u, b * u + c)

    disc = b * b - 4.0 * a * c
    if disc < 0:
        raise DomainError("no real root: negative discriminant (L out of the form's range)")
    sqrt_disc = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(sqrt_disc, b)) if b != 0 else -0.5 * sqrt_disc
    roots = (q / a, c / q) if q != 0 else (0.0, 0.0)
    u = max(roots)
    if u < 0:
        raise DomainError("no nonnegative root for this form and L")
    return InverseSolution(u, (a * u + b) * u + c)


def quantile(method: Method, p: float) -> float:
    """Invert the CDF approximation: the x with phi_full(method, x) = p.

    Antisymmetric by construction (p < 1/2 reflects through 1-p) and exactly
    0 at p = 1/2. p = 0 and p = 1 are rejected rather than mapped to
    infinities; the approximation is a bijection onto (0, 1).
    """
    if method not in PHI_METHODS:
        raise UsageError(f"{method} is not a CDF method")
    p = float(p)
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must be in (0, 1), got {p!r}")
    if p < 0.5:
        return -quantile(method, 1.0 - p)
    L = log_complement_phi(p)
    return math.sqrt(solve_exponent_inverse(method_form(method), L).u)


def inverse_erf(method: Method, z: float) -> float:
    """Invert the erf approximation on [0, 1); exactly 0 at z = 0."""
    if method not in ERF_METHODS:
        raise UsageError(f"{method} is not an erf method")
    z = float(z)
    if not 0.0 <= z < 1.0:
        raise DomainError(f"z must be in [0, 1), got {z!r}")
    if method is Method.ERF_FROM_NEW:
        return quantile(Method.NEW_PHI, (1.0 + z) / 2.0) / _SQRT2
    L = -math.log1p(-z * z)
    return math.sqrt(solve_exponent_inverse(method_form(method), L).u)
