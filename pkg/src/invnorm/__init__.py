"""Explicitly invertible closed-form approximations of the normal CDF and erf.

Public surface:

* :mod:`invnorm.approx` — the five approximation methods and their shared
  rational-exponent representation.
* :mod:`invnorm.inverse` — exact algebraic quantile / inverse-erf.
* :mod:`invnorm.oracle` — independent high-precision reference values.
* :mod:`invnorm.sweep` — error sweeps, bound verification, CSV emission.
* :mod:`invnorm.cli` — the ``invnorm`` command.
"""

from .approx import (
    ERF_METHODS,
    PHI_METHODS,
    ExponentForm,
    Method,
    erf_approx,
    exponent_eval,
    method_form,
    phi_full,
    phi_nonneg,
)
from .errors import ConfigError, DomainError, InvnormError, UsageError
from .inverse import InverseSolution, inverse_erf, log_complement_phi, quantile, solve_exponent_inverse
from .oracle import OracleConfig, erf_ref, phi_ref, quantile_ref
from .sweep import (
    PAPER_BOUNDS,
    BoundSpec,
    GridSpec,
    SweepReport,
    emit_csv,
    reduction_percent,
    sweep,
    tail_check,
    verify_bounds,
)

__version__ = "0.1.0"

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
    "InverseSolution",
    "log_complement_phi",
    "solve_exponent_inverse",
    "quantile",
    "inverse_erf",
    "OracleConfig",
    "erf_ref",
    "phi_ref",
    "quantile_ref",
    "GridSpec",
    "SweepReport",
    "BoundSpec",
    "PAPER_BOUNDS",
    "sweep",
    "verify_bounds",
    "reduction_percent",
    "tail_check",
    "emit_csv",
    "InvnormError",
    "DomainError",
    "UsageError",
    "ConfigError",
    "__version__",
]
