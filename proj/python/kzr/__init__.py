"""Exact KZ-system construction, solution and verification.

Every function returns decoded JSON: rationals are "p/q" strings, field
elements are {"a", "b", "c", "d"} for a + b*sqrt2 + c*sqrt3 + d*sqrt6.
"""

import json as _json

from . import _kzr
from ._kzr import KzrError

__all__ = [
    "KzrError",
    "representation",
    "validate_representation",
    "rationality",
    "hypergeometric_params",
    "frobenius_pair",
    "evaluate",
    "exact_line_residual",
    "scalar_ode_checks",
    "fd_grid_residual",
    "rk_cross_check",
    "run_cli",
]


def _rational(value):
    return str(value)


def representation(selector, n=0):
    return _json.loads(_kzr.representation(selector, n))


def validate_representation(selector, n=0):
    return _json.loads(_kzr.validate_representation(selector, n))


def rationality(selector, k, n=0):
    return _json.loads(_kzr.rationality(selector, k, n))


def hypergeometric_params(rho):
    return _json.loads(_kzr.hypergeometric_params(_rational(rho)))


def frobenius_pair(rho):
    return _json.loads(_kzr.frobenius_pair(int(rho)))


def evaluate(rho, y, z, frame="W", kind="exact"):
    return _json.loads(_kzr.evaluate(_rational(rho), _rational(y), _rational(z), frame, kind))


def exact_line_residual(rho, equation, fixed, frame="W"):
    return _json.loads(_kzr.exact_line_residual(_rational(rho), frame, equation, _rational(fixed)))


def scalar_ode_checks(rho):
    return _json.loads(_kzr.scalar_ode_checks(_rational(rho)))


def fd_grid_residual(rho, equation, h=1e-6, tol=1e-8, frame="W", kind="exact"):
    return _json.loads(_kzr.fd_grid_residual(_rational(rho), frame, equation, h, tol, kind))


def rk_cross_check(rho, z=1.0, y0=1.0, y1=2.0, tol=1e-8, frame="W", kind="exact"):
    return _json.loads(_kzr.rk_cross_check(_rational(rho), frame, z, y0, y1, tol, kind))


def run_cli(*args):
    """Runs the command-line front end in process; returns (exit code, stdout, stderr)."""
    return _kzr.run_cli([str(a) for a in args])
