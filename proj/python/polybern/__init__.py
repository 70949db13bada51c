"""Exact poly-Bernoulli numbers and polynomials, umbral identity checks and
Arakawa-Kaneko zeta numerics."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    ConvergenceError,
    ExpansionLimitError,
    QuadratureSpec,
    ak_zeta_mellin,
    barnes_zeta_mellin,
    barnes_zeta_sech,
    hurwitz_zeta,
    mz_truncated,
    negative_moment,
    polygamma,
    polylog,
)

__all__ = [
    "ConvergenceError",
    "ExpansionLimitError",
    "QuadratureSpec",
    "ak_zeta_mellin",
    "barnes_transform_cube",
    "barnes_zeta_mellin",
    "barnes_zeta_sech",
    "bernoulli_numbers",
    "hurwitz_zeta",
    "mz_truncated",
    "negative_moment",
    "poly_bernoulli",
    "poly_bernoulli_polynomial",
    "polygamma",
    "polylog",
    "simplex_transform",
    "verify",
]

SUITES = ("umbral", "recurrence", "transforms", "zeta")


def bernoulli_numbers(n_max):
    return [Fraction(b) for b in _core.bernoulli_numbers(n_max)]


def poly_bernoulli(n, k, variant="B", method="series", z=0):
    """B_n^(k)(z) or C_n^(k)(z) as a Fraction."""
    return Fraction(_core.poly_bernoulli(n, k, variant, method, str(Fraction(z))))


def poly_bernoulli_polynomial(n, k, variant="B", method="series"):
    """Coefficients in ascending powers of z."""
    return [Fraction(c) for c in _core.poly_bernoulli_polynomial(n, k, variant, method)]


def barnes_transform_cube(n, k):
    return [Fraction(c) for c in _core.barnes_transform_cube(n, k)]


def simplex_transform(n, k):
    return [Fraction(c) for c in _core.simplex_transform(n, k)]


def verify(suites=SUITES, max_n=None, zeta_k_max=2):
    """Runs the identity checks and returns the report as a dict."""
    if isinstance(suites, str):
        suites = [suites]
    return json.loads(_core.verify_json(list(suites), -1 if max_n is None else max_n, zeta_k_max))
