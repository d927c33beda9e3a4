"""Capitulation kernels of 2-groups whose abelianization is of type (2,4).

Thin wrapper over the C++ library. Structured results come back as dicts
with the same fields as ``capit ... --json``.
"""

import json

from ._core import (
    DEFAULT_MAX_COSETS,
    CatalogError,
    CosetLimitExceeded,
    Error,
    InvalidArgument,
    OrderTooLarge,
    OutsideHypothesis,
    ParseError,
    PreconditionError,
    UndefinedSymbol,
    catalog,
    classify,
    is_prime,
    legendre,
    order,
    quartic,
    quartic_two,
    rank_l,
    render,
)
from . import _core

__all__ = [
    "CatalogError", "CosetLimitExceeded", "Error", "InvalidArgument", "OrderTooLarge",
    "OutsideHypothesis", "ParseError", "PreconditionError", "UndefinedSymbol",
    "analyze", "catalog", "classify", "is_prime", "legendre", "order", "predict_biquadratic",
    "predict_real", "quartic", "quartic_two", "rank_l", "render", "verify",
]


def analyze(text=None, *, catalog=None, params=(), max_cosets=DEFAULT_MAX_COSETS):
    """Report for a presentation string, or for a catalog entry by name."""
    if (text is None) == (catalog is None):
        raise TypeError("give either a presentation or catalog=")
    if catalog is not None:
        raw = _core._analyze_catalog(catalog, list(params), max_cosets)
    else:
        raw = _core._analyze(text, max_cosets)
    return json.loads(raw)


def predict_real(p1, p2, p3):
    return json.loads(_core._predict_real(p1, p2, p3))


def predict_biquadratic(p, n):
    return json.loads(_core._predict_biquadratic(p, n))


def verify(max_n=9, families=()):
    """List of {theorem, instance, pass[, detail]} over the catalog up to order 2^max_n."""
    return json.loads(_core._verify(max_n, list(families)))
