"""Exact spectral pictures of operator expressions, B-type spectra, theorem
checks and Cline's formula for the Drazin inverse."""

import json as _json

from ._opspec import (
    Expr,
    OpspecError,
    Region,
    expr_from_json,
    instances,
    parse,
    render_svg,
    spectra,
    spectrum,
    spectrum_names,
    theorem_ids,
)
from . import _opspec

__all__ = [
    "Expr", "OpspecError", "Region", "audit", "check", "cline", "drazin", "expr_from_json", "instances",
    "parse", "picture", "render_svg", "spectra", "spectrum", "spectrum_names", "sweep", "theorem_ids",
    "transfer",
]


def picture(expr):
    """Spectral picture as decoded JSON."""
    return _json.loads(_opspec.picture_json(expr))


def audit(expr):
    return _json.loads(_opspec.audit_json(expr))


def check(theorem, expr):
    return _json.loads(_opspec.check_json(theorem, expr))


def sweep(ids=None):
    return _json.loads(_opspec.sweep_json(list(ids) if ids is not None else theorem_ids()))


def transfer(a, b, k):
    return _json.loads(_opspec.transfer_json(a, b, k))


def drazin(matrix):
    """Drazin certificate of a matrix given as the JSON object (dict) or its text."""
    text = matrix if isinstance(matrix, str) else _json.dumps(matrix)
    return _json.loads(_opspec.drazin_json(text))


def cline(k, family, seed):
    return _json.loads(_opspec.cline_json(k, family, seed))
