"""Exact bounds on gonality and arithmetic degree of irrationality of curves on surfaces."""

import json

from . import _core
from ._core import InputError, InvariantError, Unsupported, run_cli, selftest

__all__ = [
    "InputError",
    "InvariantError",
    "Unsupported",
    "certify",
    "destabilizers",
    "exceptional_set",
    "run_cli",
    "selftest",
]


def _flag(value):
    if value is None:
        return None
    return "yes" if value else "no"


def certify(model, cls=None, rational_point=None, bielliptic=None):
    """Certificate dict with "gon", "airr", "exact", "provenance", ... for a curve on a built-in model."""
    return json.loads(_core.certify_json(model, cls, _flag(rational_point), _flag(bielliptic)))


def exceptional_set(gram, rays, p):
    """Classes H in cone(rays) with 9 H.P > H.H, as the JSON report dict."""
    return json.loads(_core.exc_json(gram, rays, p))


def destabilizers(model, curve, e):
    """Destabilizer candidates and verdict for a degree-e pencil on the curve."""
    return json.loads(_core.destab_json(model, curve, e))
