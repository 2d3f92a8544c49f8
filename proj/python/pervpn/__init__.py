"""Python access to the pervpn verification library."""

import json

from . import _core
from ._core import algebra_dim, cartan_matrix, census, ext_dims, suite_names, twist_is_inverse_serre

__all__ = [
    "algebra_dim",
    "cartan_matrix",
    "census",
    "ext_dims",
    "module",
    "resolution",
    "run",
    "suite_names",
    "twist_is_inverse_serre",
]


def run(n, suites=None, seed=1, prime=0, allow_inconclusive=False, workers=0):
    """Run verification suites and return the JSON report as a dict."""
    return json.loads(_core.run_json(n, list(suites or []), seed, prime, allow_inconclusive, workers))


def resolution(n, tag):
    """Minimal projective resolution of a named object, e.g. "IC1" or "Z+(2,0)"."""
    return json.loads(_core.resolution_json(n, tag))


def module(n, tag):
    return json.loads(_core.module_json(n, tag))
