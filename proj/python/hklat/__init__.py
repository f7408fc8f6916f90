"""Exact lattice arithmetic for rational Lagrangian fibrations on Hilbert
schemes of points on K3 surfaces.

Everything is computed in exact integer/rational arithmetic.  Report
functions return plain dicts parsed from the canonical JSON documents that
the ``hklat`` command-line tool prints; big integers appear as decimal
strings there, rationals as ``"p/q"``.
"""

import json as _json

from ._core import (  # noqa: F401
    Lattice,
    NonexistenceError,
    PreconditionError,
    bn_number,
    fibration_base_dimension,
    fibration_class,
    from_json,
    fujiki_constant,
    isotropic_chi,
    isotropic_witness,
    moduli_k3_degree,
    primitive_isotropic_classes,
    section_count,
    squarefree_part,
)
from . import _core as _c

__version__ = "0.1.0"

__all__ = [
    "Lattice",
    "NonexistenceError",
    "PreconditionError",
    "bn_number",
    "brill_noether",
    "fibration_base_dimension",
    "fibration_class",
    "from_json",
    "fujiki_constant",
    "isotropic_chi",
    "isotropic_report",
    "isotropic_witness",
    "moduli_k3_degree",
    "primitive_isotropic_classes",
    "reflection_report",
    "replay_report",
    "scenario",
    "section_count",
    "selftest",
    "squarefree_part",
    "twisted_report",
]


def scenario(d, m=0, degree=None, with_polar2=False, b_denominator=0,
             b_direction="transcendental"):
    """Full numeric replay for one (d, m) or (d, degree); returns a dict."""
    return _json.loads(
        _c._scenario_json(d, m, degree, with_polar2, b_denominator,
                          b_direction))


def isotropic_report(degree, d):
    return _json.loads(_c._isotropic_json(degree, d))


def reflection_report(d, m):
    return _json.loads(_c._polar2_json(d, m))


def brill_noether(d, m):
    return _json.loads(_c._bn_json(d, m))


def replay_report(d, m):
    return _json.loads(_c._fm_json(d, m))


def twisted_report(denominator, direction="transcendental", pic_square=2):
    return _json.loads(_c._twisted_json(denominator, direction, pic_square))


def selftest(grid_max=8, degree_max=200, coeff_bound=100, samples=300,
             seed=20260826, inject_fault=False):
    return _json.loads(
        _c._selftest_json(grid_max, degree_max, coeff_bound, samples, seed,
                          inject_fault))
