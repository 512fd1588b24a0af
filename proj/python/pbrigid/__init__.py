"""Rigidity of Pham-Brieskorn rings: classifier, witnesses, and exact surface geometry.

Thin pythonic layer over the C++ core. Exact rationals arrive as strings
("2/15"); arbitrary-precision integers arrive as python ints.
"""

import json as _json

from ._core import (  # noqa: F401
    __version__,
    amplitude,
    cotype,
    diagonal_curve_singular,
    enumerate_gamma_minus,
    enumerate_gamma_plus,
    g_i,
    gamma_class,
    graph_dot,
    lcm,
    leq_order,
    normalize,
    propagate_rigidity,
    resolution_graph_dot,
    weights,
    well_formed,
)
from . import _core


def classify(exponents):
    """Full verdict for a tuple: status, proof trace, and witness when not rigid."""
    return _json.loads(_core.classify_json(exponents))


def witness_certificate(exponents):
    """Re-runs the well-definedness and nilpotency checks on a not-rigid witness."""
    return _json.loads(_core.witness_certificate_json(exponents))


def surface_report(exponents):
    return _json.loads(_core.surface_report_json(exponents))


def resolution_graph(exponents):
    return _json.loads(_core.resolution_graph_json(exponents))


def discrepancy(order):
    return _json.loads(_core.discrepancy_json(order))


def contract(graph, name):
    """One blow-down; takes and returns graphs as dicts in the documented schema."""
    out = _json.loads(_core.contract_json(_json.dumps(graph), name))
    return out["graph"], out["record"]


def contract_all(graph):
    out = _json.loads(_core.contract_all_json(_json.dumps(graph)))
    return out["final"], out["trace"]


def verify_paper():
    return _json.loads(_core.verify_paper_json())
