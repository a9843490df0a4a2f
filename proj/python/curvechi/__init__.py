"""Exact intersection graphs and coloring reductions for curve families."""

import json

from . import _curvechi
from ._curvechi import CurvechiError, burling_sizes, clique_number, chromatic_number, is_proper, run_cli

__all__ = [
    "CurvechiError",
    "burling_sizes",
    "chromatic_number",
    "clique_number",
    "color_2t",
    "color_cross_component",
    "generate_burling",
    "intersection_graph",
    "is_proper",
    "mcguinness",
    "rewire",
    "run_cli",
    "split_2t",
    "validate_family",
    "validate_lr",
    "verify_burling",
    "xi",
]


def _text(family):
    return family if isinstance(family, str) else json.dumps(family)


def generate_burling(k, allow_large=False):
    return json.loads(_curvechi.generate_burling(k, allow_large))


def verify_burling(family):
    return json.loads(_curvechi.verify_burling(_text(family)))


def validate_family(family):
    return _curvechi.validate_family(_text(family))


def validate_lr(family):
    return json.loads(_curvechi.validate_lr(_text(family)))


def intersection_graph(family):
    """Returns (vertex count, edge list) with vertices in file order."""
    return _curvechi.intersection_graph(_text(family))


def xi(family):
    return _curvechi.xi(_text(family))


def color_cross_component(family):
    return json.loads(_curvechi.color_cross_component(_text(family)))


def rewire(family):
    return json.loads(_curvechi.rewire(_text(family)))


def split_2t(family):
    return json.loads(_curvechi.split_2t(_text(family)))


def color_2t(family):
    return json.loads(_curvechi.color_2t(_text(family)))


def mcguinness(n, edges, order, alpha, beta):
    return json.loads(_curvechi.mcguinness(n, edges, order, alpha, beta))
