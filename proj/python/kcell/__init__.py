"""Exact psi-class intersection numbers from cells of metric ribbon graphs.

Graphs are plain dicts in the same JSON shape the command-line tool reads:
{"half_edges": 6, "vertices": [{"cycles": [[0, 2, 4]], "defect": 0}, ...],
 "face_labels": {"0": 1}}. Rationals come back as fractions.Fraction.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from . import _kcell
from ._kcell import KcellError

__all__ = [
    "KcellError",
    "Intersection",
    "intersection_number",
    "enumerate_trivalent",
    "enumerate_cells",
    "inspect",
    "contract",
    "is_contractible",
    "canonical_key",
    "cell",
    "fiber_integral",
    "full_map",
    "default_perimeters",
    "random_generic_perimeters",
    "suite_names",
    "run_suite",
]


def _q(text):
    return Fraction(text)


def _qs(values):
    return [_q(v) for v in values]


def _text(values):
    return [f"{Fraction(v).numerator}/{Fraction(v).denominator}" for v in values]


def _graph(g):
    return g if isinstance(g, str) else json.dumps(g)


@dataclass
class Intersection:
    value: Fraction
    perimeters: list
    ledger: list


def intersection_number(genus, d, perimeters=None, jobs=1):
    """<tau_d1 ... tau_dn>_g, computed at the given (or default) perimeters."""
    raw = json.loads(_kcell.intersection_number(genus, list(d), _text(perimeters or []), jobs))
    return Intersection(_q(raw["value"]), _qs(raw["perimeters"]), raw["ledger"])


def enumerate_trivalent(genus, faces):
    return json.loads(_kcell.enumerate_trivalent(genus, faces))


def enumerate_cells(genus, faces):
    return json.loads(_kcell.enumerate_cells(genus, faces))


def inspect(graph):
    return json.loads(_kcell.inspect(_graph(graph)))


def contract(graph, edges):
    return json.loads(_kcell.contract(_graph(graph), list(edges)))


def is_contractible(graph, edges):
    return _kcell.is_contractible(_graph(graph), list(edges))


def canonical_key(graph):
    return _kcell.canonical_key(_graph(graph))


def cell(graph, perimeters):
    return json.loads(_kcell.cell(_graph(graph), _text(perimeters)))


def fiber_integral(graph, face, lengths):
    return _q(json.loads(_kcell.fiber_integral(_graph(graph), face, _text(lengths))))


def full_map(points):
    """Projective images F_i for a list like ["0", "1", "inf", "2+i"]."""
    text = points if isinstance(points, str) else ",".join(points)
    return json.loads(_kcell.full_map(text))


def default_perimeters(faces):
    return _qs(json.loads(_kcell.default_perimeters(faces)))


def random_generic_perimeters(faces, seed):
    return _qs(json.loads(_kcell.random_generic_perimeters(faces, seed)))


def suite_names():
    return _kcell.suite_names()


def run_suite(name, seed=1, scale=1.0):
    return json.loads(_kcell.run_suite(name, seed, scale))
