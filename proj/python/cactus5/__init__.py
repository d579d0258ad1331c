"""Degree-5 plane cactus toolkit.

Enumeration of the two cactus families, the transformation ribbon graph,
the transposition-tuple cross-check and numeric classification of explicit
quintics. Compound results come from the C++ core as JSON and are returned
here as plain dicts.
"""

import json as _json

from cactus5._core import (
    first_count,
    second_count,
    t1_index,
    t2_index,
    graph_summary,
    render,
)
from cactus5 import _core

__all__ = [
    "first_count",
    "second_count",
    "t1_index",
    "t2_index",
    "graph_summary",
    "render",
    "atlas",
    "graph",
    "classify",
    "oracle",
    "sample",
]


def atlas(family, degree=5, equivalence="rotated"):
    """Full class listing of one family as a dict."""
    return _json.loads(_core.atlas_json(family, degree, equivalence))


def graph():
    """The transformation ribbon graph with rotations, faces and genus."""
    return _json.loads(_core.graph_json())


def classify(coeffs, steps=0):
    """Classify a quintic given by six complex coefficients (highest first)."""
    return _json.loads(_core.classify_json(list(coeffs), steps))


def oracle(n=5):
    """Transposition-tuple census cross-checked against tree enumeration."""
    return _json.loads(_core.oracle_json(n))


def sample(count, seed=42, steps=0):
    """Classify `count` seeded random quintics; deterministic for a seed."""
    return _json.loads(_core.sample_json(count, seed, steps))
