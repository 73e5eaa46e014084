"""Labeled triangle-free and bipartite realizations of degree sequences."""

from ._core import (
    DegreeSequence,
    Enumerator,
    Mode,
    Stage1Outcome,
    Stage1Verdict,
    complement,
    count,
    enumerate,
    is_bipartite,
    is_graphical,
    is_triangle_free,
    labeled_multiplier,
    murphy_bound,
    parse_sequence,
    residue,
    stage1_triangle_free,
    sweep,
    to_graph6,
)

__all__ = [
    "DegreeSequence",
    "Enumerator",
    "Mode",
    "Stage1Outcome",
    "Stage1Verdict",
    "complement",
    "count",
    "enumerate",
    "is_bipartite",
    "is_graphical",
    "is_triangle_free",
    "labeled_multiplier",
    "murphy_bound",
    "parse_sequence",
    "residue",
    "stage1_triangle_free",
    "sweep",
    "to_graph6",
]
