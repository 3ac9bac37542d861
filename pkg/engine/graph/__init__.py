"""Pdags, dags and their structural primitives."""

from engine.graph.base import Edge, MixedGraph, Vee
from engine.graph.dag import Dag
from engine.graph.ops import (
    equivalence_key,
    has_directed_path,
    is_equivalent,
    orient,
    pattern,
    skeleton,
    topological_order,
    vee_structures,
)
from engine.graph.pdag import Pdag

__all__ = [
    "Dag",
    "Edge",
    "MixedGraph",
    "Pdag",
    "Vee",
    "equivalence_key",
    "has_directed_path",
    "is_equivalent",
    "orient",
    "pattern",
    "skeleton",
    "topological_order",
    "vee_structures",
]
