"""Skeleton, vee-structure, path and equivalence primitives."""

from typing import FrozenSet, List, Tuple

from engine.core.errors import NodeSetMismatch
from engine.graph.base import Edge, MixedGraph, Vee
from engine.graph.dag import Dag
from engine.graph.pdag import Pdag


def skeleton(g: MixedGraph) -> FrozenSet[Edge]:
    """Adjacent pairs (low, high), orientation forgotten."""
    return g.skeleton()


def vee_structures(g: MixedGraph) -> FrozenSet[Vee]:
    return g.vee_structures()


def equivalence_key(d: MixedGraph) -> Tuple[int, FrozenSet[Edge], FrozenSet[Vee]]:
    """Node count, skeleton and vee set: equal keys mean Markov equivalent dags."""
    return d.n, d.skeleton(), d.vee_structures()


def is_equivalent(d1: Dag, d2: Dag) -> bool:
    """
    Same skeleton and same vee structures.

    Raises:
        NodeSetMismatch: If the dags have different node counts
    """
    if d1.n != d2.n:
        raise NodeSetMismatch(f"Node counts differ: {d1.n} vs {d2.n}")
    return equivalence_key(d1) == equivalence_key(d2)


def has_directed_path(g: MixedGraph, frm: int, to: int) -> bool:
    """Reachability over directed edges only; every node reaches itself."""
    return g.has_directed_path(frm, to)


def topological_order(d: Dag) -> List[int]:
    return d.topological_sort()


def orient(g: Pdag, tail: int, head: int) -> Pdag:
    return g.orient(tail, head)


def pattern(d: Dag) -> Pdag:
    """Skeleton of d with exactly the edges of its vee structures directed."""
    directed = set()
    for v in d.vee_structures():
        directed.add((v.left, v.center))
        directed.add((v.right, v.center))
    undirected = [e for e in sorted(d.skeleton()) if e not in directed and e[::-1] not in directed]
    return Pdag(d.n, sorted(directed), undirected)
