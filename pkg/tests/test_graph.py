"""Tests for pdag and dag structure."""

import random

import networkx as nx
import pytest

from engine.core.errors import (
    ConflictingOrientation,
    CycleDetected,
    GraphError,
    MissingEdge,
    NodeSetMismatch,
)
from engine.graph.base import Vee
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
from engine.oracle.enumerate import enumerate_dags

CHAIN = Dag(3, [(0, 1), (1, 2)])
COLLIDER = Dag(3, [(0, 1), (2, 1)])
FORK = Dag(3, [(1, 0), (1, 2)])


def test_graph_rejects_malformed_edges():
    """Test self-loops, duplicates and out-of-range nodes."""
    with pytest.raises(GraphError):
        Pdag(2, [(0, 0)])
    with pytest.raises(GraphError):
        Pdag(2, [(0, 1)], [(1, 0)])
    with pytest.raises(GraphError):
        Dag(2, [(0, 2)])


def test_cycle_detection():
    """Test that directed cycles are rejected at construction."""
    with pytest.raises(CycleDetected):
        Dag(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(CycleDetected):
        Pdag(3, [(0, 1), (1, 2), (2, 0)], [])


def test_acyclicity_matches_networkx():
    """Test cycle detection against networkx on random digraphs."""
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(2, 7)
        edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.4]
        edges = [(b, a) if rng.random() < 0.5 else (a, b) for a, b in edges]
        g = nx.DiGraph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        try:
            Dag(n, edges)
            built = True
        except CycleDetected:
            built = False
        assert built == nx.is_directed_acyclic_graph(g)


def test_topological_order_is_deterministic():
    """Test smallest-index-first Kahn order."""
    assert topological_order(Dag(3, [(2, 0), (1, 0)])) == [1, 2, 0]
    assert topological_order(CHAIN) == [0, 1, 2]
    assert topological_order(Dag(4)) == [0, 1, 2, 3]


def test_reachability():
    """Test descendants, ancestors and directed paths."""
    d = Dag(4, [(0, 1), (1, 2), (3, 2)])
    assert d.descendants(0) == 0b0111
    assert d.ancestors(0b0100) == 0b1111
    assert has_directed_path(d, 0, 2)
    assert not has_directed_path(d, 2, 0)
    assert has_directed_path(d, 3, 3)


def test_vee_structures():
    """Test that only unshielded colliders count."""
    assert vee_structures(COLLIDER) == {Vee(0, 1, 2)}
    assert vee_structures(CHAIN) == frozenset()
    shielded = Dag(3, [(0, 1), (2, 1), (0, 2)])
    assert vee_structures(shielded) == frozenset()
    assert Vee.of(2, 1, 0) == Vee(0, 1, 2)


def test_skeleton_forgets_orientation():
    """Test that skeletons are unordered pairs."""
    assert skeleton(CHAIN) == skeleton(FORK) == {(0, 1), (1, 2)}
    assert skeleton(Pdag(3, [(2, 0)], [(1, 2)])) == {(0, 2), (1, 2)}


def test_equivalence():
    """Test equivalence by skeleton and vee set."""
    assert is_equivalent(CHAIN, FORK)
    assert is_equivalent(CHAIN, Dag(3, [(2, 1), (1, 0)]))
    assert not is_equivalent(CHAIN, COLLIDER)
    assert equivalence_key(CHAIN) == equivalence_key(FORK)
    with pytest.raises(NodeSetMismatch):
        is_equivalent(CHAIN, Dag(4))


def test_equivalence_is_an_equivalence_relation():
    """Test reflexivity, symmetry and transitivity over every three-node dag."""
    dags = list(enumerate_dags(3))
    related = {(i, j) for i, d1 in enumerate(dags) for j, d2 in enumerate(dags) if is_equivalent(d1, d2)}
    for i in range(len(dags)):
        assert (i, i) in related
    for i, j in related:
        assert (j, i) in related
    for i, j in related:
        for k in range(len(dags)):
            if (j, k) in related:
                assert (i, k) in related
    assert len({equivalence_key(d) for d in dags}) == 11


def test_orient():
    """Test orientation of an undirected edge."""
    g = Pdag(3, [(0, 1)], [(1, 2)])
    oriented = orient(g, 1, 2)
    assert oriented.is_directed(1, 2)
    assert g.is_undirected(1, 2)
    assert orient(oriented, 1, 2) is oriented


def test_orient_errors():
    """Test conflicting, missing and cyclic orientations."""
    g = Pdag(3, [(0, 1), (1, 2)], [(0, 2)])
    with pytest.raises(ConflictingOrientation):
        g.orient(1, 0)
    with pytest.raises(MissingEdge):
        Pdag(3, [], [(0, 1)]).orient(0, 2)
    with pytest.raises(MissingEdge):
        orient(Pdag(3, [], [(0, 1)]), 0, 5)
    with pytest.raises(MissingEdge):
        Pdag(3, [], [(0, 1)]).orient(-1, 0)
    with pytest.raises(CycleDetected):
        g.orient(2, 0)


def test_pattern():
    """Test that patterns direct exactly the vee edges."""
    collider = pattern(COLLIDER)
    assert sorted(collider.directed_edges()) == [(0, 1), (2, 1)]
    assert not collider.has_undirected()

    chain = pattern(CHAIN)
    assert chain.directed_edges() == []
    assert chain.undirected_edges() == [(0, 1), (1, 2)]
    assert pattern(CHAIN) == pattern(FORK)


def test_to_dag_requires_full_orientation():
    """Test conversion of a pdag to a dag."""
    assert Pdag(2, [(0, 1)]).to_dag() == Dag(2, [(0, 1)])
    with pytest.raises(GraphError):
        Pdag(2, [], [(0, 1)]).to_dag()


def test_equality_is_type_strict():
    """Test that a dag never equals a pdag with the same edges."""
    assert Pdag(2, [(0, 1)]) != Dag(2, [(0, 1)])
    assert Dag(2, [(0, 1)]) == Dag.from_parent_bits([0, 1])
    assert hash(Dag(2, [(0, 1)])) == hash(Dag.from_parent_bits([0, 1]))
