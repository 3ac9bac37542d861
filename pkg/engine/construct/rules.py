"""
Orientation rules that close a pdag.

Each rule scans the graph and returns the orientations (tail, head) it
forces. Every returned pair is adjacent in the graph; the caller applies
them and checks for cycles and new vee structures.
"""

from typing import Callable, List, Tuple

from engine.graph.base import MixedGraph, iter_bits

Orientation = Tuple[int, int]
Rule = Callable[[MixedGraph], List[Orientation]]


def _nonadjacent_pair(g: MixedGraph, candidates: int) -> bool:
    """Does candidates hold two nodes that are not adjacent in g?"""
    nodes = list(iter_bits(candidates))
    for i, a in enumerate(nodes):
        rest = 0
        for c in nodes[i + 1:]:
            rest |= 1 << c
        if rest & ~g.neighbors(a):
            return True
    return False


def rule1(g: MixedGraph) -> List[Orientation]:
    """a -> b - c with a, c nonadjacent: direct b -> c."""
    out = []
    for b in range(g.n):
        parents = g.parents(b)
        if not parents:
            continue
        for c in iter_bits(g.undirected_neighbors(b)):
            if parents & ~g.neighbors(c):
                out.append((b, c))
    return out


def rule2(g: MixedGraph) -> List[Orientation]:
    """a -> b -> c with a - c: direct a -> c."""
    out = []
    for a in range(g.n):
        for c in iter_bits(g.undirected_neighbors(a)):
            if g.children(a) & g.parents(c):
                out.append((a, c))
    return out


def rule3(g: MixedGraph) -> List[Orientation]:
    """
    b - d with b - a -> d and b - c -> d, a and c nonadjacent: direct b -> d.
    """
    out = []
    for b in range(g.n):
        for d in iter_bits(g.undirected_neighbors(b)):
            candidates = g.undirected_neighbors(b) & g.parents(d)
            if _nonadjacent_pair(g, candidates):
                out.append((b, d))
    return out


def rule4(g: MixedGraph) -> List[Orientation]:
    """
    d -> a, a - b (or a -> b), b - c, c - d with b, d nonadjacent: direct a -> b and c -> b.

    a -> b is accepted already directed because rule 1 orients it first on
    any d -> a - b with b, d nonadjacent.
    """
    out = []
    for a in range(g.n):
        for d in iter_bits(g.parents(a)):
            for b in iter_bits(g.undirected_neighbors(a) | g.children(a)):
                if g.adjacent(b, d):
                    continue
                for c in iter_bits(g.undirected_neighbors(b) & g.undirected_neighbors(d)):
                    if c == a:
                        continue
                    if g.is_undirected(a, b):
                        out.append((a, b))
                    out.append((c, b))
    return out


RULES: Tuple[Tuple[int, Rule], ...] = ((1, rule1), (2, rule2), (3, rule3), (4, rule4))
