"""Brute-force extensions and topological orders of small graphs."""

from itertools import product
from typing import Iterator, List, Optional, Tuple

from engine.core.errors import CycleDetected, TooLarge
from engine.graph.base import iter_bits
from engine.graph.dag import Dag
from engine.graph.pdag import Pdag

# undirected edges tried at most; each doubles the search
EXTENSION_EDGE_CAP = 16


def enumerate_extensions(g: Pdag, cap: Optional[int] = None) -> List[Dag]:
    """
    Every dag with g's skeleton, g's directed edges and g's vee set.

    Raises:
        TooLarge: If g has more undirected edges than cap
    """
    cap = EXTENSION_EDGE_CAP if cap is None else cap
    free = g.undirected_edges()
    if len(free) > cap:
        raise TooLarge(len(free), cap, "undirected edges")
    fixed = g.directed_edges()
    vees = g.vee_structures()
    found = []
    for flips in product((False, True), repeat=len(free)):
        edges = fixed + [(b, a) if flip else (a, b) for (a, b), flip in zip(free, flips)]
        try:
            d = Dag(g.n, edges)
        except CycleDetected:
            continue
        if d.vee_structures() == vees:
            found.append(d)
    return found


def all_topological_orders(d: Dag) -> Iterator[Tuple[int, ...]]:
    """Every linear extension of d, in lexicographic order."""
    remaining = [bin(d.parents(v)).count("1") for v in range(d.n)]
    order: List[int] = []
    placed = 0

    def walk() -> Iterator[Tuple[int, ...]]:
        nonlocal placed
        if len(order) == d.n:
            yield tuple(order)
            return
        for v in range(d.n):
            if placed >> v & 1 or remaining[v]:
                continue
            order.append(v)
            placed |= 1 << v
            for w in iter_bits(d.children(v)):
                remaining[w] -= 1
            yield from walk()
            for w in iter_bits(d.children(v)):
                remaining[w] += 1
            placed &= ~(1 << v)
            order.pop()

    return walk()
