"""Mixed directed/undirected graph over dense node indices."""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Tuple

from engine.core.errors import CycleDetected, GraphError

Edge = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Vee:
    """left -> center <- right with left and right nonadjacent; left < right."""
    left: int
    center: int
    right: int

    @classmethod
    def of(cls, a: int, b: int, c: int) -> "Vee":
        return cls(min(a, c), b, max(a, c))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class MixedGraph:
    """
    Graph with directed and undirected edges, stored as per-node bit vectors.

    parents[v] has bit u set iff u -> v; undirected[v] has bit u set iff u - v.
    Instances are treated as immutable once built; phases that mutate a
    graph work on a private copy().
    """

    __slots__ = ("n", "_parents", "_children", "_undirected")

    def __init__(self, n: int, directed: Iterable[Edge] = (), undirected: Iterable[Edge] = ()):
        if n < 0:
            raise GraphError(f"Node count must be nonnegative, got {n}")
        self.n = n
        self._parents: List[int] = [0] * n
        self._children: List[int] = [0] * n
        self._undirected: List[int] = [0] * n
        for tail, head in directed:
            self._check_new_edge(tail, head)
            self._parents[head] |= 1 << tail
            self._children[tail] |= 1 << head
        for a, b in undirected:
            self._check_new_edge(a, b)
            self._undirected[a] |= 1 << b
            self._undirected[b] |= 1 << a
        cycle = self._find_cycle()
        if cycle is not None:
            raise CycleDetected(f"Directed cycle through node {cycle}")

    def _check_new_edge(self, a: int, b: int) -> None:
        if not (0 <= a < self.n and 0 <= b < self.n):
            raise GraphError(f"Edge ({a}, {b}) outside node range 0..{self.n - 1}")
        if a == b:
            raise GraphError(f"Self-loop on node {a}")
        if self.adjacent(a, b):
            raise GraphError(f"Nodes {a} and {b} already joined by an edge")

    def _find_cycle(self):
        """Node on a directed cycle, or None (DFS over directed edges)."""
        white, gray, black = 0, 1, 2
        color = [white] * self.n

        def visit(v: int):
            color[v] = gray
            for w in iter_bits(self._children[v]):
                if color[w] == gray:
                    return w
                if color[w] == white:
                    found = visit(w)
                    if found is not None:
                        return found
            color[v] = black
            return None

        for v in range(self.n):
            if color[v] == white:
                found = visit(v)
                if found is not None:
                    return found
        return None

    def copy(self):
        clone = object.__new__(type(self))
        clone.n = self.n
        clone._parents = list(self._parents)
        clone._children = list(self._children)
        clone._undirected = list(self._undirected)
        return clone

    # adjacency queries

    def parents(self, v: int) -> int:
        return self._parents[v]

    def children(self, v: int) -> int:
        return self._children[v]

    def undirected_neighbors(self, v: int) -> int:
        return self._undirected[v]

    def neighbors(self, v: int) -> int:
        return self._parents[v] | self._children[v] | self._undirected[v]

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.neighbors(a) >> b & 1)

    def is_directed(self, tail: int, head: int) -> bool:
        return bool(self._children[tail] >> head & 1)

    def is_undirected(self, a: int, b: int) -> bool:
        return bool(self._undirected[a] >> b & 1)

    def directed_edges(self) -> List[Edge]:
        return [(t, h) for t in range(self.n) for h in iter_bits(self._children[t])]

    def undirected_edges(self) -> List[Edge]:
        return [(a, b) for a in range(self.n) for b in iter_bits(self._undirected[a]) if a < b]

    def has_undirected(self) -> bool:
        return any(self._undirected)

    def skeleton(self) -> FrozenSet[Edge]:
        return frozenset((a, b) for a in range(self.n) for b in iter_bits(self.neighbors(a)) if a < b)

    def vee_structures(self) -> FrozenSet[Vee]:
        vees = set()
        for b in range(self.n):
            pa = list(iter_bits(self._parents[b]))
            for i, a in enumerate(pa):
                for c in pa[i + 1:]:
                    if not self.adjacent(a, c):
                        vees.add(Vee(a, b, c))
        return frozenset(vees)

    def descendants(self, v: int) -> int:
        """Bit vector of nodes reachable from v by directed edges, v included."""
        seen = 1 << v
        frontier = self._children[v]
        while frontier:
            seen |= frontier
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= self._children[w]
            frontier = nxt & ~seen
        return seen

    def ancestors(self, mask: int) -> int:
        """Bit vector of nodes with a directed path into mask, mask included."""
        seen = mask
        frontier = mask
        while frontier:
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= self._parents[w]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def has_directed_path(self, frm: int, to: int) -> bool:
        return bool(self.descendants(frm) >> to & 1)

    def _set_directed(self, tail: int, head: int) -> None:
        """Turn the undirected edge tail - head into tail -> head in place."""
        self._undirected[tail] &= ~(1 << head)
        self._undirected[head] &= ~(1 << tail)
        self._parents[head] |= 1 << tail
        self._children[tail] |= 1 << head

    def __eq__(self, other: object) -> bool:
        return (
            type(other) is type(self)
            and self.n == other.n
            and self._parents == other._parents
            and self._undirected == other._undirected
        )

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._parents), tuple(self._undirected)))

    def __repr__(self) -> str:
        parts = [f"{t}->{h}" for t, h in self.directed_edges()]
        parts += [f"{a}-{b}" for a, b in self.undirected_edges()]
        return f"{type(self).__name__}(n={self.n}, [{', '.join(parts)}])"
