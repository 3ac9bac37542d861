"""Directed Acyclic Graph definition and ordering."""

import heapq
from typing import Iterable, List

from engine.core.errors import CycleDetected
from engine.graph.base import Edge, MixedGraph, iter_bits


class Dag(MixedGraph):
    """
    Fully directed acyclic graph over nodes 0..n-1.

    At most one edge joins any two nodes; construction rejects cycles.
    """

    __slots__ = ()

    def __init__(self, n: int, directed: Iterable[Edge] = ()):
        super().__init__(n, directed, ())

    @classmethod
    def from_parent_bits(cls, parents: Iterable[int]) -> "Dag":
        """Build from one parent bit vector per node."""
        parent_bits = list(parents)
        edges = [(p, v) for v, mask in enumerate(parent_bits) for p in iter_bits(mask)]
        return cls(len(parent_bits), edges)

    def topological_sort(self) -> List[int]:
        """
        Return nodes in topological order.

        Among ready nodes the smallest index goes first, so the order is
        deterministic.

        Raises:
            CycleDetected: If DAG has cycles
        """
        # Kahn's algorithm
        in_degree = [bin(self._parents[v]).count("1") for v in range(self.n)]
        ready = [v for v in range(self.n) if in_degree[v] == 0]
        heapq.heapify(ready)
        result: List[int] = []

        while ready:
            v = heapq.heappop(ready)
            result.append(v)
            for w in iter_bits(self._children[v]):
                in_degree[w] -= 1
                if in_degree[w] == 0:
                    heapq.heappush(ready, w)

        if len(result) != self.n:
            raise CycleDetected("Cycle detected during topological sort")

        return result
