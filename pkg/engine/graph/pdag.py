"""Partially directed acyclic graphs."""

from engine.core.errors import ConflictingOrientation, CycleDetected, GraphError, MissingEdge
from engine.graph.base import MixedGraph
from engine.graph.dag import Dag


class Pdag(MixedGraph):
    """
    Graph with directed and undirected edges and no directed cycle.

    The acyclicity of the directed part is checked on construction.
    """

    __slots__ = ()

    def orient(self, tail: int, head: int) -> "Pdag":
        """
        New pdag with tail - head directed as tail -> head.

        Raises:
            ConflictingOrientation: If head -> tail is already directed
            MissingEdge: If tail and head are not adjacent nodes of the graph
            CycleDetected: If the orientation closes a directed cycle
        """
        if not (0 <= tail < self.n and 0 <= head < self.n):
            raise MissingEdge(f"Edge ({tail}, {head}) outside node range 0..{self.n - 1}")
        if self.is_directed(tail, head):
            return self
        if self.is_directed(head, tail):
            raise ConflictingOrientation(f"Edge {head}->{tail} already directed")
        if not self.is_undirected(tail, head):
            raise MissingEdge(f"No edge between {tail} and {head}")
        if self.has_directed_path(head, tail):
            raise CycleDetected(f"Orienting {tail}->{head} closes a directed cycle")
        oriented = self.copy()
        oriented._set_directed(tail, head)
        return oriented

    def to_dag(self) -> Dag:
        """The same graph as a Dag; every edge must be directed."""
        if self.has_undirected():
            raise GraphError("Pdag still has undirected edges")
        return Dag(self.n, self.directed_edges())
