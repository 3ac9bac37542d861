"""d-separation queries."""

from dataclasses import dataclass
from typing import Iterable

from engine.core.errors import InvalidQuery
from engine.graph.base import MixedGraph
from engine.model.statement import Statement
from engine.model.universe import VarSet


@dataclass(frozen=True)
class DsepQuery:
    """Is x d-separated from y given z?"""
    x: VarSet
    y: VarSet
    z: VarSet = VarSet()

    @classmethod
    def of(cls, x: Iterable[int], y: Iterable[int], z: Iterable[int] = ()) -> "DsepQuery":
        return cls(VarSet.of(x), VarSet.of(y), VarSet.of(z))

    @classmethod
    def from_statement(cls, s: Statement) -> "DsepQuery":
        return cls(s.lhs, s.rhs, s.cond)

    def swapped(self) -> "DsepQuery":
        return DsepQuery(self.y, self.x, self.z)

    def validate(self, g: MixedGraph) -> None:
        """
        Raises:
            InvalidQuery: If x or y is empty, the sets overlap, or a node is outside g
        """
        if not self.x or not self.y:
            raise InvalidQuery("d-separation query needs nonempty x and y")
        if not self.x.isdisjoint(self.y) or not self.x.isdisjoint(self.z) \
                or not self.y.isdisjoint(self.z):
            raise InvalidQuery("d-separation query sets must be pairwise disjoint")
        nodes = (1 << g.n) - 1
        if (self.x | self.y | self.z).bits & ~nodes:
            raise InvalidQuery(f"d-separation query reaches outside nodes 0..{g.n - 1}")
