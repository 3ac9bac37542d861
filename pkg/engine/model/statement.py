"""Conditional independence statements I(A,B|C)."""

from dataclasses import dataclass
from typing import Optional, Tuple

from engine.core.errors import EmptySide, OverlappingSets
from engine.model.universe import Universe, VarSet


@dataclass(frozen=True)
class Statement:
    """
    I(lhs, rhs | cond): lhs is independent of rhs given cond.

    Instances built through canonicalize() are in symmetry normal form,
    lhs ordered before rhs by VarSet.sort_key().
    """
    lhs: VarSet
    rhs: VarSet
    cond: VarSet = VarSet()

    @classmethod
    def of(cls, lhs, rhs, cond=()) -> "Statement":
        """Build a canonical statement from index iterables."""
        return canonicalize(cls(VarSet.of(lhs), VarSet.of(rhs), VarSet.of(cond)))

    @property
    def bits(self) -> Tuple[int, int, int]:
        return self.lhs.bits, self.rhs.bits, self.cond.bits

    @property
    def support(self) -> VarSet:
        return self.lhs | self.rhs | self.cond

    def mirrored(self) -> "Statement":
        return Statement(self.rhs, self.lhs, self.cond)

    def sort_key(self) -> tuple:
        return (self.lhs.sort_key(), self.rhs.sort_key(), len(self.cond), self.cond.sort_key())

    def separates(self, a: int, b: int) -> bool:
        """True if a is on one side and b on the other."""
        return (a in self.lhs and b in self.rhs) or (b in self.lhs and a in self.rhs)

    def format(self, universe: Optional[Universe] = None) -> str:
        def side(vs: VarSet) -> str:
            if universe is None:
                return ",".join(str(i) for i in vs)
            return ",".join(universe.format(vs))

        cond = side(self.cond)
        return f"I({side(self.lhs)} ; {side(self.rhs)} | {cond})" if cond else \
            f"I({side(self.lhs)} ; {side(self.rhs)} |)"

    def __str__(self) -> str:
        return self.format()


def validate(raw: Statement, universe: Optional[Universe] = None) -> None:
    """
    Check disjointness, nonempty sides and universe membership.

    Raises:
        EmptySide: If lhs or rhs is empty
        OverlappingSets: If any two of lhs, rhs, cond intersect
        UnknownVariable: If a set reaches outside the universe
    """
    if not raw.lhs or not raw.rhs:
        raise EmptySide(f"Statement {raw} has an empty side")
    if not raw.lhs.isdisjoint(raw.rhs) or not raw.lhs.isdisjoint(raw.cond) \
            or not raw.rhs.isdisjoint(raw.cond):
        raise OverlappingSets(f"Statement {raw} has overlapping sets")
    if universe is not None:
        universe.check(raw.support)


def canonicalize(raw: Statement, universe: Optional[Universe] = None) -> Statement:
    """Return the symmetry-normal representative of raw after validating it."""
    validate(raw, universe)
    if raw.rhs.sort_key() < raw.lhs.sort_key():
        return raw.mirrored()
    return raw


def from_bits(lhs: int, rhs: int, cond: int) -> Statement:
    """Canonical statement from raw bit vectors, without validation."""
    a, b = VarSet(lhs), VarSet(rhs)
    if b.sort_key() < a.sort_key():
        a, b = b, a
    return Statement(a, b, VarSet(cond))
