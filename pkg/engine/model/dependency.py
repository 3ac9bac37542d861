"""Dependency models: explicit statement lists or a basis under semigraphoid closure."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Tuple

from engine.core.config import DEFAULT_CONFIG
from engine.core.errors import InputError, UniverseTooLarge
from engine.model.closure import Triple, semigraphoid_fixpoint
from engine.model.statement import Statement, canonicalize, from_bits
from engine.model.universe import Universe, VarSet

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class Origin(str, Enum):
    EXPLICIT = "explicit"
    CLOSED_BASIS = "closed-basis"


@dataclass(frozen=True)
class DependencyModel:
    """
    A queryable collection of canonical statements over a universe.

    statements is the materialized model, sorted canonically. For a
    closed-basis model it is the semigraphoid fixpoint of basis.
    """
    universe: Universe
    statements: Tuple[Statement, ...]
    origin: Origin = Origin.EXPLICIT
    basis: Tuple[Statement, ...] = ()
    _keys: FrozenSet[Triple] = field(default=frozenset(), repr=False, compare=False)

    @classmethod
    def explicit(cls, universe: Universe, statements: Iterable[Statement]) -> "DependencyModel":
        """Model holding exactly the given statements (deduplicated, canonical)."""
        return cls.from_canonical(universe, (canonicalize(s, universe) for s in statements))

    @classmethod
    def from_canonical(
        cls,
        universe: Universe,
        statements: Iterable[Statement],
        origin: Origin = Origin.EXPLICIT,
        basis: Tuple[Statement, ...] = (),
    ) -> "DependencyModel":
        """Model over statements already canonical and within universe."""
        ordered = tuple(sorted(set(statements), key=Statement.sort_key))
        return cls(universe, ordered, origin, basis, frozenset(s.bits for s in ordered))

    @property
    def is_closed_basis(self) -> bool:
        return self.origin is Origin.CLOSED_BASIS

    def __len__(self) -> int:
        return len(self.statements)

    def __iter__(self) -> Iterator[Statement]:
        return iter(self.statements)

    def keys(self) -> FrozenSet[Triple]:
        return self._keys

    def same_statements(self, other: "DependencyModel") -> bool:
        return self.universe == other.universe and self._keys == other._keys

    def format(self) -> list:
        return [s.format(self.universe) for s in self.statements]


def close_semigraphoid(
    basis: Iterable[Statement],
    universe: Universe,
    cap: Optional[int] = None,
) -> DependencyModel:
    """
    Close basis under symmetry, decomposition, weak union and contraction.

    Raises:
        UniverseTooLarge: If the universe exceeds the closure cap
    """
    cap = DEFAULT_CONFIG.closure_universe_cap if cap is None else cap
    if len(universe) > cap:
        raise UniverseTooLarge(len(universe), cap, "closure universe")

    canon_basis = tuple(sorted({canonicalize(s, universe) for s in basis}, key=Statement.sort_key))
    closed = semigraphoid_fixpoint(s.bits for s in canon_basis)
    model = DependencyModel.from_canonical(
        universe, (from_bits(*t) for t in closed), Origin.CLOSED_BASIS, canon_basis
    )
    logger.info("Closed %d basis statements into %d", len(canon_basis), len(model))
    return model


def _check_pair(model: DependencyModel, a: int, b: int) -> None:
    if a == b:
        raise InputError(f"Separator query needs two distinct variables, got {a} twice")
    model.universe.var(a)
    model.universe.var(b)


def project_separator(s: Statement, a: int, b: int) -> VarSet:
    """
    Separator of (a, b) read off a statement I(aA, bB | C): C with A and B added.

    Follows from weak union applied to I(aA, bB | C).
    """
    return s.support - VarSet.of((a, b))


def _fast_path(model: DependencyModel, a: int, b: int) -> Optional[VarSet]:
    for s in model.basis:
        if s.separates(a, b):
            return project_separator(s, a, b)
    return None


def _singleton_scan(statements: Iterable[Statement], a: int, b: int) -> Iterator[VarSet]:
    pair = VarSet.of((a, b))
    for s in statements:
        if len(s.lhs) == 1 and len(s.rhs) == 1 and (s.lhs | s.rhs) == pair:
            yield s.cond


def has_separator(
    model: DependencyModel,
    a: int,
    b: int,
    fast_path: bool = True,
) -> Optional[VarSet]:
    """
    Some S with I(a, b | S) in the model, or None.

    Closed-basis models answer from the basis alone unless fast_path is False,
    in which case the materialized closure is scanned.
    """
    _check_pair(model, a, b)
    if model.is_closed_basis and fast_path:
        return _fast_path(model, a, b)
    return next(_singleton_scan(model.statements, a, b), None)


def iter_separators(model: DependencyModel, a: int, b: int) -> Iterator[VarSet]:
    """Every S with I(a, b | S) in the materialized model, in canonical order."""
    _check_pair(model, a, b)
    return _singleton_scan(model.statements, a, b)


def any_separator_contains(model: DependencyModel, a: int, c: int, b: int) -> bool:
    """Is b in some S with I(a, c | S) in the model?"""
    return any(b in s for s in iter_separators(model, a, c))


def contains(model: DependencyModel, s: Statement) -> bool:
    """
    Membership of s in the materialized model.

    Raises:
        UnknownVariable: If s ranges outside the model's universe
    """
    canon = canonicalize(s, model.universe)
    return canon.bits in model.keys()


def separator_table(model: DependencyModel) -> Dict[Pair, VarSet]:
    """
    First separator of every separable pair, in one sweep over the statements.

    Explicit models contribute singleton-pair statements; closed-basis models
    contribute every pair a in A, b in B of every basis statement I(A, B | C),
    projected as in project_separator(). The entry for each pair equals
    has_separator(model, a, b).
    """
    table: Dict[Pair, VarSet] = {}
    if model.is_closed_basis:
        for s in model.basis:
            for a in s.lhs:
                for b in s.rhs:
                    key = (a, b) if a < b else (b, a)
                    if key not in table:
                        table[key] = project_separator(s, a, b)
    else:
        for s in model.statements:
            if len(s.lhs) == 1 and len(s.rhs) == 1:
                a, b = next(iter(s.lhs)), next(iter(s.rhs))
                key = (a, b) if a < b else (b, a)
                if key not in table:
                    table[key] = s.cond
    return table
