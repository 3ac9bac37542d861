"""Full d-separation model of a dag."""

from typing import Iterator, Optional

from engine.core.config import DEFAULT_CONFIG
from engine.core.errors import NodeSetMismatch, UniverseTooLarge
from engine.dsep.query import DsepQuery
from engine.dsep.reachability import d_separated
from engine.graph.dag import Dag
from engine.model.closure import Triple, submasks
from engine.model.dependency import DependencyModel
from engine.model.statement import from_bits
from engine.model.universe import Universe, VarSet


def canonical_triples(n: int) -> Iterator[Triple]:
    """
    Every canonical (A, B, C) of pairwise disjoint sets over n nodes, A and B nonempty.

    Canonical means the lowest index of A is below the lowest index of B.
    """
    full = (1 << n) - 1
    for cond in range(full + 1):
        free = full & ~cond
        for lhs in submasks(free):
            low = lhs & -lhs
            # rhs must avoid lhs and every index at or below lhs's lowest
            rest = free & ~lhs & ~((low << 1) - 1)
            for rhs in submasks(rest):
                yield lhs, rhs, cond


def full_model(
    d: Dag,
    universe: Optional[Universe] = None,
    cap: Optional[int] = None,
) -> DependencyModel:
    """
    Every canonical statement that holds in d by d-separation.

    Raises:
        UniverseTooLarge: If d has more nodes than the full-model cap
    """
    cap = DEFAULT_CONFIG.full_model_cap if cap is None else cap
    if d.n > cap:
        raise UniverseTooLarge(d.n, cap, "full model")
    if universe is None:
        universe = Universe.of_size(d.n)
    if len(universe) != d.n:
        raise NodeSetMismatch(f"Universe has {len(universe)} variables, dag has {d.n} nodes")

    holding = []
    for lhs, rhs, cond in canonical_triples(d.n):
        if d_separated(d, DsepQuery(VarSet(lhs), VarSet(rhs), VarSet(cond))):
            holding.append(from_bits(lhs, rhs, cond))
    return DependencyModel.from_canonical(universe, holding)
