"""Outcome records of the construction pipeline."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, Optional, Tuple, Union

from engine.construct.trace import TraceEvent
from engine.graph.base import Vee
from engine.graph.dag import Dag
from engine.graph.pdag import Pdag
from engine.model.statement import Statement
from engine.model.universe import VarSet


class FailureReason(str, Enum):
    ORIENTATION_CONFLICT = "OrientationConflict"
    SEPARATOR_DISAGREEMENT = "SeparatorDisagreement"
    NO_EXTENSION = "NoExtension"
    STATEMENT_NOT_IN_DAG = "StatementNotInDag"
    DAG_STATEMENT_NOT_IN_MODEL = "DagStatementNotInModel"


class Phase2Mode(str, Enum):
    BACKTRACK = "backtrack"
    FAILFAST = "failfast"


@dataclass(frozen=True)
class SeparatorTable:
    """Witness separator S(a, b) for every nonadjacent pair, keyed with a < b."""
    entries: Dict[Tuple[int, int], VarSet] = field(default_factory=dict)

    def get(self, a: int, b: int) -> Optional[VarSet]:
        return self.entries.get((a, b) if a < b else (b, a))

    def __contains__(self, pair: object) -> bool:
        if not isinstance(pair, tuple) or len(pair) != 2:
            return False
        a, b = pair
        return ((a, b) if a < b else (b, a)) in self.entries

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self.entries))

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class Witness:
    """A dag consistent with the model."""
    dag: Dag


@dataclass(frozen=True)
class Fail:
    """
    Phase failure: the model is not dag-isomorphic.

    statement carries the Phase 3 counterexample, vee the Phase 1 triple.
    conjecture_relied is set by failfast Phase 2 when a free choice was made
    before the failure, so the verdict trusts that choices never need revoking.
    """
    phase: int
    reason: FailureReason
    detail: str
    statement: Optional[Statement] = None
    vee: Optional[Vee] = None
    conjecture_relied: bool = False


Outcome = Union[Witness, Fail]


@dataclass(frozen=True)
class Phase1Result:
    pdag: Pdag
    separators: SeparatorTable


@dataclass(frozen=True)
class Decision:
    """Outcome of decide(), with the Phase 1 pattern when Phase 1 succeeded."""
    outcome: Outcome
    trace: Tuple[TraceEvent, ...] = ()
    pattern: Optional[Pdag] = None
    separators: Optional[SeparatorTable] = None

    @property
    def is_witness(self) -> bool:
        return isinstance(self.outcome, Witness)

    @property
    def witness(self) -> Optional[Dag]:
        return self.outcome.dag if isinstance(self.outcome, Witness) else None

    @property
    def failure(self) -> Optional[Fail]:
        return self.outcome if isinstance(self.outcome, Fail) else None
