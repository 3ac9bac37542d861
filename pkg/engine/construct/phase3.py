"""Phase 3: check that a dag and a dependency model hold the same statements."""

import logging
from typing import Optional, Sequence

from engine.construct.decision import Fail, FailureReason
from engine.construct.trace import TraceRecorder
from engine.core.config import DEFAULT_CONFIG
from engine.core.errors import NodeSetMismatch
from engine.dsep.query import DsepQuery
from engine.dsep.reachability import d_separated
from engine.graph.dag import Dag
from engine.model.closure import closure_gap
from engine.model.dependency import DependencyModel, contains
from engine.model.statement import Statement, from_bits

logger = logging.getLogger(__name__)


def local_statements(d: Dag, order: Optional[Sequence[int]] = None):
    """
    Yield (node, statement) for I(a, U_a - pa(a) | pa(a)) along order.

    U_a is the set of nodes before a in order. Nodes whose predecessors are
    all parents yield nothing; that statement is vacuous.
    """
    order = d.topological_sort() if order is None else list(order)
    before = 0
    for a in order:
        parents = d.parents(a)
        rest = before & ~parents
        if rest:
            yield a, from_bits(1 << a, rest, parents)
        before |= 1 << a


def phase3(
    d: Dag,
    model: DependencyModel,
    order: Optional[Sequence[int]] = None,
    recorder: Optional[TraceRecorder] = None,
    closure_cap: Optional[int] = None,
) -> Optional[Fail]:
    """
    None if d is consistent with model, else the first counterexample.

    Step 1 checks that every model statement holds in d by d-separation;
    a closed-basis model only needs its basis checked. Step 2 checks that
    the local statement of every node along order is in the model. For an
    explicit model within closure_cap, a statement one axiom step away from
    the list but missing from it also fails Step 2: it holds in d.

    Raises:
        NodeSetMismatch: If d and model range over different node counts
    """
    recorder = recorder or TraceRecorder(enabled=False)
    if d.n != len(model.universe):
        raise NodeSetMismatch(f"Dag has {d.n} nodes, model has {len(model.universe)} variables")

    tested = model.basis if model.is_closed_basis else model.statements
    for s in tested:
        if not d_separated(d, DsepQuery.from_statement(s)):
            return _fail(recorder, FailureReason.STATEMENT_NOT_IN_DAG, s, model)

    for _, s in local_statements(d, order):
        if not contains(model, s):
            return _fail(recorder, FailureReason.DAG_STATEMENT_NOT_IN_MODEL, s, model)

    cap = DEFAULT_CONFIG.closure_universe_cap if closure_cap is None else closure_cap
    if not model.is_closed_basis and len(model.universe) <= cap:
        gap = closure_gap(model.keys())
        if gap is not None:
            return _fail(recorder, FailureReason.DAG_STATEMENT_NOT_IN_MODEL, from_bits(*gap), model)

    recorder.record_phase_verdict(3, True)
    logger.info("Phase 3 passed on %d statements", len(tested))
    return None


def _fail(recorder: TraceRecorder, reason: FailureReason, s: Statement, model: DependencyModel) -> Fail:
    text = s.format(model.universe)
    recorder.record_phase_verdict(3, False, reason.value)
    logger.info("Phase 3 failed: %s %s", reason.value, text)
    return Fail(phase=3, reason=reason, detail=text, statement=s)
