"""Phase 1: skeleton and vee structures from the dependency model."""

import logging
from typing import Optional, Union

from engine.construct.decision import Fail, FailureReason, Phase1Result, SeparatorTable
from engine.construct.trace import TraceRecorder
from engine.graph.base import Vee, iter_bits
from engine.graph.pdag import Pdag
from engine.model.dependency import DependencyModel, iter_separators, separator_table

logger = logging.getLogger(__name__)


def build_skeleton(model: DependencyModel, recorder: Optional[TraceRecorder] = None):
    """
    Complete graph minus every pair with a separator in the model.

    Returns the undirected pdag and the separator table. Runs in one sweep
    over the statements plus one pass over the pairs.
    """
    recorder = recorder or TraceRecorder(enabled=False)
    n = len(model.universe)
    table = separator_table(model)
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            separator = table.get((a, b))
            if separator is None:
                edges.append((a, b))
            else:
                recorder.record_edge_removed(a, b, sorted(separator))
    return Pdag(n, (), edges), SeparatorTable(table)


def _separators_disagree(model: DependencyModel, a: int, c: int, b: int) -> bool:
    seen = {b in s for s in iter_separators(model, a, c)}
    return len(seen) == 2


def phase1(
    model: DependencyModel,
    strict: bool = False,
    recorder: Optional[TraceRecorder] = None,
) -> Union[Phase1Result, Fail]:
    """
    Build the pdag: skeleton from separators, then direct every vee a -> b <- c.

    Nonadjacent pairs are visited in lexicographic order and common neighbours
    in index order. Only the first separator S(a, c) decides whether b is a
    collider, unless strict is set, in which case every separator of (a, c)
    must agree on b.
    """
    recorder = recorder or TraceRecorder(enabled=False)
    name = model.universe.name
    work, separators = build_skeleton(model, recorder)

    for a, c in separators:
        separator = separators.get(a, c)
        common = work.neighbors(a) & work.neighbors(c)
        for b in iter_bits(common):
            if strict and _separators_disagree(model, a, c, b):
                return _fail(
                    recorder,
                    FailureReason.SEPARATOR_DISAGREEMENT,
                    Vee.of(a, b, c),
                    f"separators of ({name(a)}, {name(c)}) disagree on {name(b)}",
                )
            if b in separator:
                continue
            if work.has_directed_path(b, a) or work.has_directed_path(b, c):
                return _fail(
                    recorder,
                    FailureReason.ORIENTATION_CONFLICT,
                    Vee.of(a, b, c),
                    f"cannot direct {name(a)}->{name(b)}<-{name(c)}: directed path from {name(b)}",
                )
            for tail in (a, c):
                if work.is_undirected(tail, b):
                    work._set_directed(tail, b)
            recorder.record_vee_oriented(a, b, c)

    recorder.record_phase_verdict(1, True)
    logger.info("Phase 1 built pdag with %d edges, %d directed",
                len(work.skeleton()), len(work.directed_edges()))
    return Phase1Result(work, separators)


def _fail(recorder: TraceRecorder, reason: FailureReason, vee: Vee, detail: str) -> Fail:
    recorder.record_phase_verdict(1, False, reason.value)
    logger.info("Phase 1 failed: %s", detail)
    return Fail(phase=1, reason=reason, detail=detail, vee=vee)
