"""Phase 2: extend a pdag to a dag with the same skeleton and vee structures."""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Set, Union

from engine.construct.decision import Fail, FailureReason, Phase2Mode
from engine.construct.rules import RULES
from engine.construct.trace import TraceRecorder
from engine.graph.base import Edge, Vee, iter_bits
from engine.graph.dag import Dag
from engine.graph.pdag import Pdag

logger = logging.getLogger(__name__)


@dataclass
class Phase2Frame:
    """
    One free orientation choice on the search stack.

    snapshot is the working pdag as it was before the choice; tried holds
    every direction of edge already attempted.
    """
    edge: Edge
    direction: Edge
    snapshot: Pdag
    tried: Set[Edge] = field(default_factory=set)

    def next_direction(self) -> Optional[Edge]:
        a, b = self.edge
        for direction in ((a, b), (b, a)):
            if direction not in self.tried:
                return direction
        return None


def _apply(work: Pdag, tail: int, head: int, reference: FrozenSet[Vee]) -> bool:
    """
    Orient tail -> head in place.

    False if the edge points the other way, the orientation closes a
    directed cycle, or it creates a vee at head outside reference.
    """
    if work.is_directed(tail, head):
        return True
    if work.is_directed(head, tail) or work.has_directed_path(head, tail):
        return False
    work._set_directed(tail, head)
    for other in iter_bits(work.parents(head) & ~(1 << tail) & ~work.neighbors(tail)):
        if Vee.of(tail, head, other) not in reference:
            return False
    return True


def _close(work: Pdag, reference: FrozenSet[Vee], recorder: TraceRecorder) -> bool:
    """Apply rules 1 to 4 round-robin until none fires. False on an unsuccessful closure."""
    changed = True
    while changed:
        changed = False
        for number, rule in RULES:
            for tail, head in rule(work):
                if work.is_directed(tail, head):
                    continue
                if not _apply(work, tail, head, reference):
                    logger.debug("Rule %d cannot orient %d->%d", number, tail, head)
                    return False
                recorder.record_rule_fired(number, tail, head)
                logger.debug("Rule %d oriented %d->%d", number, tail, head)
                changed = True
    return True


def _choose(work: Pdag, direction: Edge, reference: FrozenSet[Vee], recorder: TraceRecorder) -> bool:
    return _apply(work, *direction, reference) and _close(work, reference, recorder)


def phase2(
    g: Pdag,
    mode: Union[Phase2Mode, str] = Phase2Mode.BACKTRACK,
    recorder: Optional[TraceRecorder] = None,
) -> Union[Dag, Fail]:
    """
    Close g under the orientation rules, choosing free edges until none remain.

    The vee structures of g are the reference set; no step may add another.
    Backtrack mode retries each choice in the reverse direction and pops
    exhausted frames, so Fail is definitive. Failfast mode stops at the first
    unsuccessful closure.
    """
    mode = Phase2Mode(mode)
    recorder = recorder or TraceRecorder(enabled=False)
    reference = g.vee_structures()
    work = g.copy()
    stack: List[Phase2Frame] = []

    ok = _close(work, reference, recorder)
    while True:
        if ok:
            if not work.has_undirected():
                recorder.record_phase_verdict(2, True)
                logger.info("Phase 2 found an extension after %d choices", len(stack))
                return work.to_dag()
            edge = min(work.undirected_edges())
            frame = Phase2Frame(edge, edge, work.copy(), {edge})
            stack.append(frame)
            recorder.record_choice_pushed(*edge, depth=len(stack))
            ok = _choose(work, edge, reference, recorder)
            continue

        if mode is Phase2Mode.FAILFAST:
            return _fail(recorder, len(stack), conjecture_relied=bool(stack))

        while stack:
            frame = stack[-1]
            direction = frame.next_direction()
            if direction is not None:
                frame.tried.add(direction)
                frame.direction = direction
                work = frame.snapshot.copy()
                recorder.record_choice_pushed(*direction, depth=len(stack), reversed=True)
                ok = _choose(work, direction, reference, recorder)
                break
            stack.pop()
            recorder.record_frame_popped(frame.edge, len(stack) + 1)
            logger.debug("Popped exhausted frame on edge %s", frame.edge)
        else:
            return _fail(recorder, 0)


def _fail(recorder: TraceRecorder, depth: int, conjecture_relied: bool = False) -> Fail:
    recorder.record_phase_verdict(2, False, FailureReason.NO_EXTENSION.value)
    logger.info("Phase 2 found no extension (stack depth %d)", depth)
    detail = "no extension of the pdag"
    if conjecture_relied:
        detail += " (failfast: earlier free choices were not revisited)"
    return Fail(phase=2, reason=FailureReason.NO_EXTENSION, detail=detail,
                conjecture_relied=conjecture_relied)


def is_extension(d: Dag, g: Pdag) -> bool:
    """Same skeleton as g, same vees, and every directed edge of g kept."""
    return (
        d.skeleton() == g.skeleton()
        and d.vee_structures() == g.vee_structures()
        and all(d.is_directed(t, h) for t, h in g.directed_edges())
    )
