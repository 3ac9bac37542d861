"""Trace recorder for construction events."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

EDGE_REMOVED = "edge-removed"
VEE_ORIENTED = "vee-oriented"
RULE_FIRED = "rule-fired"
CHOICE_PUSHED = "choice-pushed"
FRAME_POPPED = "frame-popped"
PHASE_VERDICT = "phase-verdict"

EVENT_KINDS = (EDGE_REMOVED, VEE_ORIENTED, RULE_FIRED, CHOICE_PUSHED, FRAME_POPPED, PHASE_VERDICT)


@dataclass(frozen=True)
class TraceEvent:
    """One construction event; data holds node indices, never names."""
    seq: int
    kind: str
    data: Dict[str, Any] = field(default_factory=dict)


class TraceRecorder:
    """
    Records construction events in order.

    Sequence numbers replace timestamps so the same input always yields the
    same trace. A disabled recorder accepts every call and keeps nothing.
    """

    def __init__(self, enabled: bool = True):
        self.enabled = enabled
        self._events: List[TraceEvent] = []

    def record_edge_removed(self, a: int, b: int, separator: List[int]) -> None:
        """Record a skeleton pair dropped because a separator exists."""
        self._record(EDGE_REMOVED, a=a, b=b, separator=separator)

    def record_vee_oriented(self, a: int, b: int, c: int) -> None:
        """Record a -> b <- c directed in Phase 1."""
        self._record(VEE_ORIENTED, a=a, b=b, c=c)

    def record_rule_fired(self, rule: int, tail: int, head: int) -> None:
        """Record an orientation forced by one of the closure rules."""
        self._record(RULE_FIRED, rule=rule, tail=tail, head=head)

    def record_choice_pushed(self, tail: int, head: int, depth: int, reversed: bool = False) -> None:
        """Record a free orientation choice; reversed marks the second direction of a frame."""
        self._record(CHOICE_PUSHED, tail=tail, head=head, depth=depth, reversed=reversed)

    def record_frame_popped(self, edge: Tuple[int, int], depth: int) -> None:
        """Record a frame discarded after both directions failed."""
        self._record(FRAME_POPPED, edge=list(edge), depth=depth)

    def record_phase_verdict(self, phase: int, passed: bool, reason: Optional[str] = None) -> None:
        """Record the outcome of a phase."""
        self._record(PHASE_VERDICT, phase=phase, passed=passed, reason=reason)

    def _record(self, kind: str, **data: Any) -> None:
        if not self.enabled:
            return
        self._events.append(TraceEvent(seq=len(self._events) + 1, kind=kind, data=data))

    def get_all_events(self) -> Tuple[TraceEvent, ...]:
        """Get all recorded events."""
        return tuple(self._events)

    def __len__(self) -> int:
        return len(self._events)
