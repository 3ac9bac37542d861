"""The three-phase decision pipeline."""

import logging
from typing import Optional, Union

from engine.construct.decision import Decision, Fail, Phase2Mode, Witness
from engine.construct.phase1 import phase1
from engine.construct.phase2 import phase2
from engine.construct.phase3 import phase3
from engine.construct.trace import TraceRecorder
from engine.model.dependency import DependencyModel

logger = logging.getLogger(__name__)


def decide(
    model: DependencyModel,
    mode: Union[Phase2Mode, str] = Phase2Mode.BACKTRACK,
    strict: bool = False,
    trace: bool = False,
    closure_cap: Optional[int] = None,
) -> Decision:
    """
    Decide whether model is dag-isomorphic.

    Returns a Witness dag that passed Phase 3, or the Fail of the earliest
    failing phase. Phase failures are answers and are never raised.

    Args:
        model: Explicit closed list or closed-basis model
        mode: Phase 2 search mode
        strict: Require every separator of a pair to agree on each collider
        trace: Record construction events in the returned Decision
        closure_cap: Largest explicit universe checked for closure gaps in Phase 3
    """
    recorder = TraceRecorder(enabled=trace)
    logger.info("Deciding model with %d statements over %d variables (%s)",
                len(model), len(model.universe), model.origin.value)

    first = phase1(model, strict=strict, recorder=recorder)
    if isinstance(first, Fail):
        return Decision(first, recorder.get_all_events())

    second = phase2(first.pdag, mode=mode, recorder=recorder)
    if isinstance(second, Fail):
        return Decision(second, recorder.get_all_events(), first.pdag, first.separators)

    third = phase3(second, model, recorder=recorder, closure_cap=closure_cap)
    outcome = third if third is not None else Witness(second)
    return Decision(outcome, recorder.get_all_events(), first.pdag, first.separators)
