"""Construction of a consistent dag from a dependency model."""

from engine.construct.decision import (
    Decision,
    Fail,
    FailureReason,
    Phase1Result,
    Phase2Mode,
    SeparatorTable,
    Witness,
)
from engine.construct.phase1 import build_skeleton, phase1
from engine.construct.phase2 import Phase2Frame, is_extension, phase2
from engine.construct.phase3 import local_statements, phase3
from engine.construct.pipeline import decide
from engine.construct.trace import TraceEvent, TraceRecorder

__all__ = [
    "Decision",
    "Fail",
    "FailureReason",
    "Phase1Result",
    "Phase2Frame",
    "Phase2Mode",
    "SeparatorTable",
    "TraceEvent",
    "TraceRecorder",
    "Witness",
    "build_skeleton",
    "decide",
    "is_extension",
    "local_statements",
    "phase1",
    "phase2",
    "phase3",
]
