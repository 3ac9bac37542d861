"""Human-readable rendering of a decision."""

from typing import Any, Dict, List, Optional

from engine.construct.decision import Decision
from engine.construct.trace import TraceEvent
from engine.graph.base import MixedGraph
from engine.model.universe import Universe

_NODE_KEYS = ("a", "b", "c", "tail", "head")
_NODE_LIST_KEYS = ("separator", "edge")


def edge_lines(g: MixedGraph, universe: Universe) -> List[str]:
    lines = [f"{universe.name(t)} -> {universe.name(h)}" for t, h in sorted(g.directed_edges())]
    lines += [f"{universe.name(a)} - {universe.name(b)}" for a, b in sorted(g.undirected_edges())]
    return lines


def named_data(event: TraceEvent, universe: Universe) -> Dict[str, Any]:
    """Event data with node indices replaced by variable names."""
    named: Dict[str, Any] = {}
    for key, value in event.data.items():
        if key in _NODE_KEYS:
            value = universe.name(value)
        elif key in _NODE_LIST_KEYS:
            value = [universe.name(i) for i in value]
        named[key] = value
    return named


def format_event(event: TraceEvent, universe: Universe) -> str:
    data = named_data(event, universe)
    parts = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, list):
            value = "{" + ", ".join(value) + "}"
        parts.append(f"{key}={value}")
    return f"{event.seq:>4} {event.kind} " + " ".join(parts)


def render_text(decision: Decision, universe: Universe, oracle: Optional[str] = None) -> str:
    """
    Verdict, witness edges or failure, then the trace when one was recorded.

    oracle is "agree" or "disagree" when the brute-force check ran.
    """
    lines: List[str] = []
    if decision.witness is not None:
        lines.append("dag-isomorphic: yes")
        edges = edge_lines(decision.witness, universe)
        lines.append("witness:" if edges else "witness: (no edges)")
        lines += [f"  {line}" for line in edges]
    else:
        failure = decision.failure
        lines.append("dag-isomorphic: no")
        lines.append(f"failed in phase {failure.phase}: {failure.reason.value}")
        lines.append(f"  {failure.detail}")
        if failure.conjecture_relied:
            lines.append("  (failfast verdict; free choices were not revisited)")
    if oracle is not None:
        lines.append(f"oracle: {oracle}")
    if decision.trace:
        lines.append("trace:")
        lines += [f"  {format_event(e, universe)}" for e in decision.trace]
    return "\n".join(lines) + "\n"
