"""Decision record builder."""

from pathlib import Path
from typing import Any, Dict, List, Optional

from engine.construct.decision import Decision
from engine.formats.text import named_data
from engine.graph.base import MixedGraph
from engine.model.dependency import DependencyModel
from engine.model.universe import Universe
from engine.util.fs import safe_write
from engine.util.json import pretty_json
from report.seal import seal_record

RECORD_VERSION = "1.0"


def _named_edges(edges, universe: Universe) -> List[List[str]]:
    return [[universe.name(a), universe.name(b)] for a, b in sorted(edges)]


class DecisionRecordBuilder:
    """
    Builds the JSON record of one decision.

    Every list in the record is sorted and keys are serialized sorted, so
    the same input always produces the same bytes.
    """

    def __init__(self, model: DependencyModel, decision: Decision, mode: str, strict: bool = False):
        self.model = model
        self.decision = decision
        self.mode = mode
        self.strict = strict
        self.oracle: Optional[str] = None
        self.include_trace = False

    def set_oracle(self, agree: bool) -> None:
        """Attach the brute-force oracle verdict."""
        self.oracle = "agree" if agree else "disagree"

    def with_trace(self, enabled: bool = True) -> "DecisionRecordBuilder":
        self.include_trace = enabled
        return self

    def _pattern(self, g: MixedGraph) -> Dict[str, Any]:
        universe = self.model.universe
        return {
            "directed": _named_edges(g.directed_edges(), universe),
            "undirected": _named_edges(g.undirected_edges(), universe),
        }

    def build(self) -> Dict[str, Any]:
        """
        Build the record.

        Returns:
            Record dictionary (not yet sealed)
        """
        universe = self.model.universe
        record: Dict[str, Any] = {
            "record_version": RECORD_VERSION,
            "universe": list(universe.names),
            "origin": self.model.origin.value,
            "mode": self.mode,
            "strict_separators": self.strict,
            "statement_count": len(self.model),
        }

        witness = self.decision.witness
        if witness is not None:
            record["decision"] = "dag-isomorphic"
            record["witness_edges"] = _named_edges(witness.directed_edges(), universe)
        else:
            failure = self.decision.failure
            record["decision"] = "not-dag-isomorphic"
            record["failure"] = {
                "phase": failure.phase,
                "reason": failure.reason.value,
                "detail": failure.detail,
                "conjecture_relied": failure.conjecture_relied,
            }

        if self.include_trace:
            if self.decision.pattern is not None:
                record["pattern"] = self._pattern(self.decision.pattern)
            record["trace"] = [
                {"seq": e.seq, "kind": e.kind, "data": named_data(e, universe)}
                for e in self.decision.trace
            ]

        if self.oracle is not None:
            record["oracle"] = self.oracle
        return record

    def build_and_seal(self) -> Dict[str, Any]:
        """Build and seal the record."""
        return seal_record(self.build())

    def render(self) -> str:
        """Sealed record as indented JSON with sorted keys."""
        return pretty_json(self.build_and_seal())

    def save(self, output_path: Path) -> None:
        """Write the sealed record to output_path."""
        safe_write(output_path, self.render())
