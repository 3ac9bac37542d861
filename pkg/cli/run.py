"""Batch pipeline behind `dagiso decide`, callable without click."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from engine.construct.decision import Decision
from engine.construct.pipeline import decide
from engine.core.config import EngineConfig
from engine.core.errors import ConfigError, InputError, TooLarge, UniverseTooLarge
from engine.formats.dot import to_dot
from engine.formats.statements import parse_input
from engine.formats.text import render_text
from engine.graph.ops import is_equivalent
from engine.graph.pdag import Pdag
from engine.model.dependency import DependencyModel, close_semigraphoid
from engine.oracle.isomorphism import is_dag_isomorphic_bruteforce
from engine.util.fs import STDIN, read_input
from report.builder import DecisionRecordBuilder

logger = logging.getLogger(__name__)

EXIT_WITNESS = 0
EXIT_NOT_ISOMORPHIC = 1
EXIT_INPUT_ERROR = 2
EXIT_ORACLE_DISAGREES = 3


@dataclass(frozen=True)
class RunConfig:
    """
    One invocation of the decision pipeline.

    phase2_mode, emit and strict_separators fall back to the engine config
    when left as None.
    """
    input: str = STDIN
    basis_mode: bool = False
    phase2_mode: Optional[str] = None
    emit: Optional[str] = None
    trace: bool = False
    check_oracle: bool = False
    strict_separators: Optional[bool] = None
    engine: EngineConfig = field(default_factory=EngineConfig)

    def resolved(self) -> EngineConfig:
        """Engine config with this run's overrides applied."""
        return self.engine.with_overrides(
            phase2_mode=self.phase2_mode,
            emit=self.emit,
            strict_separators=self.strict_separators,
        )


@dataclass(frozen=True)
class RunResult:
    exit_code: int
    artifact: str = ""
    diagnostic: Optional[str] = None


def build_model(text: str, basis_mode: bool, config: EngineConfig) -> DependencyModel:
    """Parse text and build the model: closed from a basis, or taken as the complete list."""
    universe, statements = parse_input(text)
    if basis_mode:
        return close_semigraphoid(statements, universe, cap=config.closure_universe_cap)
    return DependencyModel.explicit(universe, statements)


def check_oracle(model: DependencyModel, decision: Decision, config: EngineConfig) -> bool:
    """
    Does the brute-force search agree with decision?

    Raises:
        TooLarge: If the universe exceeds the brute-force cap
    """
    size = len(model.universe)
    if size > config.bruteforce_cap:
        raise TooLarge(size, config.bruteforce_cap, "oracle check universe")
    found = is_dag_isomorphic_bruteforce(model, cap=config.bruteforce_cap)
    if found is None or decision.witness is None:
        return (found is None) == (decision.witness is None)
    return is_equivalent(found, decision.witness)


def render_dot(model: DependencyModel, decision: Decision, trace: bool = False) -> str:
    """
    Witness dag, or the Phase 1 pdag of a failed decision when there is one.

    With trace, a witness is followed by a second graph holding the Phase 1 pdag.
    """
    universe = model.universe
    if decision.witness is not None:
        witness = to_dot(decision.witness, universe, name="witness")
        if trace and decision.pattern is not None:
            return witness + to_dot(decision.pattern, universe, name="pattern")
        return witness
    failure = decision.failure
    header: List[str] = [
        "// not dag-isomorphic",
        f"// phase {failure.phase}: {failure.reason.value}: {failure.detail}",
    ]
    if decision.pattern is not None:
        body = to_dot(decision.pattern, universe, name="pattern")
    else:
        body = to_dot(Pdag(len(universe)), universe, name="pattern")
    return "\n".join(header) + "\n" + body


def run(config: RunConfig, text: Optional[str] = None) -> RunResult:
    """
    Parse, decide, optionally cross-check against the oracle, and render.

    Input errors, config errors and oversized universes give exit code 2
    with a diagnostic instead of raising.
    """
    try:
        engine = config.resolved()
        if text is None:
            text = read_input(config.input)
        model = build_model(text, config.basis_mode, engine)
        decision = decide(
            model,
            mode=engine.phase2_mode,
            strict=engine.strict_separators,
            trace=config.trace,
            closure_cap=engine.closure_universe_cap,
        )
        agree = check_oracle(model, decision, engine) if config.check_oracle else None
    except (InputError, ConfigError, UniverseTooLarge) as e:
        logger.info("Run rejected: %s", e)
        return RunResult(EXIT_INPUT_ERROR, diagnostic=f"error: {e}")
    except OSError as e:
        return RunResult(EXIT_INPUT_ERROR, diagnostic=f"error: cannot read input: {e}")

    oracle = None if agree is None else ("agree" if agree else "disagree")
    if engine.emit == "json":
        builder = DecisionRecordBuilder(model, decision, engine.phase2_mode, engine.strict_separators)
        builder.with_trace(config.trace)
        if agree is not None:
            builder.set_oracle(agree)
        artifact = builder.render()
    elif engine.emit == "dot":
        artifact = render_dot(model, decision, config.trace)
    else:
        artifact = render_text(decision, model.universe, oracle)

    if agree is False:
        logger.warning("Oracle disagrees with the decision")
        return RunResult(EXIT_ORACLE_DISAGREES, artifact, "error: oracle disagrees with the decision")
    code = EXIT_WITNESS if decision.is_witness else EXIT_NOT_ISOMORPHIC
    return RunResult(code, artifact)
