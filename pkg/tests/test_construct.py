"""Tests for the three-phase construction."""

import random
import time

import pytest

from engine.construct import (
    FailureReason,
    Phase2Mode,
    TraceRecorder,
    build_skeleton,
    decide,
    is_extension,
    local_statements,
    phase1,
    phase2,
    phase3,
)
from engine.construct.rules import rule1, rule2, rule3, rule4
from engine.construct.trace import CHOICE_PUSHED, EDGE_REMOVED, EVENT_KINDS, PHASE_VERDICT, RULE_FIRED
from engine.core.errors import CycleDetected, NodeSetMismatch
from engine.dsep.model import canonical_triples, full_model
from engine.graph.dag import Dag
from engine.graph.ops import is_equivalent, pattern
from engine.graph.pdag import Pdag
from engine.model.dependency import DependencyModel, close_semigraphoid, iter_separators
from engine.model.statement import Statement, from_bits
from engine.model.universe import Universe, VarSet
from engine.oracle.enumerate import enumerate_dags
from engine.oracle.extensions import all_topological_orders, enumerate_extensions
from engine.oracle.isomorphism import is_dag_isomorphic_bruteforce

ABC = Universe(["a", "b", "c"])
ABCD = Universe(["a", "b", "c", "d"])

# a ⊥ c, a ⊥ d, b ⊥ d: the two vees a->b<-c and b->c<-d cannot coexist
VEE_CONFLICT = DependencyModel.explicit(
    ABCD, [Statement.of([0], [2]), Statement.of([0], [3]), Statement.of([1], [3])]
)

# pairwise marginal independence only
MARGINAL_ONLY = DependencyModel.explicit(
    ABC, [Statement.of([0], [1]), Statement.of([0], [2]), Statement.of([1], [2])]
)

FOUR_CYCLE = Pdag(4, [], [(0, 1), (1, 2), (2, 3), (0, 3)])


def local_basis(d: Dag, universe: Universe) -> DependencyModel:
    """Closed-basis model built from d's local statements."""
    return close_semigraphoid([s for _, s in local_statements(d)], universe)


def partial_orientation(rng: random.Random, g: Pdag, d: Dag = None):
    """
    Orient a random subset of g's undirected edges, as in d when given, else randomly.

    None if the result has a directed cycle.
    """
    directed = list(g.directed_edges())
    undirected = []
    for a, b in g.undirected_edges():
        if rng.random() < 0.5:
            undirected.append((a, b))
        elif d is not None:
            directed.append((a, b) if d.is_directed(a, b) else (b, a))
        else:
            directed.append((a, b) if rng.random() < 0.5 else (b, a))
    try:
        return Pdag(g.n, directed, undirected)
    except CycleDetected:
        return None


# Phase 1


def test_vee_conflict_fails_in_phase1():
    """Test that the second of two clashing vees is refused."""
    decision = decide(VEE_CONFLICT)
    failure = decision.failure
    assert failure is not None
    assert failure.phase == 1
    assert failure.reason is FailureReason.ORIENTATION_CONFLICT
    assert decision.pattern is None


def test_marginal_only_model_gives_empty_pdag():
    """Test that every pair is separated by the empty set."""
    result = phase1(MARGINAL_ONLY)
    assert result.pdag.skeleton() == frozenset()
    assert [result.separators.get(a, b) for a, b in result.separators] == [VarSet()] * 3
    assert list(result.separators) == [(0, 1), (0, 2), (1, 2)]


def test_collider_model_directs_the_vee():
    """Test that the collider's model yields exactly its two arcs."""
    result = phase1(full_model(Dag(3, [(0, 1), (2, 1)]), ABC))
    assert sorted(result.pdag.directed_edges()) == [(0, 1), (2, 1)]
    assert not result.pdag.has_undirected()


def test_build_skeleton_records_removed_pairs():
    """Test that each separated pair is traced with its separator."""
    recorder = TraceRecorder()
    g, table = build_skeleton(full_model(Dag(3, [(0, 1), (1, 2)]), ABC), recorder)
    assert g.skeleton() == {(0, 1), (1, 2)}
    assert list(table) == [(0, 2)]
    events = recorder.get_all_events()
    assert [e.kind for e in events] == [EDGE_REMOVED]
    assert events[0].data == {"a": 0, "b": 2, "separator": [1]}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_phase1_recovers_the_pattern(n):
    """Test that a dag's full model gives back the dag's pattern."""
    universe = Universe.of_size(n)
    for d in enumerate_dags(n):
        result = phase1(full_model(d, universe))
        assert result.pdag == pattern(d)


@pytest.mark.parametrize("n", [3, 4])
def test_separators_agree_on_common_neighbours(n):
    """Test that every separator of a nonadjacent pair in a dag model agrees on each common neighbour."""
    universe = Universe.of_size(n)
    for d in enumerate_dags(n):
        model = full_model(d, universe)
        for a in range(n):
            for c in range(a + 1, n):
                if d.adjacent(a, c):
                    continue
                separators = list(iter_separators(model, a, c))
                assert separators
                for b in range(n):
                    if b in (a, c) or not (d.adjacent(a, b) and d.adjacent(b, c)):
                        continue
                    assert len({b in s for s in separators}) == 1


def test_strict_separators_detect_disagreement():
    """Test that separators of one pair must agree on the middle node."""
    model = DependencyModel.explicit(ABC, [Statement.of([0], [2]), Statement.of([0], [2], [1])])

    strict = decide(model, strict=True)
    assert strict.failure.phase == 1
    assert strict.failure.reason is FailureReason.SEPARATOR_DISAGREEMENT

    lenient = decide(model)
    assert lenient.failure.phase == 3
    assert lenient.failure.reason is FailureReason.STATEMENT_NOT_IN_DAG
    assert lenient.failure.detail == "I(a ; c | b)"


# orientation rules


def test_rule1():
    assert rule1(Pdag(3, [(0, 1)], [(1, 2)])) == [(1, 2)]
    assert rule1(Pdag(3, [(0, 1)], [(1, 2), (0, 2)])) == []


def test_rule2():
    assert rule2(Pdag(3, [(0, 1), (1, 2)], [(0, 2)])) == [(0, 2)]


def test_rule3():
    assert rule3(Pdag(4, [(0, 3), (2, 3)], [(0, 1), (1, 2), (1, 3)])) == [(1, 3)]


def test_rule4():
    assert rule4(Pdag(4, [(0, 1)], [(1, 2), (2, 3), (0, 3)])) == [(1, 2), (3, 2)]


def test_rules_are_sound_on_four_node_patterns():
    """Test that every forced orientation holds in every extension."""
    rng = random.Random(5)
    for d in enumerate_dags(4):
        g = pattern(d)
        candidates = [g]
        partial = partial_orientation(rng, g, d)
        if partial is not None:
            candidates.append(partial)
        for h in candidates:
            extensions = enumerate_extensions(h)
            assert d in extensions
            for rule in (rule1, rule2, rule3, rule4):
                for tail, head in rule(h):
                    assert all(e.is_directed(tail, head) for e in extensions), (rule.__name__, h)


# Phase 2


def test_four_cycle_has_no_extension_in_either_mode():
    """Test the undirected four-cycle under both search modes."""
    backtrack = phase2(FOUR_CYCLE, Phase2Mode.BACKTRACK)
    assert backtrack.phase == 2
    assert backtrack.reason is FailureReason.NO_EXTENSION
    assert not backtrack.conjecture_relied

    failfast = phase2(FOUR_CYCLE, "failfast")
    assert failfast.reason is FailureReason.NO_EXTENSION
    assert failfast.conjecture_relied


def test_four_cycle_backtrack_trace_pops_the_frame():
    """Test that both directions are tried before the frame is popped."""
    recorder = TraceRecorder()
    phase2(FOUR_CYCLE, recorder=recorder)
    pushes = [e.data for e in recorder.get_all_events() if e.kind == CHOICE_PUSHED]
    assert [(p["tail"], p["head"], p["reversed"]) for p in pushes] == [(0, 1, False), (1, 0, True)]
    assert recorder.get_all_events()[-1].data == {"phase": 2, "passed": False, "reason": "NoExtension"}


def test_rule4_pdag_extends():
    """Test a pdag closed by the fourth rule."""
    g = Pdag(4, [(0, 1)], [(1, 2), (2, 3), (0, 3), (1, 3)])
    d = phase2(g)
    assert isinstance(d, Dag)
    assert is_extension(d, g)


@pytest.mark.parametrize("n", [3, 4])
def test_phase2_extends_every_pattern(n):
    """Test that every pattern extends to a dag with the same vees."""
    for d in enumerate_dags(n):
        g = pattern(d)
        found = phase2(g)
        assert isinstance(found, Dag)
        assert is_extension(found, g)
        assert is_equivalent(found, d)


def test_modes_agree_on_patterns_and_partial_orientations():
    """Test that failfast never fails where backtracking succeeds."""
    rng = random.Random(1995)
    pdags = [pattern(d) for d in enumerate_dags(4)]
    dags = list(enumerate_dags(4))
    partials = 0
    while partials < 600:
        d = rng.choice(dags)
        g = pattern(d)
        h = partial_orientation(rng, g, d if rng.random() < 0.5 else None)
        if h is None or h.vee_structures() != g.vee_structures():
            continue
        pdags.append(h)
        partials += 1

    for g in pdags:
        backtrack = phase2(g, Phase2Mode.BACKTRACK)
        failfast = phase2(g, Phase2Mode.FAILFAST)
        assert isinstance(backtrack, Dag) == isinstance(failfast, Dag), f"modes disagree on {g!r}"
        assert isinstance(backtrack, Dag) == bool(enumerate_extensions(g)), f"wrong verdict on {g!r}"


# Phase 3


def test_marginal_only_model_fails_in_phase3():
    """Test that the empty dag implies statements missing from the list."""
    decision = decide(MARGINAL_ONLY)
    failure = decision.failure
    assert failure.phase == 3
    assert failure.reason is FailureReason.DAG_STATEMENT_NOT_IN_MODEL
    assert failure.detail == "I(a,b ; c |)"
    assert failure.statement == Statement.of([0, 1], [2])
    assert decision.pattern.skeleton() == frozenset()


def test_chain_passes_phase3_against_closed_basis():
    chain = Dag(3, [(0, 1), (1, 2)])
    model = close_semigraphoid([Statement.of([0], [2], [1])], ABC)
    assert phase3(chain, model) is None


def test_phase3_rejects_wrong_size():
    with pytest.raises(NodeSetMismatch):
        phase3(Dag(2), MARGINAL_ONLY)


def test_local_statements_skip_vacuous_nodes():
    """Test the local statements of a chain in topological order."""
    chain = Dag(3, [(0, 1), (1, 2)])
    assert [(a, s.format(ABC)) for a, s in local_statements(chain)] == [(2, "I(a ; c | b)")]
    assert list(local_statements(Dag(3, [(0, 1), (0, 2), (1, 2)]))) == []


def test_closure_gap_check_depends_on_the_cap():
    """Test that an unclosed explicit list fails Phase 3 only within the closure cap."""
    unclosed = DependencyModel.explicit(
        ABC, [Statement.of([0, 1], [2]), Statement.of([0], [2]), Statement.of([1], [2])]
    )
    checked = decide(unclosed, closure_cap=3)
    assert not checked.is_witness
    assert checked.failure.phase == 3
    assert checked.failure.reason is FailureReason.DAG_STATEMENT_NOT_IN_MODEL

    unchecked = decide(unclosed, closure_cap=2)
    assert unchecked.is_witness
    assert unchecked.witness.directed_edges() == [(0, 1)]
    assert decide(close_semigraphoid(unclosed.statements, ABC)).is_witness


def test_phase3_verdict_is_independent_of_order():
    """Test every topological order on every four-node dag model."""
    rng = random.Random(3)
    for d in rng.sample(list(enumerate_dags(4)), 80):
        model = full_model(d, ABCD)
        for order in all_topological_orders(d):
            assert phase3(d, model, order=order) is None

    empty = Dag(3)
    verdicts = {phase3(empty, MARGINAL_ONLY, order=order) is None
                for order in all_topological_orders(empty)}
    assert verdicts == {False}


# end to end


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_decide_finds_equivalent_witness_for_every_dag(n):
    """Test soundness and completeness on every dag's full model."""
    universe = Universe.of_size(n)
    for d in enumerate_dags(n):
        decision = decide(full_model(d, universe))
        assert decision.is_witness, d
        assert is_equivalent(decision.witness, d)


def test_witness_does_not_depend_on_model_form():
    """Test that closed-basis and explicit forms give equivalent witnesses."""
    for d in enumerate_dags(3):
        explicit = decide(full_model(d, ABC))
        basis = decide(local_basis(d, ABC))
        assert basis.is_witness
        assert is_equivalent(explicit.witness, basis.witness)
        assert explicit.pattern == basis.pattern


def test_decide_agrees_with_bruteforce_on_mutated_models():
    """Test drop-one and add-one mutations of dag models against exhaustive search."""
    rng = random.Random(2718)
    spaces = {n: list(enumerate_dags(n)) for n in (3, 4)}
    for _ in range(250):
        n = rng.choice((3, 4))
        universe = Universe.of_size(n)
        d = rng.choice(spaces[n])
        keys = set(full_model(d, universe).keys())
        if keys and rng.random() < 0.5:
            keys.remove(rng.choice(sorted(keys)))
        else:
            missing = [t for t in canonical_triples(n) if t not in keys]
            if not missing:
                continue
            keys.add(rng.choice(missing))
        model = DependencyModel.explicit(universe, [from_bits(*t) for t in keys])

        decision = decide(model)
        found = is_dag_isomorphic_bruteforce(model)
        assert decision.is_witness == (found is not None), model.format()
        if found is not None:
            assert is_equivalent(decision.witness, found)


def test_trace_is_sequenced():
    """Test gapless sequence numbers and known event kinds."""
    chain = full_model(Dag(3, [(0, 1), (1, 2)]), ABC)
    decision = decide(chain, trace=True)
    assert decision.witness == Dag(3, [(0, 1), (1, 2)])
    assert [e.seq for e in decision.trace] == list(range(1, len(decision.trace) + 1))
    assert all(e.kind in EVENT_KINDS for e in decision.trace)
    assert [e.kind for e in decision.trace] == [
        EDGE_REMOVED, PHASE_VERDICT, CHOICE_PUSHED, RULE_FIRED, PHASE_VERDICT, PHASE_VERDICT,
    ]
    assert decide(chain).trace == ()


@pytest.mark.smoke
def test_phase1_time_grows_slowly_with_model_size():
    """Test a roughly linear trend of Phase 1 time in the statement count."""
    rng = random.Random(99)
    universe = Universe.of_size(12)
    triples = set()
    timings = []
    for size in (100, 1000, 10000):
        while len(triples) < size:
            roles = [rng.randrange(4) for _ in range(12)]
            masks = [sum(1 << v for v, r in enumerate(roles) if r == k) for k in (1, 2, 3)]
            if masks[0] and masks[1]:
                triples.add(from_bits(*masks).bits)
        model = DependencyModel.explicit(universe, [from_bits(*t) for t in triples])
        start = time.perf_counter()
        phase1(model)
        timings.append(time.perf_counter() - start)

    # hundredfold more statements, allow a thousandfold more time
    assert timings[2] <= max(1.0, 1000 * timings[0])
