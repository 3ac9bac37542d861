"""
Semigraphoid closure over bit-vector statements.

A statement is handled here as a directed triple (w, v, z) of bit vectors
meaning I(w, v | z). Both orientations of every statement are kept so that
decomposition and weak union only ever split the right-hand side.
"""

import logging
from collections import defaultdict, deque
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Set, Tuple

Triple = Tuple[int, int, int]
_Index = Dict[Tuple[int, int], Set[int]]

logger = logging.getLogger(__name__)


def submasks(mask: int) -> Iterator[int]:
    """Nonempty submasks of mask, mask itself included."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def canonical(t: Triple) -> Triple:
    """Symmetry normal form: the side holding the smaller lowest index comes first."""
    w, v, z = t
    if (v & -v) < (w & -w):
        return v, w, z
    return t


def consequences(t: Triple, index: _Index) -> Iterator[Triple]:
    """
    Statements derivable from t in one axiom application.

    index maps (w, z) to every v with I(w, v | z) already known; it supplies
    the second premise of contraction.
    """
    w, v, z = t
    yield v, w, z
    for part in submasks(v):
        if part == v:
            continue
        rest = v & ~part
        yield w, part, z
        yield w, part, z | rest
    # t as I(w, y | z): partner I(w, x | y z)
    for x in index.get((w, v | z), ()):
        yield w, x | v, z
    # t as I(w, x | c): partner I(w, y | c - y)
    for y in submasks(z):
        if y in index.get((w, z & ~y), ()):
            yield w, v | y, z & ~y


def semigraphoid_fixpoint(basis: Iterable[Triple]) -> FrozenSet[Triple]:
    """
    Least fixpoint of basis under symmetry, decomposition, weak union and contraction.

    Returns canonical triples.
    """
    known: Set[Triple] = set()
    index: _Index = defaultdict(set)
    worklist: deque = deque()

    for t in basis:
        if t not in known:
            known.add(t)
            worklist.append(t)

    while worklist:
        t = worklist.popleft()
        for derived in consequences(t, index):
            if derived not in known:
                known.add(derived)
                worklist.append(derived)
        index[(t[0], t[2])].add(t[1])

    closed = frozenset(canonical(t) for t in known)
    logger.debug("Closure fixpoint reached with %d statements", len(closed))
    return closed


def closure_gap(statements: Iterable[Triple]) -> Optional[Triple]:
    """
    First canonical statement derivable in one step but missing from statements.

    A set with no gap is closed. Triples are visited in sorted order so the
    answer is deterministic.
    """
    canon = sorted({canonical(t) for t in statements}, key=_triple_order)
    directed: Set[Triple] = set()
    index: _Index = defaultdict(set)
    for w, v, z in canon:
        for t in ((w, v, z), (v, w, z)):
            directed.add(t)
            index[(t[0], t[2])].add(t[1])

    for w, v, z in canon:
        for t in ((w, v, z), (v, w, z)):
            for derived in consequences(t, index):
                if derived not in directed:
                    return canonical(derived)
    return None


def _members(mask: int) -> Tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _triple_order(t: Triple) -> tuple:
    return _members(t[0]), _members(t[1]), bin(t[2]).count("1"), _members(t[2])
