"""Exhaustive enumeration of labeled dags."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterator, List, Optional, Tuple

from engine.core.config import DEFAULT_CONFIG
from engine.core.errors import CycleDetected, TooLarge
from engine.graph.base import Edge
from engine.graph.dag import Dag

logger = logging.getLogger(__name__)

# per node pair: absent, low -> high, high -> low
_ABSENT, _FORWARD, _BACKWARD = 0, 1, 2


@dataclass(frozen=True)
class DagSpace:
    """Every labeled dag on n nodes, each exactly once, in enumeration order."""
    n: int
    dags: Tuple[Dag, ...]

    def __len__(self) -> int:
        return len(self.dags)

    def __iter__(self) -> Iterator[Dag]:
        return iter(self.dags)

    def __getitem__(self, index: int) -> Dag:
        return self.dags[index]


def _orientations(n: int) -> Iterator[List[Edge]]:
    pairs = list(combinations(range(n), 2))
    for states in product((_ABSENT, _FORWARD, _BACKWARD), repeat=len(pairs)):
        edges = []
        for (a, b), state in zip(pairs, states):
            if state == _FORWARD:
                edges.append((a, b))
            elif state == _BACKWARD:
                edges.append((b, a))
        yield edges


def enumerate_dags(n: int, cap: Optional[int] = None) -> DagSpace:
    """
    All labeled dags on n nodes.

    Every orientation of every edge subset of the complete graph is tried
    and the cyclic ones are dropped.

    Raises:
        TooLarge: If n exceeds the enumeration cap
    """
    cap = DEFAULT_CONFIG.enumeration_cap if cap is None else cap
    if n > cap:
        raise TooLarge(n, cap, "dag enumeration")
    return _enumerate(n)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> DagSpace:
    dags = []
    for edges in _orientations(n):
        try:
            dags.append(Dag(n, edges))
        except CycleDetected:
            continue
    logger.info("Enumerated %d labeled dags on %d nodes", len(dags), n)
    return DagSpace(n, tuple(dags))


@lru_cache(maxsize=None)
def labeled_dag_count(n: int) -> int:
    """
    Number of labeled dags on n nodes by inclusion-exclusion over the source set.

    a(0) = 1, a(n) = sum over k of (-1)^(k+1) C(n, k) 2^(k(n-k)) a(n-k).
    """
    if n < 0:
        raise ValueError(f"Node count must be nonnegative, got {n}")
    if n == 0:
        return 1
    return sum(
        (-1) ** (k + 1) * comb(n, k) * 2 ** (k * (n - k)) * labeled_dag_count(n - k)
        for k in range(1, n + 1)
    )
