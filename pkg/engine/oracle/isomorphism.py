"""Dag-isomorphism decided by exhaustive search."""

from functools import lru_cache
from typing import Dict, FrozenSet, Optional

from engine.core.config import DEFAULT_CONFIG
from engine.core.errors import TooLarge
from engine.dsep.model import full_model
from engine.graph.dag import Dag
from engine.model.closure import Triple
from engine.model.dependency import DependencyModel
from engine.oracle.enumerate import enumerate_dags


@lru_cache(maxsize=None)
def _full_model_index(n: int) -> Dict[FrozenSet[Triple], Dag]:
    """Full-model key set of every dag on n nodes, mapped to the first dag producing it."""
    index: Dict[FrozenSet[Triple], Dag] = {}
    for d in enumerate_dags(n, cap=n):
        index.setdefault(full_model(d, cap=n).keys(), d)
    return index


def is_dag_isomorphic_bruteforce(
    model: DependencyModel,
    n: Optional[int] = None,
    cap: Optional[int] = None,
) -> Optional[Dag]:
    """
    First enumerated dag whose full model equals model, or None.

    Raises:
        TooLarge: If the universe exceeds the brute-force cap
        ValueError: If n disagrees with the universe size
    """
    size = len(model.universe)
    if n is not None and n != size:
        raise ValueError(f"Universe has {size} variables, expected {n}")
    cap = DEFAULT_CONFIG.bruteforce_cap if cap is None else cap
    if size > cap:
        raise TooLarge(size, cap, "brute-force isomorphism")
    return _full_model_index(size).get(model.keys())
