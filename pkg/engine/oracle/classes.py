"""Markov equivalence classes of labeled dags."""

from collections import defaultdict
from typing import Dict, List, Optional, Tuple

from engine.graph.dag import Dag
from engine.graph.ops import equivalence_key
from engine.oracle.enumerate import enumerate_dags


def equivalence_classes(n: int, cap: Optional[int] = None) -> List[Tuple[Dag, ...]]:
    """
    Partition the dags on n nodes by skeleton and vee set.

    Classes keep enumeration order and are listed in order of their first member.

    Raises:
        TooLarge: If n exceeds the enumeration cap
    """
    groups: Dict[tuple, List[Dag]] = defaultdict(list)
    for d in enumerate_dags(n, cap=cap):
        groups[equivalence_key(d)].append(d)
    return [tuple(members) for members in groups.values()]
