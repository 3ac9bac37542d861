"""
d-separation by reachability over (node, direction) states.

A trail is followed edge by edge, remembering whether the current node was
entered from a child (moving up) or from a parent (moving down). A node
entered from a parent may pass the trail on to its parents only if it is a
collider that is active: it lies in the ancestor closure of z, which holds
exactly when it has a directed path (possibly of length zero) into z.
"""

from typing import Set, Tuple

from engine.dsep.query import DsepQuery
from engine.graph.base import iter_bits
from engine.graph.dag import Dag

_UP = 0
_DOWN = 1


def reachable(d: Dag, x: int, z: int) -> int:
    """Bit vector of nodes joined to some node of x by a trail active given z."""
    active_colliders = d.ancestors(z)
    visited: Set[Tuple[int, int]] = set()
    stack = [(v, _UP) for v in iter_bits(x)]
    found = 0

    while stack:
        v, direction = stack.pop()
        if (v, direction) in visited:
            continue
        visited.add((v, direction))
        in_z = bool(z >> v & 1)
        if not in_z:
            found |= 1 << v

        if direction == _UP and not in_z:
            stack.extend((p, _UP) for p in iter_bits(d.parents(v)))
            stack.extend((c, _DOWN) for c in iter_bits(d.children(v)))
        elif direction == _DOWN:
            if not in_z:
                stack.extend((c, _DOWN) for c in iter_bits(d.children(v)))
            if active_colliders >> v & 1:
                stack.extend((p, _UP) for p in iter_bits(d.parents(v)))
    return found


def d_separated(d: Dag, q: DsepQuery) -> bool:
    """
    True iff every path between q.x and q.y is blocked by q.z.

    Raises:
        InvalidQuery: If the query sets are empty, overlap, or leave d's nodes
    """
    q.validate(d)
    return not reachable(d, q.x.bits, q.z.bits) & q.y.bits
