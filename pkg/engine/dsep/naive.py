"""d-separation by enumerating every simple path of the skeleton."""

from typing import Sequence

import networkx as nx

from engine.dsep.query import DsepQuery
from engine.graph.dag import Dag


def skeleton_graph(d: Dag) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(d.n))
    g.add_edges_from(d.skeleton())
    return g


def path_is_active(d: Dag, path: Sequence[int], z: int) -> bool:
    """
    Every head-to-head node has a directed path into z (z itself counts) and
    every other interior node is outside z.
    """
    for prev, node, nxt in zip(path, path[1:], path[2:]):
        if d.is_directed(prev, node) and d.is_directed(nxt, node):
            if not d.descendants(node) & z:
                return False
        elif z >> node & 1:
            return False
    return True


def d_separated_naive(d: Dag, q: DsepQuery) -> bool:
    """
    Literal reading of the definition over all simple paths.

    Exponential in the node count; meant for graphs of about eight nodes.

    Raises:
        InvalidQuery: If the query sets are empty, overlap, or leave d's nodes
    """
    q.validate(d)
    g = skeleton_graph(d)
    z = q.z.bits
    for source in q.x:
        for target in q.y:
            for path in nx.all_simple_paths(g, source, target):
                if path_is_active(d, path, z):
                    return False
    return True
