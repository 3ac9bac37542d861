"""Graphviz DOT rendering of dags and pdags."""

from typing import List, Optional

from engine.graph.base import MixedGraph
from engine.model.universe import Universe


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: MixedGraph, universe: Optional[Universe] = None, name: str = "G") -> str:
    """
    Directed DOT document for g.

    Undirected edges are written low -> high with dir=none so dags and
    pdags share one document type. Edges are sorted.
    """
    universe = universe or Universe.of_size(g.n)
    lines: List[str] = [f"digraph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {_quote(universe.name(v))};")
    for tail, head in sorted(g.directed_edges()):
        lines.append(f"  {_quote(universe.name(tail))} -> {_quote(universe.name(head))};")
    for a, b in sorted(g.undirected_edges()):
        lines.append(f"  {_quote(universe.name(a))} -> {_quote(universe.name(b))} [dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
