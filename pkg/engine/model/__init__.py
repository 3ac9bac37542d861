"""Dependency models: statements, closure and separator queries."""

from engine.model.dependency import (
    DependencyModel,
    Origin,
    any_separator_contains,
    close_semigraphoid,
    contains,
    has_separator,
    iter_separators,
    separator_table,
)
from engine.model.statement import Statement, canonicalize
from engine.model.universe import Universe, VarId, VarSet

__all__ = [
    "DependencyModel",
    "Origin",
    "Statement",
    "Universe",
    "VarId",
    "VarSet",
    "any_separator_contains",
    "canonicalize",
    "close_semigraphoid",
    "contains",
    "has_separator",
    "iter_separators",
    "separator_table",
]
