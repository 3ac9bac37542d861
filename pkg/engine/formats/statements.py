"""
Line-based statement file format.

    # comment
    vars: a b c
    I(a ; c | b)
    I(a, b ; c |)

Identifiers within a set are separated by commas or spaces; the
conditioning set may be empty.
"""

import re
from typing import Iterable, List, NamedTuple, Optional, Tuple

from engine.core.errors import InputError, ParseError
from engine.model.statement import Statement, canonicalize
from engine.model.universe import NAME_PATTERN, Universe, VarSet

_VARS = re.compile(r"^vars\s*:(?P<names>.*)$")
_STATEMENT = re.compile(
    r"^I\s*\((?P<lhs>[^;|()]*);(?P<rhs>[^;|()]*)\|(?P<cond>[^;|()]*)\)$"
)
_TOKEN = re.compile(r"[^,\s]+")


class ParsedInput(NamedTuple):
    universe: Universe
    statements: Tuple[Statement, ...]


def _identifiers(text: str, line: int, offset: int) -> List[Tuple[str, int]]:
    """Identifiers of a comma-or-space separated list with their 1-based columns."""
    found = []
    for match in _TOKEN.finditer(text):
        name = match.group()
        column = offset + match.start() + 1
        if not NAME_PATTERN.match(name):
            raise ParseError(f"Invalid identifier {name!r}", line, column)
        found.append((name, column))
    return found


def _varset(universe: Universe, names: List[Tuple[str, int]], line: int) -> VarSet:
    bits = VarSet()
    for name, column in names:
        try:
            bits = bits | VarSet.single(universe.index(name))
        except InputError as e:
            raise type(e)(f"line {line}, column {column}: {e}") from None
    return bits


def parse_input(text: str) -> ParsedInput:
    """
    Parse a statement file into a universe and its canonical statements.

    Duplicate statements, in either orientation, are kept once.

    Raises:
        ParseError: On a grammar violation, a second vars line, or a statement before vars
        UnknownVariable: If a statement names an undeclared variable
        OverlappingSets: If two sets of a statement share a variable
        EmptySide: If a statement has an empty left or right side
    """
    universe: Optional[Universe] = None
    statements = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        stripped = content.strip()
        if not stripped:
            continue
        indent = len(content) - len(content.lstrip())

        declared = _VARS.match(stripped)
        if declared:
            if universe is not None:
                raise ParseError("Variables already declared", number, indent + 1)
            offset = indent + declared.start("names")
            names = [name for name, _ in _identifiers(declared.group("names"), number, offset)]
            try:
                universe = Universe(names)
            except InputError as e:
                raise ParseError(str(e), number, indent + 1) from None
            continue

        found = _STATEMENT.match(stripped)
        if not found:
            raise ParseError(f"Expected 'vars:' or 'I(A ; B | C)', got {stripped!r}", number, indent + 1)
        if universe is None:
            raise ParseError("Statement before the 'vars:' declaration", number, indent + 1)

        sides = []
        for group in ("lhs", "rhs", "cond"):
            names = _identifiers(found.group(group), number, indent + found.start(group))
            sides.append(_varset(universe, names, number))
        try:
            s = canonicalize(Statement(*sides), universe)
        except InputError as e:
            raise type(e)(f"line {number}: {e}") from None
        statements.setdefault(s.bits, s)

    if universe is None:
        raise ParseError("Missing 'vars:' declaration", max(1, len(text.splitlines())))
    ordered = tuple(sorted(statements.values(), key=Statement.sort_key))
    return ParsedInput(universe, ordered)


def emit_text(universe: Universe, statements: Iterable[Statement]) -> str:
    """Render a statement file that parse_input() reads back to the same input."""
    lines = ["vars: " + " ".join(universe.names)]
    lines += [s.format(universe) for s in sorted(statements, key=Statement.sort_key)]
    return "\n".join(lines) + "\n"
