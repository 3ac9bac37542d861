"""Variables, variable sets and the declared universe."""

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple, Union

from engine.core.errors import InputError, UnknownVariable

NAME_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")


class VarId(NamedTuple):
    """Dense index plus declared name of a variable."""
    index: int
    name: str


@dataclass(frozen=True, order=False)
class VarSet:
    """
    Immutable set of variable indices stored as a bit vector.

    Bit i is set iff the variable with index i is a member.
    """
    bits: int = 0

    @classmethod
    def of(cls, indices: Iterable[int]) -> "VarSet":
        bits = 0
        for i in indices:
            if i < 0:
                raise InputError(f"Variable index must be nonnegative, got {i}")
            bits |= 1 << i
        return cls(bits)

    @classmethod
    def single(cls, index: int) -> "VarSet":
        return cls(1 << index)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and index >= 0 and bool(self.bits >> index & 1)

    def __or__(self, other: "VarSet") -> "VarSet":
        return VarSet(self.bits | other.bits)

    def __and__(self, other: "VarSet") -> "VarSet":
        return VarSet(self.bits & other.bits)

    def __sub__(self, other: "VarSet") -> "VarSet":
        return VarSet(self.bits & ~other.bits)

    def isdisjoint(self, other: "VarSet") -> bool:
        return not self.bits & other.bits

    def issubset(self, other: "VarSet") -> bool:
        return self.bits & ~other.bits == 0

    def sort_key(self) -> Tuple[int, ...]:
        """Lexicographic key over ascending member indices."""
        return tuple(self)

    def __repr__(self) -> str:
        return f"VarSet({sorted(self)})"


class Universe:
    """
    Declared variables in declaration order.

    Declaration order fixes the index of every variable and therefore the
    canonical order of statements.
    """

    def __init__(self, names: Sequence[str]):
        seen = set()
        for name in names:
            if not isinstance(name, str) or not NAME_PATTERN.match(name):
                raise InputError(f"Invalid variable name: {name!r}")
            if name in seen:
                raise InputError(f"Duplicate variable name: {name}")
            seen.add(name)
        self._names: Tuple[str, ...] = tuple(names)
        self._index = {name: i for i, name in enumerate(self._names)}

    @classmethod
    def of_size(cls, n: int) -> "Universe":
        """Universe named a, b, c, ... (v0, v1, ... beyond 26 variables)."""
        if n <= 26:
            return cls([chr(ord("a") + i) for i in range(n)])
        return cls([f"v{i}" for i in range(n)])

    @property
    def names(self) -> Tuple[str, ...]:
        return self._names

    @property
    def variables(self) -> Tuple[VarId, ...]:
        return tuple(VarId(i, name) for i, name in enumerate(self._names))

    @property
    def full(self) -> VarSet:
        return VarSet((1 << len(self._names)) - 1)

    def __len__(self) -> int:
        return len(self._names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Universe) and self._names == other._names

    def __hash__(self) -> int:
        return hash(self._names)

    def __repr__(self) -> str:
        return f"Universe({list(self._names)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"Unknown variable: {name}") from None

    def name(self, index: int) -> str:
        return self._names[index]

    def var(self, ref: Union[str, int, VarId]) -> VarId:
        """Resolve a name, index or VarId against this universe."""
        if isinstance(ref, VarId):
            ref = ref.index
        if isinstance(ref, str):
            i = self.index(ref)
        else:
            i = ref
            if not 0 <= i < len(self._names):
                raise UnknownVariable(f"Unknown variable index: {i}")
        return VarId(i, self._names[i])

    def varset(self, refs: Iterable[Union[str, int, VarId]]) -> VarSet:
        return VarSet.of(self.var(r).index for r in refs)

    def check(self, varset: VarSet) -> None:
        """Raise UnknownVariable if varset reaches outside this universe."""
        if not varset.issubset(self.full):
            outside = sorted(varset - self.full)
            raise UnknownVariable(f"Variables outside universe: {outside}")

    def format(self, varset: VarSet) -> List[str]:
        return [self._names[i] for i in varset]
