"""Finite hypergroupoids.

Elements are the integers ``0..n-1``; each carries a display name. A cell of
the table, and any other subset of the carrier, is a ``frozenset`` of
element indices, so two subsets are equal exactly when their contents are.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any, Iterable, Mapping, Sequence

from .errors import (
    BudgetExceeded,
    DuplicateCell,
    DuplicateName,
    EmptyCarrier,
    EmptyCell,
    EmptyOperand,
    InvalidName,
    MissingCell,
    UnknownElement,
)

MAX_CARRIER_SIZE = 16

ElementSet = frozenset  # frozenset[int]
Pair = tuple[int, int]

_BAD_NAME = re.compile(r"[\s:{}#]")


def _default_names(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:n])
    return tuple(f"e{i}" for i in range(n))


@dataclass(frozen=True)
class CheckReport:
    """Verdict of a predicate check.

    ``witness`` is present exactly when the check failed. Its keys depend on
    the check; element entries are indices and grade entries are fractions,
    so the witness can be re-validated against the raw table.
    """

    passed: bool
    check: str
    method: str | None = None
    witness: Mapping[str, Any] | None = None

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("a failing report needs a witness, a passing one must not have one")

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class HyperGroupoid:
    """A finite set with a hyperoperation ``x o y`` into nonempty subsets.

    Build instances with :func:`build_hypergroupoid` (named cells) or
    :meth:`from_table` (index table); both validate the table.
    """

    names: tuple[str, ...]
    table: tuple[tuple[frozenset, ...], ...] = field(repr=False)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[Iterable[int]]],
                   names: Sequence[str] | None = None,
                   max_size: int = MAX_CARRIER_SIZE) -> "HyperGroupoid":
        n = len(table)
        if n == 0:
            raise EmptyCarrier("carrier must be nonempty")
        if n > max_size:
            raise BudgetExceeded(f"carrier size {n} exceeds limit {max_size}")
        names = _default_names(n) if names is None else tuple(names)
        _check_names(names)
        if len(names) != n:
            raise ValueError(f"{len(names)} names for a {n}x{n} table")
        rows = []
        for x, row in enumerate(table):
            if len(row) != n:
                raise ValueError(f"row {x} has {len(row)} cells, expected {n}")
            cells = []
            for y, cell in enumerate(row):
                cell = frozenset(cell)
                if not cell:
                    raise EmptyCell(f"cell ({names[x]}, {names[y]}) is empty")
                for e in cell:
                    if not (isinstance(e, int) and 0 <= e < n):
                        raise UnknownElement(f"cell ({names[x]}, {names[y]}) references {e!r}")
                cells.append(cell)
            rows.append(tuple(cells))
        return cls(names, tuple(rows))

    @classmethod
    def from_masks(cls, n: int, masks: Sequence[int],
                   names: Sequence[str] | None = None) -> "HyperGroupoid":
        """Table from ``n*n`` row-major bitmasks (bit ``e`` set iff ``e`` in the cell)."""
        cells = [frozenset(e for e in range(n) if m >> e & 1) for m in masks]
        return cls.from_table([cells[x * n:(x + 1) * n] for x in range(n)], names)

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    @property
    def carrier(self) -> frozenset:
        return frozenset(self.elements)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(f"unknown element {name!r}") from None

    def subset(self, *names: str) -> frozenset:
        return frozenset(self.index(s) for s in names)

    def show(self, elems: Iterable[int]) -> str:
        return "{" + ", ".join(self.names[e] for e in sorted(elems)) + "}"

    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << e for e in cell) for row in self.table for cell in row)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.names)}

    @cached_property
    def _preimages(self) -> tuple[tuple[Pair, ...], ...]:
        found: list[list[Pair]] = [[] for _ in self.elements]
        for y, z in product(self.elements, repeat=2):
            for a in self.table[y][z]:
                found[a].append((y, z))
        return tuple(tuple(sorted(p)) for p in found)

    @cached_property
    def associativity(self) -> CheckReport:
        return is_hypersemigroup(self)

    @property
    def is_associative(self) -> bool:
        return self.associativity.passed


def _check_names(names: Sequence[str]) -> None:
    if not names:
        raise EmptyCarrier("carrier must be nonempty")
    seen = set()
    for s in names:
        if not isinstance(s, str) or not s or _BAD_NAME.search(s):
            raise InvalidName(f"invalid element name {s!r}")
        if s in seen:
            raise DuplicateName(f"duplicate element name {s!r}")
        seen.add(s)


def build_hypergroupoid(names: Sequence[str],
                        cells: Iterable[tuple[tuple[str, str], Iterable[str]]],
                        max_size: int = MAX_CARRIER_SIZE) -> HyperGroupoid:
    """Build a hypergroupoid from named cells ``((x, y), members)``.

    Every ordered pair must be given exactly once and every cell must be
    nonempty.
    """
    names = tuple(names)
    _check_names(names)
    index = {s: i for i, s in enumerate(names)}

    def lookup(token):
        try:
            return index[token]
        except KeyError:
            raise UnknownElement(f"unknown element {token!r}") from None

    n = len(names)
    table: list[list[frozenset | None]] = [[None] * n for _ in range(n)]
    for (xs, ys), members in cells:
        x, y = lookup(xs), lookup(ys)
        if table[x][y] is not None:
            raise DuplicateCell(f"cell ({xs}, {ys}) given twice")
        cell = frozenset(lookup(m) for m in members)
        if not cell:
            raise EmptyCell(f"cell ({xs}, {ys}) is empty")
        table[x][y] = cell
    for x, y in product(range(n), repeat=2):
        if table[x][y] is None:
            raise MissingCell(f"cell ({names[x]}, {names[y]}) is missing")
    return HyperGroupoid.from_table(table, names, max_size=max_size)


def hyperop(h: HyperGroupoid, x: int, y: int) -> frozenset:
    return h.table[x][y]


def star(h: HyperGroupoid, A: Iterable[int], B: Iterable[int]) -> frozenset:
    """Induced product ``A*B``: the union of ``a o b`` over ``a`` in A, ``b`` in B."""
    A, B = frozenset(A), frozenset(B)
    if not A or not B:
        raise EmptyOperand("the induced product is defined on nonempty subsets only")
    out: set[int] = set()
    for a in A:
        row = h.table[a]
        for b in B:
            out |= row[b]
    return frozenset(out)


def preimage_pairs(h: HyperGroupoid, a: int) -> tuple[Pair, ...]:
    """All ordered pairs ``(y, z)`` with ``a`` in ``y o z``, in index order."""
    return h._preimages[a]


def is_hypersemigroup(h: HyperGroupoid) -> CheckReport:
    """Check ``(x o y)*{z} == {x}*(y o z)`` for every triple.

    The first failing triple in lexicographic order is reported together
    with both sides.
    """
    for x, y, z in product(h.elements, repeat=3):
        left = star(h, h.table[x][y], (z,))
        right = star(h, (x,), h.table[y][z])
        if left != right:
            return CheckReport(False, "associativity",
                               witness={"x": x, "y": y, "z": z, "left": left, "right": right})
    return CheckReport(True, "associativity")


def relabel(h: HyperGroupoid, perm: Sequence[int]) -> HyperGroupoid:
    """Isomorphic copy where old element ``i`` becomes ``perm[i]`` (names travel along)."""
    n = h.size
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm!r} is not a permutation of 0..{n - 1}")
    table: list[list[frozenset]] = [[frozenset()] * n for _ in range(n)]
    for x, y in product(range(n), repeat=2):
        table[perm[x]][perm[y]] = frozenset(perm[e] for e in h.table[x][y])
    names = [""] * n
    for i, s in enumerate(h.names):
        names[perm[i]] = s
    return HyperGroupoid.from_table(table, names)


def left_zero(names: Sequence[str]) -> HyperGroupoid:
    """``x o y = {x}``."""
    n = len(names)
    return HyperGroupoid.from_table([[{x}] * n for x in range(n)], names)


def right_zero(names: Sequence[str]) -> HyperGroupoid:
    """``x o y = {y}``."""
    n = len(names)
    return HyperGroupoid.from_table([[{y} for y in range(n)] for _ in range(n)], names)


def full(names: Sequence[str]) -> HyperGroupoid:
    """``x o y = H``."""
    n = len(names)
    return HyperGroupoid.from_table([[range(n)] * n for _ in range(n)], names)
