"""Line-oriented text formats.

``.hg`` (hypergroupoid)::

    # comment
    elements: a b
    a a : a
    a b : a b
    b a : b
    b b : b

``.fz`` (fuzzy subset)::

    a 1/2
    b 1

Diagnostics carry 1-based line and column. Errors that concern the whole
document (a cell or element never given) point one line past the end.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Iterator

from .core import HyperGroupoid
from .errors import (
    DuplicateCell,
    DuplicateElement,
    DuplicateName,
    EmptyCarrier,
    EmptySet,
    FormatSyntaxError,
    GradeOutOfRange,
    MissingCell,
    MissingElement,
    UnknownElement,
    ZeroDenominator,
)
from .fuzzy import FuzzySubset, format_grade

_TOKEN = re.compile(r"[^\s:]+|:")
_GRADE = re.compile(r"(\d+)(?:/(\d+))?")
_HEADER = "elements"


def _lines(text: str) -> Iterator[tuple[int, list[tuple[str, int]]]]:
    """Nonblank lines as ``(lineno, [(token, col), ...])``; ``:`` is its own token."""
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if tokens:
            yield lineno, tokens


def _end(text: str) -> tuple[int, int]:
    return len(text.splitlines()) + 1, 1


def _check_token(tok: str, lineno: int, col: int) -> None:
    bad = re.search(r"[{}]", tok)
    if bad:
        raise FormatSyntaxError(f"unexpected {bad.group()!r}", lineno, col + bad.start())


def parse_hypergroupoid(text: str) -> HyperGroupoid:
    lines = _lines(text.lstrip("﻿"))
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise FormatSyntaxError("missing 'elements:' header", *_end(text)) from None
    if len(tokens) < 2 or tokens[0][0] != _HEADER or tokens[1][0] != ":":
        raise FormatSyntaxError("expected 'elements:' header", lineno, tokens[0][1])
    names: list[str] = []
    index: dict[str, int] = {}
    for tok, col in tokens[2:]:
        if tok == ":":
            raise FormatSyntaxError("unexpected ':'", lineno, col)
        _check_token(tok, lineno, col)
        if tok in index:
            raise DuplicateName(f"duplicate element name {tok!r}", lineno, col)
        index[tok] = len(names)
        names.append(tok)
    if not names:
        raise EmptyCarrier("no elements declared", lineno, tokens[1][1] + 1)
    n = len(names)

    def lookup(tok, lineno, col):
        _check_token(tok, lineno, col)
        if tok not in index:
            raise UnknownElement(f"unknown element {tok!r}", lineno, col)
        return index[tok]

    table: list[list[frozenset | None]] = [[None] * n for _ in range(n)]
    for lineno, tokens in lines:
        colons = [i for i, (tok, _) in enumerate(tokens) if tok == ":"]
        if not colons:
            last, col = tokens[-1]
            raise FormatSyntaxError("expected ':'", lineno, col + len(last))
        if len(colons) > 1:
            raise FormatSyntaxError("unexpected ':'", lineno, tokens[colons[1]][1])
        sep = colons[0]
        left, right = tokens[:sep], tokens[sep + 1:]
        if len(left) != 2:
            col = left[2][1] if len(left) > 2 else (left[0][1] if left else tokens[0][1])
            raise FormatSyntaxError("expected two elements before ':'", lineno, col)
        x, y = (lookup(tok, lineno, col) for tok, col in left)
        if table[x][y] is not None:
            raise DuplicateCell(f"cell ({names[x]}, {names[y]}) given twice", lineno, left[0][1])
        if not right:
            raise EmptySet(f"cell ({names[x]}, {names[y]}) is empty", lineno, tokens[sep][1])
        cell: set[int] = set()
        for tok, col in right:
            e = lookup(tok, lineno, col)
            if e in cell:
                raise FormatSyntaxError(f"element {tok!r} listed twice", lineno, col)
            cell.add(e)
        table[x][y] = frozenset(cell)
    for x, y in product(range(n), repeat=2):
        if table[x][y] is None:
            raise MissingCell(f"cell ({names[x]}, {names[y]}) is missing", *_end(text))
    return HyperGroupoid.from_table(table, names)


def render_hypergroupoid(h: HyperGroupoid) -> str:
    out = [f"elements: {' '.join(h.names)}"]
    for x, y in product(h.elements, repeat=2):
        members = " ".join(h.names[e] for e in sorted(h.table[x][y]))
        out.append(f"{h.names[x]} {h.names[y]} : {members}")
    return "\n".join(out) + "\n"


def parse_grade(tok: str, lineno: int | None = None, col: int | None = None) -> Fraction:
    """``0``, ``1`` or ``p/q``; decimals are rejected rather than rounded."""
    m = _GRADE.fullmatch(tok)
    if not m:
        raise FormatSyntaxError(f"bad grade {tok!r}; expected 0, 1 or p/q", lineno, col)
    p, q = int(m.group(1)), int(m.group(2) or 1)
    if q == 0:
        raise ZeroDenominator(f"zero denominator in {tok!r}", lineno, col)
    if p > q:
        raise GradeOutOfRange(f"grade {tok} is outside [0, 1]", lineno, col)
    return Fraction(p, q)


def parse_fuzzy(text: str, h: HyperGroupoid) -> FuzzySubset:
    grades: list[Fraction | None] = [None] * h.size
    for lineno, tokens in _lines(text.lstrip("﻿")):
        if len(tokens) != 2:
            col = tokens[2][1] if len(tokens) > 2 else tokens[0][1] + len(tokens[0][0])
            raise FormatSyntaxError("expected '<element> <grade>'", lineno, col)
        (name, ncol), (value, vcol) = tokens
        if name == ":" or value == ":":
            raise FormatSyntaxError("unexpected ':'", lineno, ncol if name == ":" else vcol)
        if name not in h.names:
            raise UnknownElement(f"unknown element {name!r}", lineno, ncol)
        x = h.index(name)
        if grades[x] is not None:
            raise DuplicateElement(f"element {name!r} assigned twice", lineno, ncol)
        grades[x] = parse_grade(value, lineno, vcol)
    for x, g in enumerate(grades):
        if g is None:
            raise MissingElement(f"no grade for element {h.names[x]!r}", *_end(text))
    return FuzzySubset(h, tuple(grades))


def render_fuzzy(f: FuzzySubset) -> str:
    return "".join(f"{s} {format_grade(g)}\n" for s, g in zip(f.carrier.names, f.grades))


def read_hypergroupoid(path) -> HyperGroupoid:
    return parse_hypergroupoid(Path(path).read_text(encoding="utf-8"))


def read_fuzzy(path, h: HyperGroupoid) -> FuzzySubset:
    return parse_fuzzy(Path(path).read_text(encoding="utf-8"), h)
