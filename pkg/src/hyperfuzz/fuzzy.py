"""Fuzzy subsets with exact rational grades and sup-min composition."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .core import HyperGroupoid, preimage_pairs
from .errors import CarrierMismatch, GradeOutOfRange, NotAssociative, ZeroDenominator

Grade = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def grade(p: int, q: int = 1) -> Fraction:
    """The grade ``p/q`` in lowest terms; it must lie in ``[0, 1]``."""
    if q == 0:
        raise ZeroDenominator(f"zero denominator in {p}/{q}")
    if q < 0 or p < 0 or p > q:
        raise GradeOutOfRange(f"grade {p}/{q} is outside [0, 1]")
    return Fraction(p, q)


def as_grade(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("grades must be exact; got a float")
    if isinstance(value, str):
        value = Fraction(value)
    value = Fraction(value)
    if not ZERO <= value <= ONE:
        raise GradeOutOfRange(f"grade {value} is outside [0, 1]")
    return value


def format_grade(g: Fraction) -> str:
    return str(g.numerator) if g.denominator == 1 else f"{g.numerator}/{g.denominator}"


def grade_grid(k: int) -> tuple[Fraction, ...]:
    """``0, 1/k, ..., 1``."""
    if k < 1:
        raise ValueError("grid parameter must be >= 1")
    return tuple(Fraction(i, k) for i in range(k + 1))


@dataclass(frozen=True)
class FuzzySubset:
    """A total map from the carrier of ``carrier`` into ``[0, 1]``."""

    carrier: HyperGroupoid
    grades: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.grades) != self.carrier.size:
            raise ValueError(f"{len(self.grades)} grades for a carrier of size {self.carrier.size}")

    @classmethod
    def of(cls, h: HyperGroupoid, values: Sequence | Mapping[str, object]) -> "FuzzySubset":
        """From a sequence in element order, or a mapping of element names."""
        if isinstance(values, Mapping):
            missing = set(h.names) - set(values)
            if missing:
                raise ValueError(f"no grade for {sorted(missing)}")
            values = [values[s] for s in h.names]
        return cls(h, tuple(as_grade(v) for v in values))

    def __call__(self, x: int) -> Fraction:
        return self.grades[x]

    def __str__(self) -> str:
        body = ", ".join(f"{s}->{format_grade(g)}" for s, g in zip(self.carrier.names, self.grades))
        return "{" + body + "}"


def _same_carrier(h: HyperGroupoid, *fs: FuzzySubset) -> None:
    for f in fs:
        if f.carrier is not h and f.carrier != h:
            raise CarrierMismatch("fuzzy subset lives on a different hypergroupoid")


def constant(h: HyperGroupoid, value) -> FuzzySubset:
    return FuzzySubset(h, (as_grade(value),) * h.size)


def constant_one(h: HyperGroupoid) -> FuzzySubset:
    return FuzzySubset(h, (ONE,) * h.size)


def constant_zero(h: HyperGroupoid) -> FuzzySubset:
    return FuzzySubset(h, (ZERO,) * h.size)


def leq(f: FuzzySubset, g: FuzzySubset) -> bool:
    _same_carrier(f.carrier, g)
    return all(a <= b for a, b in zip(f.grades, g.grades))


def meet(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    _same_carrier(f.carrier, g)
    return FuzzySubset(f.carrier, tuple(min(a, b) for a, b in zip(f.grades, g.grades)))


def compose(h: HyperGroupoid, f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    """Sup-min product: ``(f o g)(a) = max min(f(y), g(z))`` over ``a in y o z``.

    Elements that lie in no cell get grade 0.
    """
    _same_carrier(h, f, g)
    fg, gg = f.grades, g.grades
    out = []
    for a in h.elements:
        best = ZERO
        for y, z in preimage_pairs(h, a):
            m = fg[y] if fg[y] < gg[z] else gg[z]
            if m > best:
                best = m
        out.append(best)
    return FuzzySubset(h, tuple(out))


def compose3(h: HyperGroupoid, f: FuzzySubset, g: FuzzySubset, k: FuzzySubset) -> FuzzySubset:
    """``f o g o k`` on a hypersemigroup, where the bracketing does not matter."""
    _same_carrier(h, f, g, k)
    if not h.is_associative:
        raise NotAssociative("f o g o k is only bracket-free on a hypersemigroup")
    return compose(h, compose(h, f, g), k)
