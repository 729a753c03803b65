"""Fuzzy right, left, quasi- and bi-ideals.

Every predicate can be decided two ways. ``DEFINITION`` sweeps the element
tuples named in the ideal's definition against raw table lookups.
``CHARACTERIZATION`` builds a composite fuzzy subset with :func:`compose` and
compares it to ``f`` under the pointwise order. The two code paths share
nothing beyond the table itself, which is what makes their agreement a
meaningful check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from .core import CheckReport, HyperGroupoid, star
from .errors import CarrierMismatch, NotAssociative
from .fuzzy import FuzzySubset, compose, compose3, constant_one, meet


class Method(str, enum.Enum):
    DEFINITION = "definition"
    CHARACTERIZATION = "characterization"


class IdealKind(str, enum.Enum):
    RIGHT = "right"
    LEFT = "left"
    QUASI = "quasi"
    BI = "bi"


def _require_carrier(h: HyperGroupoid, f: FuzzySubset) -> None:
    if f.carrier is not h and f.carrier != h:
        raise CarrierMismatch("fuzzy subset lives on a different hypergroupoid")


def _compare(check: str, bound: FuzzySubset, f: FuzzySubset) -> CheckReport:
    # first element where bound(a) > f(a)
    for a, (lhs, fa) in enumerate(zip(bound.grades, f.grades)):
        if lhs > fa:
            return CheckReport(False, check, Method.CHARACTERIZATION.value,
                               {"a": a, "lhs": lhs, "f_a": fa})
    return CheckReport(True, check, Method.CHARACTERIZATION.value)


# -- definition sweeps -------------------------------------------------------

def _right_definition(h: HyperGroupoid, f: FuzzySubset) -> CheckReport:
    g = f.grades
    for x, y in product(h.elements, repeat=2):
        for u in sorted(h.table[x][y]):
            if g[u] < g[x]:
                return CheckReport(False, "right", Method.DEFINITION.value,
                                   {"x": x, "y": y, "u": u, "f_u": g[u], "f_x": g[x]})
    return CheckReport(True, "right", Method.DEFINITION.value)


def _left_definition(h: HyperGroupoid, f: FuzzySubset) -> CheckReport:
    g = f.grades
    for x, y in product(h.elements, repeat=2):
        for u in sorted(h.table[x][y]):
            if g[u] < g[y]:
                return CheckReport(False, "left", Method.DEFINITION.value,
                                   {"x": x, "y": y, "u": u, "f_u": g[u], "f_y": g[y]})
    return CheckReport(True, "left", Method.DEFINITION.value)


def _quasi_definition(h: HyperGroupoid, f: FuzzySubset) -> CheckReport:
    g, t_ = f.grades, h.table
    E = h.elements
    for x in E:
        for b, s, t, c in product(E, repeat=4):
            if x in t_[b][s] and x in t_[t][c] and g[x] < min(g[b], g[c]):
                return CheckReport(False, "quasi", Method.DEFINITION.value,
                                   {"x": x, "b": b, "s": s, "t": t, "c": c,
                                    "f_x": g[x], "f_b": g[b], "f_c": g[c]})
    return CheckReport(True, "quasi", Method.DEFINITION.value)


def bi_definition_sweep(h: HyperGroupoid, f: FuzzySubset) -> CheckReport:
    """Definition sweep for bi-ideals with no associativity precondition.

    Only meant for experiments off the hypersemigroup slice; use
    :func:`check_bi_ideal` for the actual predicate.
    """
    g = f.grades
    for x, y, z in product(h.elements, repeat=3):
        bound = min(g[x], g[z])
        for u in sorted(star(h, h.table[x][y], (z,))):
            if g[u] < bound:
                return CheckReport(False, "bi", Method.DEFINITION.value,
                                   {"x": x, "y": y, "z": z, "u": u,
                                    "f_u": g[u], "f_x": g[x], "f_z": g[z]})
    return CheckReport(True, "bi", Method.DEFINITION.value)


# -- public checks -------------------------------------------------------------

def check_right_ideal(h: HyperGroupoid, f: FuzzySubset,
                      method: Method | str = Method.DEFINITION) -> CheckReport:
    """``u in x o y`` implies ``f(u) >= f(x)``; equivalently ``f o 1 <= f``."""
    _require_carrier(h, f)
    if Method(method) is Method.DEFINITION:
        return _right_definition(h, f)
    return _compare("right", compose(h, f, constant_one(h)), f)


def check_left_ideal(h: HyperGroupoid, f: FuzzySubset,
                     method: Method | str = Method.DEFINITION) -> CheckReport:
    """``u in x o y`` implies ``f(u) >= f(y)``; equivalently ``1 o f <= f``."""
    _require_carrier(h, f)
    if Method(method) is Method.DEFINITION:
        return _left_definition(h, f)
    return _compare("left", compose(h, constant_one(h), f), f)


def check_quasi_ideal(h: HyperGroupoid, f: FuzzySubset,
                      method: Method | str = Method.DEFINITION) -> CheckReport:
    _require_carrier(h, f)
    if Method(method) is Method.DEFINITION:
        return _quasi_definition(h, f)
    one = constant_one(h)
    return _compare("quasi", meet(compose(h, f, one), compose(h, one, f)), f)


def check_bi_ideal(h: HyperGroupoid, f: FuzzySubset,
                   method: Method | str = Method.DEFINITION) -> CheckReport:
    """Bi-ideal test; ``h`` must be a hypersemigroup for either method."""
    _require_carrier(h, f)
    if not h.is_associative:
        raise NotAssociative("bi-ideals are only defined on hypersemigroups")
    if Method(method) is Method.DEFINITION:
        return bi_definition_sweep(h, f)
    return _compare("bi", compose3(h, f, constant_one(h), f), f)


CHECKS = {
    IdealKind.RIGHT: check_right_ideal,
    IdealKind.LEFT: check_left_ideal,
    IdealKind.QUASI: check_quasi_ideal,
    IdealKind.BI: check_bi_ideal,
}


def check_ideal(h: HyperGroupoid, f: FuzzySubset, kind: IdealKind | str,
                method: Method | str = Method.DEFINITION) -> CheckReport:
    return CHECKS[IdealKind(kind)](h, f, method)


@dataclass(frozen=True)
class IdealProfile:
    right: bool
    left: bool
    quasi: bool
    bi: bool | None  # None when the carrier is not a hypersemigroup
    associative: bool

    def as_dict(self) -> dict:
        return {"right": self.right, "left": self.left, "quasi": self.quasi,
                "bi": self.bi, "associative": self.associative}


def classify(h: HyperGroupoid, f: FuzzySubset) -> IdealProfile:
    _require_carrier(h, f)
    assoc = h.is_associative
    return IdealProfile(
        right=_right_definition(h, f).passed,
        left=_left_definition(h, f).passed,
        quasi=_quasi_definition(h, f).passed,
        bi=bi_definition_sweep(h, f).passed if assoc else None,
        associative=assoc,
    )
