"""Instance enumeration, seeded sampling and the theorem-verification harness."""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from itertools import permutations, product
from math import factorial
from typing import Callable, Iterator

from .core import HyperGroupoid
from .errors import BudgetExceeded
from .fuzzy import FuzzySubset, compose, constant_one, format_grade, grade_grid, leq
from .ideals import (
    Method,
    bi_definition_sweep,
    check_bi_ideal,
    check_left_ideal,
    check_quasi_ideal,
    check_right_ideal,
)

DEFAULT_BUDGET = 2_000_000
MAX_REJECTIONS = 100_000

THEOREMS = ("T4", "T6", "T8", "T11", "P9", "NOTE")
ASSOCIATIVE_ONLY = frozenset({"T11", "P9", "NOTE"})

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"


def budget() -> int:
    """Instance-count ceiling; ``HYPERFUZZ_BUDGET`` overrides the default."""
    raw = os.environ.get("HYPERFUZZ_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"HYPERFUZZ_BUDGET must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"HYPERFUZZ_BUDGET must be a positive integer, got {raw!r}")
    return value


def _within_budget(count: int, what: str, limit: int | None) -> None:
    limit = budget() if limit is None else limit
    if count > limit:
        raise BudgetExceeded(f"{what}: {count} instances exceed budget {limit}")


def table_count(n: int) -> int:
    return (2 ** n - 1) ** (n * n)


# -- enumeration -----------------------------------------------------------------

def enumerate_hypergroupoids(n: int, limit: int | None = None) -> Iterator[HyperGroupoid]:
    """Every table on ``n`` elements, once each.

    Cells are taken row-major and each counts through the nonempty subsets in
    bitmask order; the last cell varies fastest.
    """
    if n < 1:
        raise ValueError("carrier size must be >= 1")
    _within_budget(table_count(n), f"hypergroupoids of size {n}", limit)
    for masks in product(range(1, 2 ** n), repeat=n * n):
        yield HyperGroupoid.from_masks(n, masks)


def enumerate_fuzzy_subsets(h: HyperGroupoid, k: int, limit: int | None = None) -> Iterator[FuzzySubset]:
    """All ``(k+1)**n`` maps into ``{0, 1/k, ..., 1}``, lexicographically."""
    grid = grade_grid(k)
    _within_budget(len(grid) ** h.size, f"fuzzy subsets on grid {k}", limit)
    for grades in product(grid, repeat=h.size):
        yield FuzzySubset(h, grades)


@lru_cache(maxsize=None)
def _bits(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(e for e in range(n) if m >> e & 1) for m in range(2 ** n))


def masks_associative(n: int, masks) -> bool:
    """Associativity on a row-major mask table, without building objects."""
    bits = _bits(n)
    for x in range(n):
        for y in range(n):
            xy = bits[masks[x * n + y]]
            for z in range(n):
                left = 0
                for w in xy:
                    left |= masks[w * n + z]
                right = 0
                for w in bits[masks[y * n + z]]:
                    right |= masks[x * n + w]
                if left != right:
                    return False
    return True


def _draw_masks(rng: random.Random, n: int) -> tuple[int, ...]:
    # one draw, decoded base (2**n - 1): uniform over all tables
    base = 2 ** n - 1
    v = rng.randrange(table_count(n))
    out = []
    for _ in range(n * n):
        v, d = divmod(v, base)
        out.append(d + 1)
    return tuple(out)


@lru_cache(maxsize=4096)
def _sample_masks(n: int, seed, i: int, assoc_only: bool) -> tuple[int, ...]:
    rng = random.Random(f"hyperfuzz:{seed}:{i}:table")
    masks = _draw_masks(rng, n)
    tries = 1
    while assoc_only and not masks_associative(n, masks):
        if tries >= MAX_REJECTIONS:
            raise BudgetExceeded(f"no hypersemigroup of size {n} after {tries} draws")
        masks = _draw_masks(rng, n)
        tries += 1
    return masks


def _random_fuzzy(rng: random.Random, h: HyperGroupoid, k: int) -> FuzzySubset:
    return FuzzySubset(h, tuple(Fraction(rng.randrange(k + 1), k) for _ in h.elements))


def sample(n: int, k: int, seed, i: int = 0, arity: int = 1,
           assoc_only: bool = False) -> tuple[HyperGroupoid, tuple[FuzzySubset, ...]]:
    """Instance ``i`` of the stream named by ``seed``.

    Tables and grades come from separate per-instance generators, so the
    table of instance ``i`` does not depend on ``k`` or ``arity``.
    Associative tables are found by rejection.
    """
    # str seeds hash through sha512, so streams are stable across processes
    h = HyperGroupoid.from_masks(n, _sample_masks(n, seed, i, assoc_only))
    rng = random.Random(f"hyperfuzz:{seed}:{i}:grades")
    return h, tuple(_random_fuzzy(rng, h, k) for _ in range(arity))


def random_instance(n: int, k: int, seed) -> tuple[HyperGroupoid, FuzzySubset]:
    """A table with uniform nonempty cells and a fuzzy subset with uniform grid grades."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    h, (f,) = sample(n, k, seed)
    return h, f


# -- canonical form ------------------------------------------------------------

def canonical_key(h: HyperGroupoid, limit: int | None = None) -> tuple:
    """Least row-major mask serialization over all relabelings of ``h``.

    Names are ignored, so two tables share a key exactly when they are
    isomorphic.
    """
    n = h.size
    _within_budget(factorial(n), f"relabelings of size {n}", limit)
    masks = h.masks()
    best = None
    for p in permutations(range(n)):
        out = [0] * (n * n)
        for x, y in product(range(n), repeat=2):
            m = masks[x * n + y]
            out[p[x] * n + p[y]] = sum(1 << p[e] for e in range(n) if m >> e & 1)
        t = tuple(out)
        if best is None or t < best:
            best = t
    return (n, best)


# -- verification ----------------------------------------------------------------

@dataclass(frozen=True)
class VerificationScope:
    n: int
    k: int = 2
    mode: str = EXHAUSTIVE
    samples: int | None = None
    seed: int | None = None
    assoc_only: bool = False

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be >= 1")
        if self.mode not in (EXHAUSTIVE, SAMPLED):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == SAMPLED and (self.samples is None or self.samples < 1 or self.seed is None):
            raise ValueError("sampled scopes need samples >= 1 and an explicit seed")

    @classmethod
    def sampled(cls, n: int, k: int, samples: int, seed: int, assoc_only: bool = False):
        return cls(n, k, SAMPLED, samples, seed, assoc_only)

    def describe(self) -> str:
        s = f"n={self.n} k={self.k} {self.mode}"
        if self.mode == SAMPLED:
            s += f" samples={self.samples} seed={self.seed}"
        if self.assoc_only:
            s += " assoc-only"
        return s

    def as_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "mode": self.mode, "samples": self.samples,
                "seed": self.seed, "assoc_only": self.assoc_only}


def instances(scope: VerificationScope, arity: int = 1,
              limit: int | None = None) -> Iterator[tuple[HyperGroupoid, tuple[FuzzySubset, ...]]]:
    """``(table, fuzzy subsets)`` pairs covering the scope, ``arity`` subsets each."""
    n, k = scope.n, scope.k
    if scope.mode == EXHAUSTIVE:
        _within_budget(table_count(n) * (k + 1) ** (n * arity), f"scope {scope.describe()}", limit)
        grid = grade_grid(k)
        assignments = list(product(grid, repeat=n))
        for h in enumerate_hypergroupoids(n, limit=table_count(n)):
            if scope.assoc_only and not h.is_associative:
                continue
            fuzzies = [FuzzySubset(h, g) for g in assignments]
            for fs in product(fuzzies, repeat=arity):
                yield h, fs
        return
    for i in range(scope.samples):
        yield sample(n, k, scope.seed, i, arity, scope.assoc_only)


def _methods_disagree(check) -> Callable:
    def compare(h, fs):
        d = check(h, fs[0], Method.DEFINITION)
        c = check(h, fs[0], Method.CHARACTERIZATION)
        if d.passed != c.passed:
            return {"definition": d.passed, "characterization": c.passed}
        return None
    return compare


def _bracketings_differ(h, fs):
    f, g, k = fs
    left = compose(h, compose(h, f, g), k)
    right = compose(h, f, compose(h, g, k))
    if left != right:
        return {"left": [format_grade(v) for v in left.grades],
                "right": [format_grade(v) for v in right.grades]}
    return None


def _note_violated(h, fs):
    f = fs[0]
    for method in Method:
        bi = check_bi_ideal(h, f, method).passed
        right = check_right_ideal(h, f, method).passed
        left = check_left_ideal(h, f, method).passed
        if (right or left) and not bi:
            return {"method": method.value, "right": right, "left": left, "bi": bi}
    return None


_COMPARATORS = {
    "T4": (_methods_disagree(check_right_ideal), 1),
    "T6": (_methods_disagree(check_left_ideal), 1),
    "T8": (_methods_disagree(check_quasi_ideal), 1),
    "T11": (_methods_disagree(check_bi_ideal), 1),
    "P9": (_bracketings_differ, 3),
    "NOTE": (_note_violated, 1),
}


def _instance_record(index: int, h: HyperGroupoid, fs, detail) -> dict:
    return {
        "index": index,
        "names": list(h.names),
        "table": [[[h.names[e] for e in sorted(cell)] for cell in row] for row in h.table],
        "fuzzy": [[format_grade(v) for v in f.grades] for f in fs],
        "detail": detail,
    }


@dataclass(frozen=True)
class VerificationReport:
    scope: VerificationScope
    theorem: str
    instances: int
    disagreements: int
    first: dict | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return self.disagreements == 0

    def as_dict(self) -> dict:
        return {"theorem": self.theorem, "scope": self.scope.as_dict(),
                "instances": self.instances, "disagreements": self.disagreements,
                "first_disagreement": self.first}

    def render(self, timing: bool = True) -> str:
        lines = [
            f"theorem: {self.theorem}",
            f"scope: {self.scope.describe()}",
            f"{self.instances} instances, {self.disagreements} disagreements",
        ]
        if self.first is not None:
            f = self.first
            lines.append(f"first disagreement: instance {f['index']}")
            for s, row in zip(f["names"], f["table"]):
                for t, cell in zip(f["names"], row):
                    lines.append(f"  {s} {t} : {' '.join(cell)}")
            for grades in f["fuzzy"]:
                lines.append("  fuzzy: " + " ".join(f"{s}={g}" for s, g in zip(f["names"], grades)))
            lines.append(f"  detail: {f['detail']}")
        if timing:
            lines.append(f"time: {self.elapsed:.3f}s")
        return "\n".join(lines) + "\n"


def verify_theorem(theorem: str, scope: VerificationScope, limit: int | None = None) -> VerificationReport:
    """Cross-check one theorem over every instance in ``scope``.

    T11, P9 and NOTE need hypersemigroups, so the associative-only filter is
    switched on for them regardless of the scope given.
    """
    theorem = theorem.upper()
    if theorem not in _COMPARATORS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")
    if theorem in ASSOCIATIVE_ONLY and not scope.assoc_only:
        scope = VerificationScope(scope.n, scope.k, scope.mode, scope.samples, scope.seed, True)
    compare, arity = _COMPARATORS[theorem]
    start = time.perf_counter()
    count = bad = 0
    first = None
    for i, (h, fs) in enumerate(instances(scope, arity, limit)):
        count += 1
        detail = compare(h, fs)
        if detail is not None:
            bad += 1
            if first is None:
                first = _instance_record(i, h, fs, detail)
    return VerificationReport(scope, theorem, count, bad, first, time.perf_counter() - start)


# -- counterexample search --------------------------------------------------------

def _off_assoc_t11(bracket: str):
    def prop(h, fs):
        if h.is_associative:
            return None
        f = fs[0]
        one = constant_one(h)
        if bracket == "left":
            bound = compose(h, compose(h, f, one), f)
        else:
            bound = compose(h, f, compose(h, one, f))
        d = bi_definition_sweep(h, f).passed
        c = leq(bound, f)
        return {"definition": d, "characterization": c} if d != c else None
    return prop


def _bi_not_one_sided(h, fs):
    if not h.is_associative:
        return None
    f = fs[0]
    if (check_bi_ideal(h, f).passed and not check_right_ideal(h, f).passed
            and not check_left_ideal(h, f).passed):
        return {"bi": True, "right": False, "left": False}
    return None


PROPERTIES: dict[str, tuple[Callable, int]] = {
    "non-associative": (lambda h, fs: None if h.is_associative
                        else {"triple": [h.associativity.witness[v] for v in "xyz"]}, 1),
    "bi-not-one-sided": (_bi_not_one_sided, 1),
    "T11-nonassoc-left": (_off_assoc_t11("left"), 1),
    "T11-nonassoc-right": (_off_assoc_t11("right"), 1),
    **{f"{t}-disagreement": v for t, v in _COMPARATORS.items()},
}


@dataclass(frozen=True)
class Counterexample:
    property: str
    index: int
    hypergroupoid: HyperGroupoid
    fuzzy: tuple[FuzzySubset, ...]
    detail: dict

    def as_dict(self) -> dict:
        return {"property": self.property,
                **_instance_record(self.index, self.hypergroupoid, self.fuzzy, self.detail)}


def find_counterexample(prop: str, scope: VerificationScope,
                        limit: int | None = None) -> Counterexample | None:
    """First instance of ``scope`` (in iteration order) witnessing ``prop``.

    ``None`` only means nothing was found inside the scope searched.
    """
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; expected one of {', '.join(PROPERTIES)}")
    test, arity = PROPERTIES[prop]
    for i, (h, fs) in enumerate(instances(scope, arity, limit)):
        detail = test(h, fs)
        if detail is not None:
            return Counterexample(prop, i, h, fs, detail)
    return None
