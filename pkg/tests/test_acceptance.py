"""Acceptance criteria, one test per criterion.

Each criterion prints a ``[PASS]``/``[FAIL]`` line (visible with ``pytest -s``).
Run ``python tests/test_acceptance.py`` for the summary lines alone.
"""

import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import all_tables, associative  # noqa: E402
from hyperfuzz import (  # noqa: E402
    FuzzySubset,
    compose,
    hyperop,
    leq,
    meet,
    star,
)
from hyperfuzz.explore import (  # noqa: E402
    VerificationScope,
    _sample_masks,
    canonical_key,
    enumerate_hypergroupoids,
    random_instance,
    verify_theorem,
)
from hyperfuzz.formats import (  # noqa: E402
    parse_hypergroupoid,
    read_fuzzy,
    read_hypergroupoid,
    render_hypergroupoid,
)

FIXTURES = Path(__file__).parent / "fixtures"

# n=2 hypersemigroups, counted by the dict-based oracle and frozen
ASSOCIATIVE_TABLES_N2 = 30
SAMPLE_SEED = 2016


def _report(number, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    return ok, detail


def _exhaustive(number, theorem, k, expected, seconds):
    r = verify_theorem(theorem, VerificationScope(2, k))
    ok = r.instances == expected and r.disagreements == 0 and r.elapsed < seconds
    return _report(number, ok, f"{theorem} n=2 k={k}: {r.instances - r.disagreements}/{r.instances} "
                               f"agree, expected {expected}, {r.elapsed:.2f}s (limit {seconds}s)")


def criterion_1():
    return _exhaustive(1, "T4", 2, 729, 1)


def criterion_2():
    return _exhaustive(2, "T6", 2, 729, 1)


def criterion_3():
    return _exhaustive(3, "T8", 2, 729, 5)


def criterion_4():
    oracle = sum(associative(t, 2) for t in all_tables(2))
    r = verify_theorem("T11", VerificationScope(2, 2, assoc_only=True))
    expected = ASSOCIATIVE_TABLES_N2 * 9
    ok = (oracle == ASSOCIATIVE_TABLES_N2 and r.instances == expected
          and r.disagreements == 0 and r.elapsed < 5)
    return _report(4, ok, f"T11 n=2 k=2 on {oracle} hypersemigroups: "
                          f"{r.instances - r.disagreements}/{r.instances} agree, {r.elapsed:.2f}s")


def criterion_5():
    r = verify_theorem("P9", VerificationScope(2, 1, assoc_only=True))
    expected = ASSOCIATIVE_TABLES_N2 * 4 ** 3
    ok = r.instances == expected and r.disagreements == 0 and r.elapsed < 10
    return _report(5, ok, f"P9 n=2 k=1: {r.instances - r.disagreements}/{r.instances} "
                          f"triples equal under both bracketings, {r.elapsed:.2f}s")


def criterion_6():
    r = verify_theorem("NOTE", VerificationScope(2, 2, assoc_only=True))
    ok = r.instances == ASSOCIATIVE_TABLES_N2 * 9 and r.disagreements == 0
    return _report(6, ok, f"one-sided => bi over {r.instances} instances: {r.disagreements} violations")


def _sampled_run():
    reports = []
    for theorem in ("T4", "T6", "T8", "T11", "P9"):
        scope = VerificationScope.sampled(3, 2, 1000, SAMPLE_SEED)
        reports.append(verify_theorem(theorem, scope))
    return reports


def criterion_7():
    _sample_masks.cache_clear()
    start = time.perf_counter()
    first = _sampled_run()
    elapsed = time.perf_counter() - start
    second = _sampled_run()
    same = [a.render(timing=False) for a in first] == [b.render(timing=False) for b in second]
    bad = sum(r.disagreements for r in first)
    counts = all(r.instances == 1000 for r in first)
    ok = bad == 0 and counts and same and elapsed < 60
    return _report(7, ok, f"n=3 k=2 M=1000 x T4/T6/T8/T11/P9: {bad} disagreements, "
                          f"{elapsed:.1f}s (limit 60s), reports identical across runs: {same}")


def _random_subset(rng, n):
    members = [e for e in range(n) if rng.random() < 0.5]
    return frozenset(members or [rng.randrange(n)])


def criterion_8():
    failures = []
    for i in range(500):
        n = 1 + i % 4
        h, f = random_instance(n, 4, seed=i)
        rng = random.Random(i)
        g = FuzzySubset(h, tuple(Fraction(rng.randrange(5), 4) for _ in range(n)))
        k = FuzzySubset(h, tuple(Fraction(rng.randrange(5), 4) for _ in range(n)))
        A, B = _random_subset(rng, n), _random_subset(rng, n)
        AB = star(h, A, B)
        for x in h.elements:
            if (x in AB) != any(x in hyperop(h, a, b) for a in A for b in B):
                failures.append((i, "membership"))
        if not all(hyperop(h, a, b) <= AB for a in A for b in B):
            failures.append((i, "cells inside product"))
        A2, B2 = A | _random_subset(rng, n), B | _random_subset(rng, n)
        if not (star(h, A, B) <= star(h, A2, B2) and star(h, B, A) <= star(h, B2, A2)):
            failures.append((i, "monotone"))
        if not star(h, h.carrier, h.carrier) <= h.carrier:
            failures.append((i, "closure"))
        if any(star(h, {x}, {y}) != hyperop(h, x, y) for x in h.elements for y in h.elements):
            failures.append((i, "singleton"))
        if not set(compose(h, f, g).grades) <= {Fraction(0)} | set(f.grades) | set(g.grades):
            failures.append((i, "grade closure"))
        m = meet(f, g)
        below = meet(k, m)
        if not (leq(m, f) and leq(m, g) and leq(below, m)
                and (not (leq(k, f) and leq(k, g)) or leq(k, m))):
            failures.append((i, "infimum"))
    return _report(8, not failures, f"500 seeded instances (n<=4): {len(failures)} failures"
                                    + (f", first {failures[0]}" if failures else ""))


def criterion_9():
    tables = list(enumerate_hypergroupoids(2))
    roundtrips = sum(parse_hypergroupoid(render_hypergroupoid(h)) == h for h in tables)
    expected = json.loads((FIXTURES / "errors" / "expected.json").read_text())
    carrier = read_hypergroupoid(FIXTURES / "lz.hg")
    matched = 0
    for name, (cls, line, col) in expected.items():
        path = FIXTURES / "errors" / name
        try:
            read_hypergroupoid(path) if name.endswith(".hg") else read_fuzzy(path, carrier)
        except Exception as e:
            matched += type(e).__name__ == cls and (e.line, e.col) == (line, col)
    ok = roundtrips == 81 and matched == len(expected) and len(expected) >= 10
    return _report(9, ok, f"round-trip {roundtrips}/81, error fixtures {matched}/{len(expected)}")


def criterion_10():
    one = list(enumerate_hypergroupoids(1))
    two = list(enumerate_hypergroupoids(2))
    classes = {}
    for h in two:
        classes[canonical_key(h)] = classes.get(canonical_key(h), 0) + 1
    ok = (len(set(one)) == len(one) == 1 and len(set(two)) == len(two) == 81
          and sum(classes.values()) == 81)
    return _report(10, ok, f"n=1: {len(one)}, n=2: {len(set(two))} distinct, "
                           f"{len(classes)} isomorphism classes summing to {sum(classes.values())}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__)
def test_acceptance(criterion):
    ok, detail = criterion()
    assert ok, detail


if __name__ == "__main__":
    results = [c()[0] for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
