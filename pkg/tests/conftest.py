"""Shared fixtures: one engine, exhaustive small universes, random forms.

The day-2 universe is every form whose options come from the four day-1
forms (256 of them).  The day-3 universe is built from antichain pairs
over the 22 day-2 values, which reaches every value born by day 3.  The
random day-4 forms draw options from a seeded pool of day-3 forms, so
every run sees the same positions.
"""

from __future__ import annotations

import random

import pytest

from diamondcgt.engine import Engine

import oracle


@pytest.fixture(scope="session")
def engine():
    return Engine()


def _subsets(items):
    out = [()]
    for item in items:
        out.extend([s + (item,) for s in out])
    return out


@pytest.fixture(scope="session")
def day1_forms(engine):
    zero = engine.zero
    return (
        zero,
        engine.intern((zero,), ()),
        engine.intern((), (zero,)),
        engine.intern((zero,), (zero,)),
    )


@pytest.fixture(scope="session")
def day2_forms(engine, day1_forms):
    return tuple(
        engine.intern(left, right)
        for left in _subsets(day1_forms)
        for right in _subsets(day1_forms)
    )


@pytest.fixture(scope="session")
def day2_values(engine, day2_forms):
    return tuple(sorted({engine.canonical_form(g) for g in day2_forms}))


@pytest.fixture(scope="session")
def day2_antichains(engine, day2_values):
    """Every option set usable in a canonical day-3 form, empty included."""
    found = []

    def extend(index, acc):
        if index == len(day2_values):
            found.append(tuple(acc))
            return
        candidate = day2_values[index]
        if all(
            engine.compare(candidate, other).symbol == "||" for other in acc
        ):
            acc.append(candidate)
            extend(index + 1, acc)
            acc.pop()
        extend(index + 1, acc)

    extend(0, [])
    return tuple(found)


@pytest.fixture(scope="session")
def day3_forms(engine, day2_antichains):
    return tuple(
        engine.intern(left, right)
        for left in day2_antichains
        for right in day2_antichains
    )


@pytest.fixture(scope="session")
def day3_values(engine, day3_forms):
    return tuple(sorted({engine.canonical_form(g) for g in day3_forms}))


@pytest.fixture(scope="session")
def random_day4_forms(engine, day2_forms):
    rng = random.Random(20260815)
    pool3 = [
        engine.intern(
            tuple(rng.sample(day2_forms, rng.randint(0, 3))),
            tuple(rng.sample(day2_forms, rng.randint(0, 3))),
        )
        for _ in range(400)
    ]
    pool = list(day2_forms) + pool3
    return tuple(
        engine.intern(
            tuple(rng.sample(pool, rng.randint(0, 3))),
            tuple(rng.sample(pool, rng.randint(0, 3))),
        )
        for _ in range(1000)
    )


@pytest.fixture(scope="session")
def to_oracle(engine):
    """Translate an interned position into the oracle's representation."""
    memo: dict = {}

    def convert(g: int) -> oracle.OGame:
        cached = memo.get(g)
        if cached is None:
            cached = oracle.OGame(
                [convert(x) for x in engine.left_options(g)],
                [convert(x) for x in engine.right_options(g)],
            )
            memo[g] = cached
        return cached

    return convert
