"""Dyadic values, number trees, classification, and simplest members."""

from __future__ import annotations

import random

import pytest

from diamondcgt.values import Dyadic, NumberSystem, Relation, ValueKind

import oracle as o

Z = NumberSystem.Z
D = NumberSystem.D


def test_dyadic_normalization_and_text():
    assert Dyadic(4, 2) == Dyadic(1)
    assert Dyadic(-6, 1) == Dyadic(-3)
    assert str(Dyadic(3)) == "3"
    assert str(Dyadic(-3, 2)) == "-3/4"
    assert Dyadic(1, 1).pair == (1, 1)
    assert Dyadic.from_pair((6, 1)) == Dyadic(3)
    assert float(Dyadic(1, 1).as_fraction()) == 0.5
    assert Dyadic(1, 1) < Dyadic(3, 2) < Dyadic(1)
    assert Dyadic(5, 0).is_integer and not Dyadic(5, 1).is_integer
    assert Dyadic(1, 1).in_system(D) and not Dyadic(1, 1).in_system(Z)


def test_number_positions_are_the_canonical_trees(engine):
    two = engine.number_position(2)
    assert engine.left_options(two) == (engine.number_position(1),)
    assert engine.right_options(two) == ()
    half = engine.number_position(Dyadic(1, 1))
    assert engine.left_options(half) == (engine.zero,)
    assert engine.right_options(half) == (engine.number_position(1),)
    minus_three_quarters = engine.number_position(Dyadic(-3, 2))
    assert engine.left_options(minus_three_quarters) == (
        engine.number_position(-1),
    )
    assert engine.right_options(minus_three_quarters) == (
        engine.number_position(Dyadic(-1, 1)),
    )


def test_as_number_and_membership(engine):
    assert engine.as_number(engine.zero, Z) == Dyadic(0)
    half = engine.number_position(Dyadic(1, 1))
    assert engine.as_number(half, D) == Dyadic(1, 1)
    assert engine.as_number(half, Z) is None
    assert engine.as_number(engine.star(), D) is None
    zeroish = engine.intern(
        (engine.number_position(-1),), (engine.number_position(1),)
    )
    assert engine.as_number(zeroish, Z) == Dyadic(0)


def test_classify_value_kinds(engine):
    star = engine.star()
    v = engine.classify_value(star)
    assert v.kind is ValueKind.PAIR and v.left == Dyadic(0) and v.right == Dyadic(0)
    pair = engine.intern((engine.zero,), (engine.number_position(-3),))
    v = engine.classify_value(pair)
    assert v.kind is ValueKind.PAIR and (v.left, v.right) == (Dyadic(0), Dyadic(-3))
    up = engine.intern((engine.zero,), (star,))
    assert engine.classify_value(up).kind is ValueKind.OTHER
    assert engine.classify_value(engine.number_position(2)).kind is ValueKind.NUMBER


def test_pair_set_membership(engine):
    half = engine.number_position(Dyadic(1, 1))
    quarter = engine.number_position(Dyadic(1, 2))
    assert engine.in_pair_set(half, Z)
    assert not engine.in_pair_set(quarter, Z)
    assert engine.in_pair_set(quarter, D)
    assert engine.in_pair_set(engine.star(), Z)
    half_pair = engine.intern((half,), (engine.number_position(-3),))
    assert engine.in_pair_set(half_pair, D)
    assert not engine.in_pair_set(half_pair, Z)
    up = engine.intern((engine.zero,), (engine.star(),))
    assert not engine.in_pair_set(up, D)


def test_number_values_match_oracle(engine, to_oracle):
    grid = [Dyadic(n, e) for n in range(-8, 9) for e in range(0, 3)]
    for d in grid:
        pos = engine.number_position(d)
        assert o.eq(to_oracle(pos), o.dyadic(d.numerator, d.exponent))


def test_numbers_with_options_are_also_pairs(engine, day3_values):
    # the canonical tree of a number with any options has number options,
    # so every such value doubles as a pair over the dyadics
    for g in day3_values:
        value = engine.as_number(g, D)
        if value is None:
            continue
        lefts, rights = engine.left_options(g), engine.right_options(g)
        if lefts or rights:
            for opt in lefts + rights:
                assert engine.as_number(opt, D) is not None


def test_pair_versus_number_threshold(engine):
    # a pair with crossed entries sits less-or-fuzzy against y exactly
    # when its right entry is at most y
    grid = [Dyadic(n, e) for n in range(-4, 5) for e in range(0, 3)]
    pairs = [
        (x1, x2)
        for x1 in grid
        for x2 in grid
        if not x1 < x2
    ]
    samples = random.Random(31).sample(pairs, 120)
    for x1, x2 in samples:
        pair = engine.intern(
            (engine.number_position(x1),), (engine.number_position(x2),)
        )
        for y in (Dyadic(-2), Dyadic(0), Dyadic(2), Dyadic(1, 1), Dyadic(-3, 2)):
            ypos = engine.number_position(y)
            lhs = engine.compare(pair, ypos).less_or_fuzzy
            assert lhs == (x2 <= y)


def test_simplest_in_open_interval_examples():
    from diamondcgt.kernel import backend

    simplest = backend.simplest_in_open_interval
    assert simplest((0, 0), (1, 0)) == (1, 1)
    assert simplest((-1, 0), (1, 0)) == (0, 0)
    assert simplest((0, 0), (3, 0)) == (1, 0)
    assert simplest((1, 2), (3, 3)) == (5, 4)
    assert simplest((-5, 1), (-1, 0)) == (-2, 0)


def test_simplest_between_examples(engine):
    zero = engine.zero
    one = engine.number_position(1)
    star = engine.star()
    assert engine.simplest_between((zero,), (one,), D) == Dyadic(1, 1)
    assert engine.simplest_between((zero,), (one,), Z) is None
    assert engine.simplest_between((), (), Z) == Dyadic(0)
    assert engine.simplest_between((one,), (), Z) == Dyadic(2)
    assert engine.simplest_between((), (zero,), Z) == Dyadic(-1)
    assert engine.simplest_between((zero,), (zero,), D) is None
    assert engine.simplest_between((star,), (star,), D) == Dyadic(0)
    # a switch is fuzzy with everything in its shadow, so 0 still fits
    pair = engine.intern((one,), (zero,))
    assert engine.simplest_between((pair,), (), Z) == Dyadic(0)


def test_simplest_between_prefers_integers_then_small_denominators(engine):
    half = engine.number_position(Dyadic(1, 1))
    three_halves = engine.number_position(Dyadic(3, 1))
    assert engine.simplest_between((half,), (three_halves,), D) == Dyadic(1)
    quarter = engine.number_position(Dyadic(1, 2))
    half_pos = engine.number_position(Dyadic(1, 1))
    assert engine.simplest_between((quarter,), (half_pos,), D) == Dyadic(3, 3)


@pytest.mark.parametrize("system", [Z, D])
def test_simplest_between_result_always_fits(engine, day2_values, system):
    rng = random.Random(32)
    for _ in range(200):
        los = tuple(rng.sample(day2_values, rng.randint(0, 2)))
        his = tuple(rng.sample(day2_values, rng.randint(0, 2)))
        x = engine.simplest_between(los, his, system)
        if x is None:
            continue
        assert x.in_system(system)
        xpos = engine.number_position(x)
        for lo in los:
            assert engine.compare(lo, xpos).less_or_fuzzy
        for hi in his:
            assert engine.compare(xpos, hi).less_or_fuzzy
