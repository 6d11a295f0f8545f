"""Braces notation: parsing, elaboration, and round-tripping."""

from __future__ import annotations

import random

import pytest

from diamondcgt.errors import GameParseError, NonDyadicDenominatorError
from diamondcgt.notation import (
    ExprKind,
    format_canonical,
    format_position,
    format_value,
    parse_game,
    parse_position,
)
from diamondcgt.values import Dyadic


def test_parse_atoms():
    expr = parse_game("3")
    assert expr.kind is ExprKind.NUMBER and expr.number == Dyadic(3)
    expr = parse_game("-3/4")
    assert expr.number == Dyadic(-3, 2)
    expr = parse_game(" 6/4 ")
    assert expr.number == Dyadic(3, 1)
    assert parse_game("*").kind is ExprKind.STAR


def test_parse_braces():
    expr = parse_game("{0, * | {1|}}")
    assert expr.kind is ExprKind.BRACES
    assert [child.kind for child in expr.left] == [ExprKind.NUMBER, ExprKind.STAR]
    (right,) = expr.right
    assert right.kind is ExprKind.BRACES and right.right == ()
    assert parse_game("{|}").left == ()


def test_elaboration(engine):
    assert parse_position(engine, "0") == engine.zero
    assert parse_position(engine, "{0|0}") == engine.star()
    assert parse_position(engine, "*") == engine.star()
    assert parse_position(engine, "1/2") == engine.number_position(Dyadic(1, 1))
    pair = parse_position(engine, "{0|-3}")
    assert engine.left_options(pair) == (engine.zero,)
    assert engine.right_options(pair) == (engine.number_position(-3),)
    # duplicate options collapse at interning time
    assert parse_position(engine, "{0,0|*,*}") == parse_position(engine, "{0|*}")


def test_parse_errors_carry_positions():
    with pytest.raises(GameParseError) as info:
        parse_game("{0|")
    assert info.value.line == 1 and info.value.column == 4
    assert "}" in info.value.expected
    with pytest.raises(GameParseError) as info:
        parse_game("{0,\n,1|2}")
    assert info.value.line == 2 and info.value.column == 1
    with pytest.raises(GameParseError) as info:
        parse_game("0 1")
    assert info.value.expected == ("end of input",)
    with pytest.raises(GameParseError) as info:
        parse_game("{0 ^ 1|}")
    assert "unexpected character" in str(info.value)
    with pytest.raises(GameParseError):
        parse_game("")
    with pytest.raises(GameParseError):
        parse_game("{1 2|}")


def test_non_dyadic_denominators_are_rejected():
    with pytest.raises(NonDyadicDenominatorError) as info:
        parse_game("1/3")
    assert isinstance(info.value, GameParseError)
    assert info.value.column == 3
    with pytest.raises(NonDyadicDenominatorError):
        parse_game("{5/6|}")
    with pytest.raises(NonDyadicDenominatorError):
        parse_game("1/0")


def test_formatting_examples(engine):
    star = engine.star()
    assert format_position(engine, star) == "*"
    assert format_canonical(engine, star) == "{0|0}"
    two = engine.number_position(2)
    assert format_position(engine, two) == "2"
    assert format_canonical(engine, two) == "{1|}"
    up = engine.intern((engine.zero,), (star,))
    assert format_position(engine, up) == "{0|*}"
    raw = parse_position(engine, "{1,0|1,2}")
    # format_position keeps the dominated options, format_value drops them
    assert format_position(engine, raw) == "{0,1|1,2}"
    assert format_value(engine, raw) == "{1|1}"


def test_format_is_tree_faithful(engine):
    # a non-canonical tree that happens to equal a number still prints as
    # its tree, because the numeral is reserved for the number's own tree
    pseudo = parse_position(engine, "{-1|1}")
    assert format_position(engine, pseudo) == "{-1|1}"
    assert format_value(engine, pseudo) == "0"


def test_round_trip_day3(engine, day3_values):
    rng = random.Random(61)
    for g in rng.sample(day3_values, 300):
        text = format_value(engine, g)
        assert parse_position(engine, text) == g
        braced = format_canonical(engine, g)
        assert parse_position(engine, braced) == g


def test_round_trip_random_forms(engine, random_day4_forms):
    for g in random_day4_forms[:200]:
        text = format_position(engine, g)
        assert parse_position(engine, text) == g


def test_round_trip_numbers(engine):
    for numerator in range(-40, 41):
        for exponent in range(0, 5):
            d = Dyadic(numerator, exponent)
            g = engine.number_position(d)
            assert parse_position(engine, format_position(engine, g)) == g
            assert parse_position(engine, str(d)) == g
