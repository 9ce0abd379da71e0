import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilsum.presets import example_8ii, mechanical
from nilsum.words import (
    Answer,
    DegenerateRecurrenceError,
    FactorIndex,
    RecurrentGenerator,
    abelianize,
    complexity,
    factors,
    format_word,
    is_factor,
    kolotov,
    parse_word,
    slope,
)


def brute_factors(text, n):
    return {tuple(text[i : i + n]) for i in range(len(text) - n + 1)}


def test_kolotov_prefix():
    assert format_word(kolotov().prefix(13)) == "xyxxyxyxyxxyx"
    assert format_word(kolotov().omega(2)) == "xyxxy"


def test_kolotov_short_horizon_counts():
    # factor counts of the five-letter prefix xyxxy
    g = kolotov()
    text = g.prefix(5)
    assert [len(brute_factors(text, n)) for n in range(1, 6)] == [2, 3, 3, 2, 1]
    idx = FactorIndex(text)
    assert [idx.count(n) for n in range(1, 6)] == [2, 3, 3, 2, 1]


def test_mechanical_prefix_follows_floor_differences():
    g = mechanical("sturmian-sqrt2")
    alpha = math.sqrt(2) - 1
    expected = "".join("x" if math.floor((k + 1) * alpha) - math.floor(k * alpha) == 1 else "y" for k in range(40))
    assert format_word(g.prefix(40)) == expected
    assert format_word(g.prefix(5)) == "yyxyx"


@pytest.mark.parametrize(
    "gen",
    [kolotov, lambda: mechanical("sturmian-sqrt2"), lambda: mechanical("sturmian-sqrt3")],
    ids=["kolotov", "sqrt2", "sqrt3"],
)
def test_complexity_n_plus_one(gen):
    g = gen()
    for n in (1, 7, 30):
        assert complexity(g, n) == (n + 1, True)


def test_suffix_automaton_matches_brute_force():
    text = kolotov().prefix(600)
    idx = FactorIndex(text)
    for n in range(1, 25):
        assert idx.count(n) == len(brute_factors(text, n))
        assert set(idx.factors_of_length(n)) == brute_factors(text, n)


def test_is_factor_answers():
    g = kolotov()
    assert is_factor(parse_word("yy"), g) is Answer.NO
    assert is_factor(parse_word("xxxxx"), g) is Answer.NO
    assert is_factor(parse_word("xy"), g) is Answer.YES
    assert is_factor(parse_word("xyxy"), g) is Answer.YES


def test_small_horizon_reports_unknown():
    g = kolotov()
    # a factor missing from a tiny prefix is not declared absent
    assert is_factor(parse_word("yxyxy"), g, horizon=5) is not Answer.NO


def test_word_helpers():
    assert parse_word("xyx") == (1, 2, 1)
    assert parse_word("abc") == (1, 2, 3)
    assert format_word((1, 2, 3), 3) == "abc"
    assert abelianize((1, 2, 1, 3), 3) == (2, 1, 1)
    assert slope((1, 2, 1)) == Fraction(2, 3)
    assert sorted(set(factors((1, 2)))) == [(1,), (1, 2), (2,)]


def test_degenerate_recurrence_detected():
    with pytest.raises(DegenerateRecurrenceError):
        RecurrentGenerator([(1,), (2,)], (1,)).omega(5)


def test_three_letter_family():
    g = example_8ii()
    assert [g.omega_length(n) for n in range(5)] == [1, 1, 1, 10, 28]
    assert g.omega_abelian(3) == (2, 6, 2)
    text = g.prefix(200)
    assert text[:10] == g.omega(3)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=20), st.lists(st.integers(1, 3), max_size=20))
def test_abelianization_is_additive(u, v):
    a, b, ab = abelianize(u, 3), abelianize(v, 3), abelianize(u + v, 3)
    assert ab == tuple(x + y for x, y in zip(a, b))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 2), min_size=1, max_size=60))
def test_suffix_automaton_on_random_text(text):
    idx = FactorIndex(tuple(text))
    for n in range(1, len(text) + 1):
        assert idx.count(n) == len(brute_factors(text, n))
