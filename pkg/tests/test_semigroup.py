import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilsum.presets import kelarev, sturmian_model
from nilsum.semigroup import (
    UNKNOWN_ZERO,
    ZERO,
    FactorWord,
    SignClass,
    ZeroDegreeError,
    classify,
    diameter_oracle_check,
    factor_oracle,
    identity_power_check,
    multiply,
    nilpotency_bound,
    nonzero_words,
    partition_check,
    verify_ideal_nilpotency,
    verify_local_nilpotency,
    witness_word,
)
from nilsum.words import Answer, format_word, kolotov, parse_word

SQRT2 = math.sqrt(2)


def float_nonzero(w):
    # float version of the factor enumeration, far from the cutoff for short words
    d = {1: 1.0, 2: -SQRT2}
    return all(abs(sum(d[i] for i in w[i0:j])) < 3 for i0 in range(len(w)) for j in range(i0 + 1, len(w) + 1))


@pytest.fixture(scope="module")
def model():
    return kelarev()


def test_zero_tests(model):
    assert model.is_nonzero(parse_word("yyy")) is Answer.NO
    assert model.is_nonzero(parse_word("xy")) is Answer.YES
    assert model.is_nonzero(parse_word("x")) is Answer.YES
    assert model.is_nonzero(parse_word("xxx")) is Answer.NO
    assert model.is_nonzero(parse_word("xx")) is Answer.YES


def test_multiply_and_classify(model):
    x, y = model.element((1,)), model.element((2,))
    assert multiply(model, x, y).word == (1, 2)
    assert multiply(model, ZERO, x) is ZERO
    assert classify(model, x) is SignClass.PLUS
    assert classify(model, (1, 2)) is SignClass.MINUS
    assert classify(model, ZERO) is SignClass.ZERO


def test_factor_word_multiply():
    m = FactorWord(kolotov())
    xy = m.element((1, 2))
    assert multiply(m, xy, xy).word == (1, 2, 1, 2)
    assert multiply(m, m.element((2,)), m.element((2,))).is_zero
    assert multiply(m, UNKNOWN_ZERO, xy) is UNKNOWN_ZERO


def test_diameter_matches_float_oracle(model):
    for n in range(1, 9):
        for w in itertools.product((1, 2), repeat=n):
            assert (model.is_nonzero(w) is Answer.YES) == float_nonzero(w)


def test_diameter_oracle_check(model):
    c = diameter_oracle_check(model, 8)
    assert c.passed and c.details["tested"] == 510


def test_nilpotency_bounds(model):
    assert nilpotency_bound(model, [(1,)]) == 3
    assert nilpotency_bound(model, [(1,), (1, 1, 2)]) == 6
    with pytest.raises(ValueError):
        nilpotency_bound(model, [(1,), (2,)])


def test_bound_is_tight_for_x(model):
    assert model.is_nonzero((1, 1)) is Answer.YES
    assert model.is_nonzero((1, 1, 1)) is Answer.NO


def test_partition(model):
    c = partition_check(model, 10)
    assert c.passed
    assert c.details["zero_degree"] == []
    assert c.details["total"] == sum(1 for _ in nonzero_words(model, 10))


def test_local_and_ideal_nilpotency(model):
    assert verify_local_nilpotency(model, subsets=20, seed=3).passed
    assert verify_ideal_nilpotency(model, [(1,), (1, 1, 2)], seed=3).passed


def test_witness_word(model):
    w = witness_word(model, 3)
    assert format_word(w) == "yxx"
    long = witness_word(model, 1000)
    assert model.is_nonzero(long) is Answer.YES
    degs = model.degree.prefix_degrees(long)[1:]
    assert all(-model.b < x < model.a for x in degs)


def test_identity_power_on_kolotov():
    c = identity_power_check(FactorWord(kolotov()), 8)
    assert c.passed and c.details["undecided"] == []


def test_sturmian_model_has_no_zero_degree_factors():
    m = sturmian_model("sturmian-sqrt2")
    for w in nonzero_words(m, 12):
        classify(m, w)


def test_zero_degree_word_is_an_error():
    from nilsum.degree import DegreeFunction
    from nilsum.presets import sqrt2_field
    from nilsum.semigroup import DegreeBounded

    F = sqrt2_field()
    m = DegreeBounded(DegreeFunction([F(1), F(-1)]), 1, 2)
    with pytest.raises(ZeroDegreeError):
        classify(m, (1, 2))


words = st.lists(st.integers(1, 2), min_size=1, max_size=10).map(tuple)


@settings(max_examples=80, deadline=None)
@given(words, words, words)
def test_multiplication_associative(u, v, w):
    m = kelarev()
    a, b, c = m.element(u), m.element(v), m.element(w)
    assert multiply(m, multiply(m, a, b), c) == multiply(m, a, multiply(m, b, c))


@settings(max_examples=80, deadline=None)
@given(words)
def test_nonzero_is_factor_closed(w):
    m = kelarev()
    if m.is_nonzero(w) is Answer.YES:
        for i in range(len(w)):
            for j in range(i + 1, len(w) + 1):
                assert m.is_nonzero(w[i:j]) is Answer.YES
    assert (m.is_nonzero(w) is Answer.YES) == factor_oracle(m, w)
