from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilsum.algebra import (
    QQ,
    AlgebraElement,
    GrowthTable,
    PrimeField,
    direct_sum_split,
    gk_estimate,
    growth,
    growth_check,
    non_nil_witness,
)
from nilsum.presets import kelarev, sturmian_model
from nilsum.semigroup import FactorWord
from nilsum.words import Answer, kolotov, parse_word


@pytest.fixture(scope="module")
def kel():
    return kelarev()


def words_of(el):
    return sorted(el.terms)


def test_square_of_letters(kel):
    s = AlgebraElement.letters(kel)
    assert words_of(s * s) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    kol = FactorWord(kolotov())
    t = AlgebraElement.letters(kol)
    assert words_of(t * t) == [(1, 1), (1, 2), (2, 1)]


def test_zero_words_dropped(kel):
    e = AlgebraElement(kel, {parse_word("xxx"): 3, parse_word("xy"): 2})
    assert e.terms == {(1, 2): Fraction(2)}


def test_prime_field_coefficients(kel):
    F3 = PrimeField(3)
    s = AlgebraElement.letters(kel, F3)
    cube = s**3
    assert all(0 < c < 3 for c in cube.terms.values())
    assert (s.scale(3)).is_zero()
    with pytest.raises(ValueError):
        PrimeField(4)


def test_direct_sum_split(kel):
    s = AlgebraElement.letters(kel)
    plus, minus = direct_sum_split(s)
    assert words_of(plus) == [(1,)]
    assert words_of(minus) == [(2,)]


@pytest.mark.parametrize("model", [kelarev(), FactorWord(kolotov())])
def test_non_nil_witnesses(model):
    for n in (1, 2, 17, 200):
        w = non_nil_witness(model, n)
        assert len(w) == n and model.is_nonzero(w) is Answer.YES


def test_growth_matches_quadratic_on_sturmian():
    table = growth(sturmian_model("sturmian-sqrt2"), 30)
    assert table.cumulative == [n * (n + 3) // 2 for n in range(1, 31)]
    assert all(r[4] for r in table.rows())


def test_gk_estimate_cases():
    quadratic = [n * (n + 3) // 2 for n in range(1, 31)]
    assert 1.8 <= gk_estimate(quadratic)["estimate"] <= 2.1
    linear = [3 * n for n in range(1, 31)]
    assert abs(gk_estimate(linear)["estimate"] - 1) < 1e-9
    assert gk_estimate([2**n for n in range(1, 31)])["rising"]


def test_bergman_gap_flags():
    # g(n + 1) - g(n) = n + 2 for the quadratic table, so nothing is flagged
    assert GrowthTable([n + 1 for n in range(1, 20)]).bergman_gap_flags() == []
    assert GrowthTable([2, 1, 1, 1]).bergman_gap_flags() == [1, 2, 3]


def test_growth_check_on_degree_bounded(kel):
    table, check = growth_check(kel, 8, expect_sturmian=False)
    assert table.counts == [2, 4, 6, 8, 11, 14, 20, 26]
    assert check.passed


small = st.integers(-5, 5)
short_words = st.lists(st.integers(1, 2), min_size=1, max_size=4).map(tuple)
elements = st.dictionaries(short_words, small, max_size=4)


@settings(max_examples=40, deadline=None)
@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    m = kelarev()
    x, y, z = (AlgebraElement(m, t) for t in (a, b, c))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
    assert x + y == y + x
    assert (x - x).is_zero()


@settings(max_examples=40, deadline=None)
@given(elements)
def test_split_resums(a):
    m = kelarev()
    x = AlgebraElement(m, a)
    plus, minus = direct_sum_split(x)
    assert plus + minus == x
    assert not set(plus.terms) & set(minus.terms)
