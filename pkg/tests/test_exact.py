import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilsum.exact import (
    AlgebraicReal,
    IntPolynomial,
    MultipleRootsError,
    NumberField,
    count_real_roots,
    format_rational,
    irreducibility_witness,
    isolate_root,
    nf_arith,
    nf_sign,
    parse_rational,
    rational_rank,
)


def sqrt2_minus_1():
    # xi = 1 - sqrt 2, root of t^2 - 2t - 1 in (-1, 0)
    return NumberField.from_polynomial([-1, -2, 1], -1, 0, "xi")


def test_rational_roundtrip():
    assert parse_rational("-2/7") == Fraction(-2, 7)
    assert format_rational(Fraction(6, 4)) == "3/2"
    with pytest.raises(TypeError):
        parse_rational(True)


def test_polynomial_text_and_arithmetic():
    p = IntPolynomial([-1, -2, 1])
    assert str(p) == "t^2 - 2t - 1"
    assert (p * IntPolynomial([1, 1])).to_list() == [-1, -3, -1, 1]
    assert p.derivative().to_list() == [-2, 2]
    assert IntPolynomial([1, 2, 1]).squarefree_part().to_list() == [1, 1]


def test_sturm_counts_match_known_roots():
    # (t - 1)(t - 2)(t + 3)
    p = IntPolynomial([6, -7, 0, 1])
    assert count_real_roots(p) == 3
    assert count_real_roots(p, 0, 3) == 2
    assert count_real_roots(p, Fraction(3, 2), 3) == 1


def test_isolate_root_cases():
    p = IntPolynomial([-1, -2, 1])
    assert isolate_root(p, 0, 1) is None
    r = isolate_root(p, -1, 0)
    assert math.isclose(float(r), 1 - math.sqrt(2), abs_tol=1e-12)
    lo, hi = r.refine(Fraction(1, 10**20))
    assert lo < Fraction(1) - Fraction(math.sqrt(2)) + Fraction(1, 10**15)
    assert hi - lo <= Fraction(1, 10**20)
    with pytest.raises(MultipleRootsError):
        isolate_root(IntPolynomial([-2, 0, 1]), -2, 2)


def test_interval_only_shrinks():
    r = AlgebraicReal(IntPolynomial([-2, 0, 1]), 1, 2)
    widths = []
    for _ in range(30):
        widths.append(r.width)
        r.bisect()
    assert all(a > b for a, b in zip(widths, widths[1:]))


def test_field_relations():
    F = sqrt2_minus_1()
    xi = F.gen()
    assert xi * xi == 2 * xi + 1
    assert (1 - xi) ** 2 == F(2)
    assert nf_sign(xi) == "negative"
    assert nf_sign(1 + xi) == "positive"
    assert nf_sign(F.zero()) == "zero"
    assert nf_arith(xi, xi, "mul") == 2 * xi + 1


def test_inverse_and_floor():
    F = NumberField.from_polynomial([-2, 0, 1], 1, 2, "s")
    s = F.gen()
    assert (s - 1).inverse() == s + 1
    assert (10 * s).floor() == 14
    assert (-s).floor() == -2
    assert F(Fraction(7, 2)).floor() == 3
    assert (s * s).is_rational()


def test_sign_of_tiny_element_is_exact():
    F = NumberField.from_polynomial([-2, 0, 1], 1, 2, "s")
    s = F.gen()
    # 99 - 70 sqrt 2 is about 0.00505, 577 - 408 sqrt 2 about 8.7e-4
    assert (99 - 70 * s).sign() == 1
    assert (408 * s - 577).sign() == -1
    tiny = (577 - 408 * s) ** 6
    assert tiny.sign() == 1


def test_reducible_minpoly_rejected():
    with pytest.raises(ValueError):
        NumberField.from_polynomial([-1, 0, 1], 0, 2)


def test_certificates():
    assert irreducibility_witness(IntPolynomial([-2, -6, -2, 1])).kind == "eisenstein"
    assert irreducibility_witness(IntPolynomial([-2, -6, -2, 1])).prime == 2
    assert irreducibility_witness(IntPolynomial([-1, 0, 1])).irreducible is False
    assert irreducibility_witness(IntPolynomial([-1, -2, 1])).irreducible is True
    # t^4 + 1 is reducible mod every prime but irreducible over Q
    assert irreducibility_witness(IntPolynomial([1, 0, 0, 0, 1])).irreducible is None
    # (t^2 + 1)(t^2 + 2) has no rational root; must not be certified irreducible
    assert irreducibility_witness(IntPolynomial([2, 0, 3, 0, 1])).irreducible is not True


def test_modular_certificate():
    # t^4 - t - 1: no Eisenstein prime, no rational root
    cert = irreducibility_witness(IntPolynomial([-1, -1, 0, 0, 1]))
    assert cert.irreducible is True
    assert cert.kind == "mod-p-irreducible"


def test_rational_rank():
    assert rational_rank([[1, 0], [0, -1]]) == 2
    assert rational_rank([[1, 2], [2, 4]]) == 1


small = st.fractions(min_value=-20, max_value=20, max_denominator=30)
elements = st.lists(small, min_size=2, max_size=2)


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements)
def test_field_axioms(a, b, c):
    F = sqrt2_minus_1()
    x, y, z = F(a), F(b), F(c)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if not y.is_zero():
        assert (x / y) * y == x


@settings(max_examples=60, deadline=None)
@given(elements, elements)
def test_sign_antisymmetry_and_float_agreement(a, b):
    F = sqrt2_minus_1()
    x, y = F(a), F(b)
    assert (x - y).sign() == -(y - x).sign()
    approx = float(a[0]) + float(a[1]) * (1 - math.sqrt(2))
    if abs(approx) > 1e-9:
        assert x.sign() == (1 if approx > 0 else -1)
    assert (x.sign() == 0) == x.is_zero()


@settings(max_examples=40, deadline=None)
@given(elements)
def test_floor_brackets_value(a):
    F = sqrt2_minus_1()
    x = F(a)
    k = x.floor()
    assert F(k) <= x < F(k + 1)
