import math
from fractions import Fraction

import pytest

from nilsum.degree import (
    ConstructionError,
    DegreeFunction,
    balancing_slope,
    independence_certificate,
    prefix_degree_bound,
    solve_recurrence_degrees,
    sturmian_bounds_check,
    sturmian_degree,
    verify_power_degrees,
)
from nilsum.exact import NumberField
from nilsum.presets import example_8i, example_8ii, mechanical, sqrt2_field
from nilsum.words import RecurrentGenerator, slope


def test_example_8i_solve():
    s = solve_recurrence_degrees(example_8i())
    assert s.determinant == 1
    assert s.characteristic.to_list() == [-1, -2, 1]
    lo, hi = s.field.generator.interval()
    assert -1 <= lo < hi <= 0
    xi = s.xi
    d = s.degree
    assert d[1] == s.field.one()
    assert d[2] == xi - 1
    assert d((1, 2, 1, 1, 2)) == 1 + 2 * xi
    assert s.independence.full_rank


def test_power_degrees_and_float_oracle():
    g = example_8i()
    s = solve_recurrence_degrees(g)
    assert verify_power_degrees(g, s.degree, s.xi, 20).passed
    xi = 1 - math.sqrt(2)
    dx, dy = 1.0, xi - 1
    for n in range(12):
        w = g.omega(n)
        approx = w.count(1) * dx + w.count(2) * dy
        assert math.isclose(approx, xi**n, rel_tol=1e-9, abs_tol=1e-9)


def test_prefix_bound_value_and_literal_oracle():
    g = example_8i()
    s = solve_recurrence_degrees(g)
    bound, check = prefix_degree_bound(g, s.degree, s.xi, 10)
    assert check.passed
    # q = 2/(2 - sqrt 2) + 1 = 3 + sqrt 2, with sqrt 2 = 1 - xi
    assert bound.q == 4 - s.xi
    assert check.details["word_lengths"] == sorted(set(check.details["word_lengths"]))
    # the words are nested, so the running maximum is the maximum over the
    # literal beginnings of omega_7
    degs = s.degree.prefix_degrees(g.omega(7))[1:]
    assert max(max(degs), -min(degs)) == bound.observed[7]


def test_eisenstein_instance_steps():
    g = example_8ii()
    s = solve_recurrence_degrees(g)
    assert s.characteristic.to_list() == [-2, -6, -2, 1]
    assert s.irreducibility.kind == "eisenstein" and s.irreducibility.prime == 2
    assert -0.4 < float(s.xi) < -0.39
    assert verify_power_degrees(g, s.degree, s.xi, 12).passed
    assert prefix_degree_bound(g, s.degree, s.xi, 8)[1].passed


def test_zero_determinant_rejected():
    with pytest.raises(ConstructionError):
        solve_recurrence_degrees(RecurrentGenerator([(1, 2), (2, 1)], (2, 1, 2)))


def test_reducible_characteristic_rejected():
    # rho = xxy gives t^2 - t - 2 = (t - 2)(t + 1)
    with pytest.raises(ConstructionError):
        solve_recurrence_degrees(RecurrentGenerator([(1,), (1, 2)], (1, 1, 2)))


def test_independence_certificate():
    F = sqrt2_field()
    assert independence_certificate(DegreeFunction([F(1), F([0, -1])])).full_rank
    assert not independence_certificate(DegreeFunction([F(1), F(-2)])).full_rank


def test_sturmian_degree_and_bounds():
    g = mechanical("sturmian-sqrt2")
    d = sturmian_degree(g.alpha)
    assert balancing_slope(d) == g.alpha
    words = [g.prefix(200)[i : i + n] for n in range(1, 51) for i in range(0, 150, 7)]
    assert sturmian_bounds_check(words, d, 50).passed
    a = float(g.alpha)
    for u in words:
        assert abs(float(slope(u)) - a) <= 1 / len(u) + 1e-12


def test_sturmian_degree_rejects_rational():
    F = NumberField.from_polynomial([-2, 0, 1], 1, 2)
    with pytest.raises(ValueError):
        sturmian_degree(F(Fraction(1, 2)))


def test_screened_prefix_maximum_is_exact():
    from nilsum.degree import _max_abs_prefix_degree

    g = example_8ii()
    d = solve_recurrence_degrees(g).degree
    for n in range(3, 7):
        degs = d.prefix_degrees(g.omega(n))[1:]
        assert _max_abs_prefix_degree(d, g.omega(n)) == max(max(degs), -min(degs))
