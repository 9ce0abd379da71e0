import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilsum.presets import salwa
from nilsum.salwa import (
    ExactInterval,
    PartialTranslation,
    compose,
    cross_model_check,
    tau,
    translation_bound,
    verify_homomorphism,
    verify_prop2,
    verify_salwa_decomposition,
)

A, B, I = salwa()
F = A.field
SQRT2 = math.sqrt(2)


def float_tau(w):
    # t is in the domain iff it stays inside I before each shift, applying
    # the letters right to left
    shifts = {1: 1.0, 2: -SQRT2}
    lo, hi = -math.inf, math.inf
    cum = 0.0
    for i in reversed(w):
        lo, hi = max(lo, -cum), min(hi, 1 + SQRT2 - cum)
        cum += shifts[i]
    if hi - lo <= 1e-9:
        return None
    return cum, lo, hi


def test_compose_example():
    x = PartialTranslation(A, I)
    y = PartialTranslation(B, I)
    xy = compose(x, y)
    assert xy.shift == A + B
    assert xy.domain.lo == -B and xy.domain.hi == I.hi


def test_powers_of_x():
    x = PartialTranslation(A, I)
    p3 = compose(compose(x, x), x)
    assert not p3.is_zero
    assert p3.domain == ExactInterval(F(0), F([-1, 1]))
    assert compose(p3, x).is_zero
    assert translation_bound(A, I.length) == 4


def test_generators_validated():
    with pytest.raises(ValueError):
        tau((1,), B, A, I)
    with pytest.raises(ValueError):
        tau((1,), F(1), F(-2), I)


@pytest.mark.parametrize("w", [(1,), (1, 2), (2, 1, 1), (1, 1, 2, 1), (2, 2), (1, 2, 1, 2, 1, 1), (1, 1, 1, 1)])
def test_tau_matches_float_simulation(w):
    exact = tau(w, A, B, I)
    approx = float_tau(w)
    if approx is None:
        assert exact.is_zero
    else:
        assert not exact.is_zero
        assert math.isclose(float(exact.shift), approx[0], abs_tol=1e-9)
        assert math.isclose(float(exact.domain.lo), approx[1], abs_tol=1e-9)
        assert math.isclose(float(exact.domain.hi), approx[2], abs_tol=1e-9)


def test_kernel_contains_j():
    c = verify_prop2(A, B, I, 10)
    assert c.passed and c.details["tested"] > 0


def test_homomorphism_and_decomposition():
    assert verify_homomorphism(A, B, I, pairs=200, seed=5).passed
    assert verify_salwa_decomposition(A, B, I, max_len=5, subsets=20).passed


def test_cross_model():
    assert cross_model_check(A, B, I, 8).passed


words = st.lists(st.integers(1, 2), min_size=1, max_size=7).map(tuple)


@settings(max_examples=60, deadline=None)
@given(words, words, words)
def test_composition_associative_and_homomorphic(u, v, w):
    tu, tv, tw = (tau(x, A, B, I) for x in (u, v, w))
    assert compose(compose(tu, tv), tw) == compose(tu, compose(tv, tw))
    assert tau(u + v, A, B, I) == compose(tu, tv)
