"""Named constructions used by the CLI and the test suite."""

from __future__ import annotations

from .degree import DegreeFunction, sturmian_degree
from .exact import NumberField
from .salwa import ExactInterval
from .semigroup import DegreeBounded, FactorWord
from .words import MechanicalGenerator, RecurrentGenerator, kolotov


def sqrt2_field() -> NumberField:
    return NumberField.from_polynomial([-2, 0, 1], 1, 2, "s")


def kelarev(field: NumberField | None = None) -> DegreeBounded:
    """d(x) = 1, d(y) = -sqrt 2, cutoff 3 split as a = 1, b = 2."""
    F = field or sqrt2_field()
    return DegreeBounded(DegreeFunction([F(1), F([0, -1])]), 1, 2)


def kolotov_generator() -> RecurrentGenerator:
    return kolotov()


def example_8i() -> RecurrentGenerator:
    """m = 2, rho = z2 z1 z2, omega_0 = z1, omega_1 = z1 z2 (Kolotov's word)."""
    return RecurrentGenerator([(1,), (1, 2)], (2, 1, 2), name="example-8i")


def example_8ii() -> RecurrentGenerator:
    """m = 3, rho with letter counts (2, 6, 2): t^3 - 2t^2 - 6t - 2 is
    Eisenstein at 2 and has a root in (-1, 0).  rho starts with z3 so the
    words are nested."""
    rho = (3, 2, 2, 2, 1, 2, 2, 2, 1, 3)
    return RecurrentGenerator([(1,), (2,), (3,)], rho, name="example-8ii")


def sqrt2_minus_1_field() -> NumberField:
    # alpha = sqrt 2 - 1, root of t^2 + 2t - 1
    return NumberField.from_polynomial([-1, 2, 1], 0, 1, "alpha")


def sqrt3_field() -> NumberField:
    # alpha = (sqrt 3 - 1)/2, root of 2t^2 + 2t - 1
    return NumberField.from_polynomial([-1, 2, 2], 0, 1, "alpha")


def mechanical(name: str) -> MechanicalGenerator:
    F = {"sturmian-sqrt2": sqrt2_minus_1_field, "sturmian-sqrt3": sqrt3_field}[name]()
    g = MechanicalGenerator(F.gen(), 0)
    g.name = name
    return g


def sturmian_model(name: str, horizon: int | None = None) -> FactorWord:
    g = mechanical(name)
    return FactorWord(g, sturmian_degree(g.alpha), horizon)


def salwa(field: NumberField | None = None):
    """a = 1, b = -sqrt 2, I = (0, 1 + sqrt 2)."""
    F = field or sqrt2_field()
    return F(1), F([0, -1]), ExactInterval(F(0), F([1, 1]))


CONSTRUCTIONS = {
    "kelarev": "degree-bounded quotient, d(x) = 1, d(y) = -sqrt 2, a = 1, b = 2",
    "kolotov": "factor semigroup of Kolotov's word",
    "example-8i": "recurrent words m = 2, rho = yxy, seeds x, xy",
    "example-8ii": "recurrent words m = 3, rho counts (2, 6, 2), seeds a, b, c",
    "sturmian-sqrt2": "mechanical word of slope sqrt 2 - 1",
    "sturmian-sqrt3": "mechanical word of slope (sqrt 3 - 1)/2",
    "salwa": "translations a = 1, b = -sqrt 2 on (0, 1 + sqrt 2)",
}
