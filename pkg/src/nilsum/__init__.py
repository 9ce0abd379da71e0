"""Exact verification of Rees-quotient semigroups of the free semigroup:
degree-bounded quotients, factor semigroups of infinite words, their
contracted algebras, and partial translations of the line."""

from .exact import AlgebraicReal, IntPolynomial, NumberField, NumberFieldElement
from .words import Answer, MechanicalGenerator, RecurrentGenerator, kolotov
from .degree import DegreeFunction
from .semigroup import DegreeBounded, FactorWord

__version__ = "0.1.0"

__all__ = [
    "AlgebraicReal",
    "IntPolynomial",
    "NumberField",
    "NumberFieldElement",
    "Answer",
    "MechanicalGenerator",
    "RecurrentGenerator",
    "kolotov",
    "DegreeFunction",
    "DegreeBounded",
    "FactorWord",
]
