"""The contracted semigroup algebra K_0 S of a Rees quotient: a monomial
algebra with basis the nonzero words."""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .report import Check
from .semigroup import (
    DegreeBounded,
    FactorWord,
    IndeterminateError,
    SemigroupModel,
    SignClass,
    classify,
    nonzero_words,
    witness_word,
)
from .words import Answer, Word, complexity, format_word

__all__ = [
    "Rationals",
    "PrimeField",
    "QQ",
    "AlgebraElement",
    "alg_multiply",
    "non_nil_witness",
    "GrowthTable",
    "growth",
    "gk_estimate",
    "direct_sum_split",
    "non_nil_check",
    "growth_check",
]


class Rationals:
    characteristic = 0

    def coerce(self, x):
        return Fraction(x)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return 0

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p); elements are ints in range(p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = self.characteristic = p

    def coerce(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return self.p

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


class AlgebraElement:
    """Finite linear combination of nonzero words of ``model``."""

    __slots__ = ("model", "field", "terms")

    def __init__(self, model: SemigroupModel, terms: Mapping[Sequence[int], object] | None = None, field=QQ):
        self.model = model
        self.field = field
        clean: dict[Word, object] = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            c = field.coerce(c)
            if c == 0:
                continue
            ans = model.is_nonzero(w)
            if ans is Answer.UNKNOWN:
                raise IndeterminateError(f"cannot decide whether {format_word(w)} is zero")
            if ans is Answer.NO:
                continue
            clean[w] = field.coerce(clean.get(w, 0) + c)
            if clean[w] == 0:
                del clean[w]
        self.terms = clean

    @classmethod
    def _raw(cls, model, field, terms: dict) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj.model, obj.field, obj.terms = model, field, terms
        return obj

    @classmethod
    def letters(cls, model: SemigroupModel, field=QQ) -> "AlgebraElement":
        """x_1 + ... + x_m."""
        return cls(model, {(i,): 1 for i in range(1, model.alphabet_size + 1)}, field)

    def _check(self, other: "AlgebraElement") -> None:
        if other.model is not self.model or other.field != self.field:
            raise ValueError("elements of different algebras")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = self.field.coerce(out.get(w, 0) + c)
            if v == 0:
                out.pop(w, None)
            else:
                out[w] = v
        return AlgebraElement._raw(self.model, self.field, out)

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = self.field.coerce(c)
        if c == 0:
            return AlgebraElement._raw(self.model, self.field, {})
        return AlgebraElement._raw(self.model, self.field, {w: self.field.coerce(v * c) for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return alg_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 1:
            raise ValueError("the algebra has no unit; exponent must be >= 1")
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.model is other.model and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        m = self.model.alphabet_size
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            parts.append(format_word(w, m) if c == 1 else f"{c}*{format_word(w, m)}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        m = self.model.alphabet_size
        return [
            {"word": format_word(w, m), "coefficient": str(self.terms[w])}
            for w in sorted(self.terms, key=lambda w: (len(w), w))
        ]


def alg_multiply(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Distribute; basis words multiply as in the semigroup, zero products
    drop out."""
    u._check(v)
    model, fld = u.model, u.field
    out: dict[Word, object] = {}
    zero_cache: dict[Word, Answer] = {}
    for w1, c1 in u.terms.items():
        for w2, c2 in v.terms.items():
            w = w1 + w2
            ans = zero_cache.get(w)
            if ans is None:
                ans = zero_cache[w] = model.is_nonzero(w)
            if ans is Answer.UNKNOWN:
                raise IndeterminateError(f"cannot decide whether {format_word(w)} is zero")
            if ans is Answer.NO:
                continue
            val = fld.coerce(out.get(w, 0) + c1 * c2)
            if val == 0:
                out.pop(w, None)
            else:
                out[w] = val
    return AlgebraElement._raw(model, fld, out)


def non_nil_witness(model: SemigroupModel, n: int) -> Word | None:
    """A nonzero word of length n, if one exists.  Since K_0 S is monomial, it
    shows (x_1 + ... + x_m)^n != 0.

    Tries the infinite word's prefix or the greedy bounded-degree word first,
    then falls back to depth-first extension of nonzero words.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    candidate = None
    if isinstance(model, FactorWord):
        try:
            candidate = model.generator.prefix(n)
        except ValueError:
            pass
    elif isinstance(model, DegreeBounded):
        try:
            candidate = witness_word(model, n)
        except ValueError:
            pass
    if candidate is not None and model.is_nonzero(candidate) is Answer.YES:
        return candidate
    letters = range(model.alphabet_size, 0, -1)
    stack: list[Word] = [(i,) for i in letters if model.is_nonzero((i,)) is Answer.YES]
    while stack:
        w = stack.pop()
        if len(w) == n:
            return w
        for i in letters:
            u = w + (i,)
            if model.is_nonzero(u) is Answer.YES:
                stack.append(u)
    return None


@dataclass
class GrowthTable:
    """counts[n-1] nonzero words of length n; cumulative[n-1] = g(n)."""

    counts: list[int]
    stabilized: list[bool] = field(default_factory=list)

    @property
    def cumulative(self) -> list[int]:
        out, total = [], 0
        for c in self.counts:
            total += c
            out.append(total)
        return out

    @property
    def n_max(self) -> int:
        return len(self.counts)

    def rows(self) -> list[tuple]:
        rows = []
        for n, (c, g) in enumerate(zip(self.counts, self.cumulative), 1):
            expected = n * (n + 3) // 2
            rows.append((n, c, g, expected, g == expected))
        return rows

    def bergman_gap_flags(self) -> list[int]:
        """Lengths n with g(n+1) - g(n) <= n."""
        g = self.cumulative
        return [n for n in range(1, len(g)) if g[n] - g[n - 1] <= n]


def growth(model: SemigroupModel, n_max: int) -> GrowthTable:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if isinstance(model, FactorWord):
        counts, flags = [], []
        for n in range(1, n_max + 1):
            c, stable = complexity(model.generator, n, model.horizon_for(n))
            counts.append(c)
            flags.append(stable)
        return GrowthTable(counts, flags)
    counts = [0] * n_max
    for w in nonzero_words(model, n_max):
        counts[len(w) - 1] += 1
    return GrowthTable(counts, [True] * n_max)


def gk_estimate(table: GrowthTable | Sequence[int]) -> dict:
    """Least-squares slope of log g(n) against log n over the upper half of
    the table.  A diagnostic, not a proof of anything."""
    g = table.cumulative if isinstance(table, GrowthTable) else list(table)
    if len(g) < 8:
        raise ValueError("need at least 8 data points")
    lo = len(g) // 2
    xs = [math.log(n) for n in range(lo + 1, len(g) + 1)]
    ys = [math.log(v) for v in g[lo:]]
    slope, _ = statistics.linear_regression(xs, ys)
    # exponential growth shows up as a log-log slope that keeps rising
    half = lo + (len(g) - lo) // 2
    s1 = statistics.linear_regression(xs[: half - lo], ys[: half - lo])[0] if half - lo >= 2 else slope
    s2 = statistics.linear_regression(xs[half - lo :], ys[half - lo :])[0] if len(g) - half >= 2 else slope
    return {
        "estimate": slope,
        "points": len(g) - lo,
        "range": [lo + 1, len(g)],
        "rising": s2 > s1 * 1.1,
        "note": "log-log slope, diagnostic only",
    }


def direct_sum_split(u: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
    """Split u into its parts spanned by S+ and by S- words."""
    plus: dict[Word, object] = {}
    minus: dict[Word, object] = {}
    for w, c in u.terms.items():
        (plus if classify(u.model, w) is SignClass.PLUS else minus)[w] = c
    return (AlgebraElement._raw(u.model, u.field, plus), AlgebraElement._raw(u.model, u.field, minus))


def non_nil_check(model: SemigroupModel, n_max: int) -> Check:
    start = time.perf_counter()
    missing = [n for n in range(1, n_max + 1) if non_nil_witness(model, n) is None]
    w = non_nil_witness(model, n_max)
    return Check(
        "non-nil",
        "(x_1 + ... + x_m)^n is nonzero for every tested n",
        "pass" if not missing else "fail",
        {"n_max": n_max, "missing": missing, "witness": format_word(w, model.alphabet_size) if w else None},
        time.perf_counter() - start,
    )


def growth_check(model: SemigroupModel, n_max: int, expect_sturmian: bool = True) -> tuple[GrowthTable, Check]:
    start = time.perf_counter()
    table = growth(model, n_max)
    rows = table.rows()
    mismatches = [r[0] for r in rows if not r[4]]
    unstable = [n for n, s in enumerate(table.stabilized, 1) if not s]
    if expect_sturmian:
        status = "fail" if mismatches else ("indeterminate" if unstable else "pass")
    else:
        status = "pass"
    est = gk_estimate(table) if n_max >= 8 else None
    return table, Check(
        "growth",
        "g(n) = n(n+3)/2" if expect_sturmian else "growth table",
        status,
        {
            "n_max": n_max,
            "counts": table.counts,
            "g": table.cumulative,
            "mismatches": mismatches,
            "unstabilized": unstable,
            "gk_estimate": est,
            "bergman_gap_flags": table.bergman_gap_flags(),
        },
        time.perf_counter() - start,
    )
