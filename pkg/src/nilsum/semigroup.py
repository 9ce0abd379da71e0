"""Rees quotients of free semigroups: the degree-bounded quotient and the
factor semigroup of an infinite word, with sign classification and the
nilpotency checks built on it."""

from __future__ import annotations

import enum
import itertools
import math
import random
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .degree import DegreeFunction
from .exact import NumberFieldElement
from .report import Check
from .words import Answer, InfiniteWordGenerator, Word, default_horizon, format_word, is_factor

__all__ = [
    "SemigroupModel",
    "DegreeBounded",
    "FactorWord",
    "Element",
    "ZERO",
    "UNKNOWN_ZERO",
    "SignClass",
    "ZeroDegreeError",
    "IndeterminateError",
    "is_nonzero",
    "multiply",
    "classify",
    "nonzero_words",
    "partition_check",
    "nilpotency_bound",
    "verify_local_nilpotency",
    "verify_ideal_nilpotency",
    "witness_word",
    "identity_power_check",
    "factor_oracle",
    "diameter_oracle_check",
]


class ZeroDegreeError(ArithmeticError):
    """A nonzero element has degree zero."""


class IndeterminateError(RuntimeError):
    """A zero test could not be decided within the horizon."""


class SignClass(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"
    ZERO = "zero"


@dataclass(frozen=True)
class Element:
    """A semigroup element: a nonzero word, the zero, or a product whose zero
    test was undecided (``definite`` False)."""

    word: Word | None
    definite: bool = True

    @property
    def is_zero(self) -> bool:
        return self.word is None

    def __str__(self) -> str:
        if self.word is None:
            return "0" if self.definite else "0?"
        return format_word(self.word, max(self.word, default=2))


ZERO = Element(None)
UNKNOWN_ZERO = Element(None, definite=False)


class SemigroupModel:
    alphabet_size: int
    degree: DegreeFunction | None = None

    def is_nonzero(self, w: Sequence[int]) -> Answer:
        raise NotImplementedError

    def element(self, w: Sequence[int]) -> Element:
        ans = self.is_nonzero(w)
        if ans is Answer.YES:
            return Element(tuple(w))
        return ZERO if ans is Answer.NO else UNKNOWN_ZERO

    def describe(self) -> dict:
        raise NotImplementedError


class DegreeBounded(SemigroupModel):
    """Free semigroup modulo the ideal generated by words with
    |d(w)| >= a + b.

    A word is nonzero iff the prefix degrees D_0 = 0, D_1, ..., D_n span less
    than a + b, since every factor degree is a difference D_j - D_i.
    """

    def __init__(self, degree: DegreeFunction, a, b):
        field = degree.field
        self.degree = degree
        self.alphabet_size = degree.alphabet_size
        self.a = field(a)
        self.b = field(b)
        if not (self.a > 0 and self.b > 0):
            raise ValueError("a and b must be positive")
        self.cutoff = self.a + self.b
        if any(v.is_zero() for v in degree.values):
            raise ValueError("no letter may have degree zero")
        self.positive_letters = [i for i, v in enumerate(degree.values, 1) if v > 0]
        self.negative_letters = [i for i, v in enumerate(degree.values, 1) if v < 0]
        if not any(degree[i] <= self.a for i in self.positive_letters):
            raise ValueError("need a letter x0 with 0 < d(x0) <= a")
        if not any(degree[i] >= -self.b for i in self.negative_letters):
            raise ValueError("need a letter y0 with -b <= d(y0) < 0")

    def _coords(self):
        return [v.coeffs for v in self.degree.values]

    def initial_state(self):
        """(current, max, min) prefix degree coordinates of the empty word."""
        z = (0,) * self.degree.field.degree
        return (z, z, z)

    def step(self, state, letter: int):
        """State after appending ``letter``, or None once the span reaches
        a + b."""
        field = self.degree.field
        cur, hi, lo = state
        t = tuple(x + y for x, y in zip(cur, self._coords()[letter - 1]))
        if field.sign(tuple(x - y for x, y in zip(t, hi))) > 0:
            hi = t
        elif field.sign(tuple(x - y for x, y in zip(t, lo))) < 0:
            lo = t
        else:
            return (t, hi, lo)
        span = tuple(c - (x - y) for c, x, y in zip(self.cutoff.coeffs, hi, lo))
        if field.sign(span) <= 0:
            return None
        return (t, hi, lo)

    def is_nonzero(self, w: Sequence[int]) -> Answer:
        if not w:
            raise ValueError("empty word")
        state = self.initial_state()
        for i in w:
            state = self.step(state, i)
            if state is None:
                return Answer.NO
        return Answer.YES

    def describe(self) -> dict:
        return {
            "variant": "degree-bounded",
            "degrees": self.degree.to_json(),
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "a_decimal": self.a.decimal(12),
            "b_decimal": self.b.decimal(12),
        }


class FactorWord(SemigroupModel):
    """S(Omega): words that are not factors of the infinite word are zero.
    Zero tests are answered at a finite horizon (see :func:`words.is_factor`)."""

    def __init__(self, generator: InfiniteWordGenerator, degree: DegreeFunction | None = None, horizon: int | None = None):
        self.generator = generator
        self.alphabet_size = generator.alphabet_size
        self.degree = degree
        self.horizon = horizon
        if degree is not None and degree.alphabet_size != self.alphabet_size:
            raise ValueError("degree function alphabet does not match the word")

    def horizon_for(self, n: int) -> int:
        return max(self.horizon, n) if self.horizon else default_horizon(n)

    def is_nonzero(self, w: Sequence[int]) -> Answer:
        if not w:
            raise ValueError("empty word")
        return is_factor(tuple(w), self.generator, self.horizon_for(len(w)))

    def factors_up_to(self, length: int) -> Iterator[Word]:
        """Distinct factors of the indexed prefix, by increasing length."""
        idx = self.generator.index(self.horizon_for(length))
        for n in range(1, length + 1):
            yield from idx.factors_of_length(n)

    def describe(self) -> dict:
        out = {"variant": "factor-word", "generator": self.generator.describe(), "horizon": self.horizon}
        if self.degree is not None:
            out["degrees"] = self.degree.to_json()
        return out


def is_nonzero(model: SemigroupModel, w: Sequence[int]) -> Answer:
    return model.is_nonzero(w)


def multiply(model: SemigroupModel, s: Element, t: Element) -> Element:
    if s.word is None or t.word is None:
        if not (s.definite and t.definite):
            return UNKNOWN_ZERO
        return ZERO
    return model.element(s.word + t.word)


def _require_degree(model: SemigroupModel) -> DegreeFunction:
    if model.degree is None:
        raise ValueError("model has no degree function")
    return model.degree


def classify(model: SemigroupModel, s: Element | Sequence[int]) -> SignClass:
    if isinstance(s, Element):
        if s.word is None:
            return SignClass.ZERO
        w = s.word
    else:
        w = tuple(s)
    sgn = _require_degree(model)(w).sign()
    if sgn == 0:
        raise ZeroDegreeError(f"nonzero word {format_word(w)} has degree zero")
    return SignClass.PLUS if sgn > 0 else SignClass.MINUS


def nonzero_words(model: SemigroupModel, max_len: int) -> Iterator[Word]:
    """Every nonzero word of length <= max_len, by length then lexicographic.
    Nonzero words are closed under taking factors, so extending the nonzero
    words of one length finds all those of the next."""
    if isinstance(model, FactorWord):
        yield from model.factors_up_to(max_len)
        return
    letters = range(1, model.alphabet_size + 1)
    if isinstance(model, DegreeBounded):
        states = [((), model.initial_state())]
        for _ in range(max_len):
            states = [(w + (i,), t) for w, st in states for i in letters if (t := model.step(st, i)) is not None]
            yield from (w for w, _ in states)
        return
    layer: list[Word] = [()]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for i in letters:
                u = w + (i,)
                if model.is_nonzero(u) is Answer.YES:
                    nxt.append(u)
        yield from nxt
        layer = nxt


def partition_check(model: SemigroupModel, max_len: int) -> Check:
    start = time.perf_counter()
    plus = minus = 0
    zero_degree = []
    for w in nonzero_words(model, max_len):
        try:
            cls = classify(model, w)
        except ZeroDegreeError:
            zero_degree.append(format_word(w))
            continue
        if cls is SignClass.PLUS:
            plus += 1
        else:
            minus += 1
    details = {"max_len": max_len, "plus": plus, "minus": minus, "total": plus + minus, "zero_degree": zero_degree}
    return Check(
        "partition",
        "every nonzero element lies in exactly one of S+ and S-",
        "pass" if not zero_degree else "fail",
        details,
        time.perf_counter() - start,
    )


def _cutoff(model: SemigroupModel) -> NumberFieldElement:
    if isinstance(model, DegreeBounded):
        return model.cutoff
    raise ValueError("nilpotency bound needs the a + b cutoff of a degree-bounded model")


def nilpotency_bound(model: SemigroupModel, elems: Sequence[Sequence[int]], cutoff: NumberFieldElement | None = None) -> int:
    """Least k with k * eps >= a + b, eps the smallest |degree| in ``elems``;
    every k-fold product of elements drawn from ``elems`` is then zero.  All
    elements must share one sign."""
    if not elems:
        raise ValueError("empty set of elements")
    d = _require_degree(model)
    cutoff = cutoff if cutoff is not None else _cutoff(model)
    degs = [d(w) for w in elems]
    signs = {x.sign() for x in degs}
    if len(signs) != 1 or 0 in signs:
        raise ValueError("elements must all lie in S+ or all in S-")
    eps = min(abs(x) for x in degs)
    # floor of cutoff/eps is a starting guess; exact comparisons decide
    k = max(1, (cutoff / eps).floor())
    while eps * k < cutoff:
        k += 1
    while k > 1 and eps * (k - 1) >= cutoff:
        k -= 1
    return k


def _products_vanish(model: SemigroupModel, elems: Sequence[Word], k: int, budget: int, rng: random.Random) -> tuple[bool, bool, list[str]]:
    """Check that every k-fold product vanishes.

    Depth-first over ordered tuples with pruning at zero prefixes, which is
    exhaustive; if the node budget runs out, fall back to sampled tuples.
    Returns (all_zero, exhaustive, offending words)."""
    nodes = 0
    bad: list[str] = []
    stack: list[tuple[Word, int]] = [(e, 1) for e in elems]
    exhaustive = True
    while stack:
        w, depth = stack.pop()
        nodes += 1
        if nodes > budget:
            exhaustive = False
            break
        ans = model.is_nonzero(w)
        if ans is Answer.NO:
            continue
        if ans is Answer.UNKNOWN:
            raise IndeterminateError(f"zero test undecided for {format_word(w)}")
        if depth == k:
            bad.append(format_word(w))
            continue
        for e in elems:
            stack.append((w + e, depth + 1))
    if not exhaustive:
        for _ in range(budget):
            w = tuple(itertools.chain.from_iterable(rng.choice(elems) for _ in range(k)))
            if model.is_nonzero(w) is not Answer.NO:
                bad.append(format_word(w))
    return not bad, exhaustive, bad[:10]


def _sample_elements(model: SemigroupModel, pool: Sequence[Word], size: int, rng: random.Random) -> list[Word]:
    size = min(size, len(pool))
    return sorted(rng.sample(list(pool), rng.randint(1, size)))


def verify_local_nilpotency(
    model: SemigroupModel,
    subsets: int = 100,
    subset_size: int = 3,
    max_len: int = 5,
    seed: int = 0,
    budget: int = 20000,
    side: SignClass | None = None,
) -> Check:
    """Random finite subsets of S+ and of S- (alternating, or only ``side``):
    all products of ``nilpotency_bound`` many factors vanish."""
    start = time.perf_counter()
    rng = random.Random(seed)
    words = list(nonzero_words(model, max_len))
    pools = {SignClass.PLUS: [], SignClass.MINUS: []}
    for w in words:
        pools[classify(model, w)].append(w)
    cutoff = _subset_cutoff(model)
    samples = []
    failures = []
    for i in range(subsets):
        pick = side or (SignClass.PLUS if i % 2 == 0 else SignClass.MINUS)
        elems = _sample_elements(model, pools[pick], subset_size, rng)
        k = nilpotency_bound(model, elems, cutoff)
        ok, exhaustive, bad = _products_vanish(model, elems, k, budget, rng)
        rec = {"side": pick.value, "elements": [format_word(e) for e in elems], "k": k, "exhaustive": exhaustive, "ok": ok}
        samples.append(rec)
        if not ok:
            failures.append({**rec, "nonzero_products": bad})
    return Check(
        "local-nilpotency",
        "finitely generated subsemigroups of S+ and S- are nilpotent",
        "pass" if not failures else "fail",
        {
            "seed": seed,
            "subsets": subsets,
            "subset_size": subset_size,
            "max_len": max_len,
            "pool_sizes": {k.value: len(v) for k, v in pools.items()},
            "exhaustive_count": sum(1 for s in samples if s["exhaustive"]),
            "samples": samples,
            "failures": failures,
        },
        time.perf_counter() - start,
    )


def _subset_cutoff(model: SemigroupModel) -> NumberFieldElement:
    if isinstance(model, DegreeBounded):
        return model.cutoff
    raise ValueError("local nilpotency checks need a degree-bounded model")


def verify_ideal_nilpotency(
    model: SemigroupModel,
    elems: Sequence[Sequence[int]],
    pad_len: int = 3,
    seed: int = 0,
    samples: int = 200,
    budget: int = 20000,
) -> Check:
    """Ideal elements s' s_i s'' (s', s'' same-sign words up to ``pad_len``
    or empty) of a same-sign set: each nonzero one has |degree| >= |d(s_i)|
    and hence > eps = min|d(s_i)| / 2; sampled ideal elements have vanishing
    k-fold products for the same k."""
    start = time.perf_counter()
    d = _require_degree(model)
    elems = [tuple(e) for e in elems]
    if not elems:
        raise ValueError("empty set of elements")
    side = classify(model, elems[0])
    if any(classify(model, e) is not side for e in elems):
        raise ValueError("elements must share one sign")
    sgn = 1 if side is SignClass.PLUS else -1
    eps_min = min(abs(d(e)) for e in elems)
    eps = eps_min / 2
    pads: list[Word] = [()] + [w for w in nonzero_words(model, pad_len) if classify(model, w) is side]
    ideal: list[Word] = []
    violations = []
    checked = 0
    for e in elems:
        de = abs(d(e))
        for left in pads:
            for right in pads:
                w = left + e + right
                if model.is_nonzero(w) is not Answer.YES:
                    continue
                checked += 1
                dw = d(w) * sgn
                if not (dw >= de and dw > eps):
                    violations.append(format_word(w))
                ideal.append(w)
    rng = random.Random(seed)
    picked = rng.sample(ideal, min(len(ideal), 3)) if ideal else []
    k = nilpotency_bound(model, elems, _subset_cutoff(model))
    ok_products, exhaustive, bad = _products_vanish(model, picked, k, budget, rng) if picked else (True, True, [])
    status = "pass" if not violations and ok_products else "fail"
    return Check(
        "ideal-nilpotency",
        "finitely generated ideals of S+ and S- are nilpotent",
        status,
        {
            "side": side.value,
            "elements": [format_word(e) for e in elems],
            "eps": eps.to_json(),
            "eps_decimal": eps.decimal(12),
            "ideal_elements_checked": checked,
            "degree_violations": violations[:10],
            "k": k,
            "product_sample": [format_word(w) for w in picked],
            "products_exhaustive": exhaustive,
            "nonzero_products": bad,
            "seed": seed,
        },
        time.perf_counter() - start,
    )


def witness_word(model: DegreeBounded, n: int, x0: int | None = None, y0: int | None = None) -> Word:
    """A word of length n whose prefix degrees stay in the open interval
    (-b, a), built greedily: append y0 after a positive prefix degree, x0
    after a negative one.  The first letter is x0 when d(x0) < a, otherwise
    y0 when d(y0) > -b."""
    if n < 1:
        raise ValueError("length must be >= 1")
    d = model.degree
    a, b = model.a, model.b
    if x0 is None:
        cands = [i for i in model.positive_letters if d[i] <= a]
        x0 = min(cands, key=lambda i: (d[i] >= a, i)) if cands else None
    if y0 is None:
        cands = [i for i in model.negative_letters if d[i] >= -b]
        y0 = min(cands, key=lambda i: (d[i] <= -b, i)) if cands else None
    if x0 is None or y0 is None or not (0 < d[x0] <= a) or not (-b <= d[y0] < 0):
        raise ValueError("need letters with 0 < d(x0) <= a and -b <= d(y0) < 0")
    if d[x0] < a:
        first = x0
    elif d[y0] > -b:
        first = y0
    else:
        raise ValueError("no generator has degree strictly inside (-b, a)")
    w = [first]
    cur = d[first]
    for _ in range(n - 1):
        z = y0 if cur.sign() > 0 else x0
        w.append(z)
        cur = cur + d[z]
    return tuple(w)


def identity_power_check(model: FactorWord, max_len: int, exponent: int = 5) -> Check:
    """u^e is zero for every nonzero factor u with |u| <= max_len."""
    if exponent < 2:
        raise ValueError("exponent must be >= 2")
    start = time.perf_counter()
    failures = []
    undecided = []
    tested = 0
    for u in model.factors_up_to(max_len):
        tested += 1
        ans = model.is_nonzero(u * exponent)
        if ans is Answer.YES:
            failures.append(format_word(u))
        elif ans is Answer.UNKNOWN:
            undecided.append(format_word(u))
    status = "fail" if failures else ("indeterminate" if undecided else "pass")
    return Check(
        f"identity-w^{exponent}",
        f"S(Omega) satisfies the identity w^{exponent} = 0",
        status,
        {"max_len": max_len, "exponent": exponent, "tested": tested, "failures": failures, "undecided": undecided},
        time.perf_counter() - start,
    )


def factor_oracle(model: DegreeBounded, w: Sequence[int]) -> bool:
    """Nonzero iff no factor u of w has |d(u)| >= a + b, by listing every
    factor.  Quadratic; for cross-checking :meth:`DegreeBounded.is_nonzero`."""
    d = model.degree
    w = tuple(w)
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            if abs(d(w[i:j])) >= model.cutoff:
                return False
    return True


def diameter_oracle_check(model: DegreeBounded, max_len: int = 8) -> Check:
    """Prefix-degree diameter test against literal factor enumeration, on
    every word over the alphabet up to ``max_len``."""
    start = time.perf_counter()
    letters = range(1, model.alphabet_size + 1)
    tested = 0
    disagreements = []
    for n in range(1, max_len + 1):
        for w in itertools.product(letters, repeat=n):
            tested += 1
            if (model.is_nonzero(w) is Answer.YES) != factor_oracle(model, w):
                disagreements.append(format_word(w, model.alphabet_size))
    return Check(
        "diameter-oracle",
        "prefix-degree diameter test matches enumeration of all factors",
        "pass" if not disagreements else "fail",
        {"max_len": max_len, "tested": tested, "disagreements": disagreements[:20]},
        time.perf_counter() - start,
    )
