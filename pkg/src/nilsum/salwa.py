"""Partial translations of the real line with exact endpoints.

(f, I) is the map t -> t + f on the open interval I; a translation with
empty domain is the zero.  Composition follows
(f, I) o (g, J) = (f + g, (I - g) & J).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from .degree import DegreeFunction
from .exact import NumberFieldElement, rational_rank
from .report import Check
from .semigroup import DegreeBounded
from .words import Answer, Word, format_word

__all__ = [
    "ExactInterval",
    "PartialTranslation",
    "compose",
    "tau",
    "check_generators",
    "translation_bound",
    "verify_prop2",
    "verify_salwa_decomposition",
    "verify_homomorphism",
    "cross_model_check",
]


@dataclass(frozen=True)
class ExactInterval:
    """Open interval (lo, hi) with endpoints in one number field."""

    lo: NumberFieldElement
    hi: NumberFieldElement

    @property
    def empty(self) -> bool:
        return (self.hi - self.lo).sign() <= 0

    @property
    def length(self) -> NumberFieldElement:
        return self.hi - self.lo

    def shift(self, g: NumberFieldElement) -> "ExactInterval":
        return ExactInterval(self.lo + g, self.hi + g)

    def __and__(self, other: "ExactInterval") -> "ExactInterval":
        return ExactInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    def to_json(self) -> dict:
        return {"lo": self.lo.to_json(), "hi": self.hi.to_json(), "decimal": [self.lo.decimal(12), self.hi.decimal(12)]}


@dataclass(frozen=True)
class PartialTranslation:
    """t -> t + shift on ``domain``; ``domain`` None is the zero element."""

    shift: NumberFieldElement
    domain: ExactInterval | None

    @classmethod
    def make(cls, shift: NumberFieldElement, domain: ExactInterval) -> "PartialTranslation":
        return cls(shift, None if domain.empty else domain)

    @property
    def is_zero(self) -> bool:
        return self.domain is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialTranslation):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.shift == other.shift and self.domain == other.domain

    def __hash__(self) -> int:
        return hash(None) if self.is_zero else hash((self.shift, self.domain))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"({self.shift.decimal(6)}, ({self.domain.lo.decimal(6)}, {self.domain.hi.decimal(6)}))"


def compose(p: PartialTranslation, q: PartialTranslation) -> PartialTranslation:
    if p.is_zero or q.is_zero:
        return PartialTranslation(p.shift + q.shift, None)
    return PartialTranslation.make(p.shift + q.shift, p.domain.shift(-q.shift) & q.domain)


def check_generators(a: NumberFieldElement, b: NumberFieldElement) -> None:
    """a > 0 > b and a/b irrational, the latter as rational independence of
    the coordinate vectors of a and b."""
    if not (a.sign() > 0 and b.sign() < 0):
        raise ValueError("need b < 0 < a")
    if rational_rank([a.coeffs, b.coeffs]) != 2:
        raise ValueError("a/b is rational")


def tau(w: Sequence[int], a: NumberFieldElement, b: NumberFieldElement, interval: ExactInterval) -> PartialTranslation:
    """Image of a binary word: x -> (a, I), y -> (b, I), composed left to
    right."""
    check_generators(a, b)
    return _tau(w, (a, b), interval)


def _tau(w: Sequence[int], shifts, interval: ExactInterval) -> PartialTranslation:
    if not w:
        raise ValueError("empty word")
    gens = [PartialTranslation(s, interval) for s in shifts]
    out = gens[w[0] - 1]
    for i in w[1:]:
        out = compose(out, gens[i - 1])
        if out.is_zero:
            break
    return out


def _all_words(max_len: int) -> Iterator[Word]:
    layer: list[Word] = [()]
    for _ in range(max_len):
        layer = [w + (i,) for w in layer for i in (1, 2)]
        yield from layer


def verify_prop2(a: NumberFieldElement, b: NumberFieldElement, interval: ExactInterval, max_len: int) -> Check:
    """tau(xz) = tau(yz) = 0 for every z with |z| <= max_len and
    |d(z)| > |I|, where d(x) = a, d(y) = b."""
    start = time.perf_counter()
    check_generators(a, b)
    size = interval.length
    d = DegreeFunction([a, b])
    tested = 0
    failures = []
    for z in _all_words(max_len):
        if not abs(d(z)) > size:
            continue
        for first in (1, 2):
            tested += 1
            if not _tau((first,) + z, (a, b), interval).is_zero:
                failures.append(format_word((first,) + z))
    return Check(
        "kernel-contains-J",
        "words xz, yz with |d(z)| > |I| map to zero",
        "pass" if not failures else "fail",
        {"max_len": max_len, "tested": tested, "failures": failures[:20], "interval_length": size.decimal(12)},
        time.perf_counter() - start,
    )


def verify_homomorphism(a, b, interval: ExactInterval, pairs: int = 1000, max_len: int = 8, seed: int = 0) -> Check:
    """tau(uv) = tau(u) o tau(v) on random word pairs."""
    start = time.perf_counter()
    check_generators(a, b)
    rng = random.Random(seed)
    failures = []
    for _ in range(pairs):
        u = tuple(rng.choice((1, 2)) for _ in range(rng.randint(1, max_len)))
        v = tuple(rng.choice((1, 2)) for _ in range(rng.randint(1, max_len)))
        lhs = _tau(u + v, (a, b), interval)
        rhs = compose(_tau(u, (a, b), interval), _tau(v, (a, b), interval))
        if lhs != rhs:
            failures.append([format_word(u), format_word(v)])
    return Check(
        "homomorphism",
        "tau(uv) = tau(u) o tau(v)",
        "pass" if not failures else "fail",
        {"pairs": pairs, "max_len": max_len, "seed": seed, "failures": failures[:20]},
        time.perf_counter() - start,
    )


def translation_bound(eps: NumberFieldElement, size: NumberFieldElement) -> int:
    """Least k with (k - 1) * eps >= |I|.  A k-fold product of same-sign
    translations with |shift| >= eps needs points t and t + (k-1) eps or
    more in the same open interval, which is impossible."""
    k = max(1, (size / eps).floor())
    while eps * (k - 1) < size:
        k += 1
    while k > 1 and eps * (k - 2) >= size:
        k -= 1
    return k


def _enumerate_elements(a, b, interval: ExactInterval, max_len: int) -> dict[PartialTranslation, Word]:
    """Distinct nonzero products of generators up to ``max_len`` factors."""
    gens = [PartialTranslation(a, interval), PartialTranslation(b, interval)]
    found: dict[PartialTranslation, Word] = {}
    layer = [((1,), gens[0]), ((2,), gens[1])]
    for _ in range(max_len):
        nxt = []
        for w, p in layer:
            if p.is_zero:
                continue
            if p not in found:
                found[p] = w
            for i in (1, 2):
                nxt.append((w + (i,), compose(p, gens[i - 1])))
        layer = nxt
    return found


def verify_salwa_decomposition(
    a: NumberFieldElement,
    b: NumberFieldElement,
    interval: ExactInterval,
    max_len: int = 6,
    subsets: int = 50,
    subset_size: int = 3,
    seed: int = 0,
    budget: int = 20000,
) -> Check:
    """Nonzero products of the generators have nonzero shift, so S1 (shift >
    0) and S2 (shift < 0) cover them; sampled finite subsets of S1 and of S2
    have all products of ``translation_bound`` factors equal to zero."""
    start = time.perf_counter()
    check_generators(a, b)
    size = interval.length
    elements = _enumerate_elements(a, b, interval, max_len)
    zero_shift = [format_word(w) for p, w in elements.items() if p.shift.is_zero()]
    pools = {1: [], -1: []}
    for p, w in sorted(elements.items(), key=lambda kv: (len(kv[1]), kv[1])):
        s = p.shift.sign()
        if s:
            pools[s].append(p)
    rng = random.Random(seed)
    samples, failures = [], []
    for i in range(subsets):
        side = 1 if i % 2 == 0 else -1
        pool = pools[side]
        if not pool:
            continue
        elems = rng.sample(pool, rng.randint(1, min(subset_size, len(pool))))
        eps = min(abs(p.shift) for p in elems)
        k = translation_bound(eps, size)
        ok, exhaustive = _translations_vanish(elems, k, budget, rng)
        rec = {"side": "S1" if side > 0 else "S2", "shifts": [p.shift.decimal(6) for p in elems], "k": k, "exhaustive": exhaustive, "ok": ok}
        samples.append(rec)
        if not ok:
            failures.append(rec)
    status = "pass" if not failures and not zero_shift else "fail"
    return Check(
        "translation-decomposition",
        "S = S1 u S2 with S1, S2 locally nilpotent",
        status,
        {
            "max_len": max_len,
            "elements": len(elements),
            "S1": len(pools[1]),
            "S2": len(pools[-1]),
            "zero_shift": zero_shift,
            "samples": samples,
            "seed": seed,
        },
        time.perf_counter() - start,
    )


def _translations_vanish(elems, k: int, budget: int, rng: random.Random) -> tuple[bool, bool]:
    stack = [(p, 1) for p in elems]
    nodes = 0
    while stack:
        p, depth = stack.pop()
        nodes += 1
        if nodes > budget:
            break
        if p.is_zero:
            continue
        if depth == k:
            return False, True
        stack.extend((compose(p, e), depth + 1) for e in elems)
    else:
        return True, True
    for _ in range(budget):
        p = rng.choice(elems)
        for _ in range(k - 1):
            p = compose(p, rng.choice(elems))
        if not p.is_zero:
            return False, False
    return True, False


def cross_model_check(a, b, interval: ExactInterval, max_len: int = 10) -> Check:
    """tau(c z) is nonzero exactly when z is nonzero in the degree-bounded
    quotient with d(x) = a, d(y) = b and cutoff |I|; exhaustive over words
    up to ``max_len``.  Discrepancies are reported, not raised."""
    start = time.perf_counter()
    check_generators(a, b)
    size = interval.length
    d = DegreeFunction([a, b])
    try:
        model = DegreeBounded(d, abs(a), size - abs(a))
    except ValueError:
        model = None
    discrepancies = []
    tested = 0
    if model is not None:
        for z in _all_words(max_len - 1):
            nonzero_in_quotient = model.is_nonzero(z) is Answer.YES
            for first in (1, 2):
                tested += 1
                if (not _tau((first,) + z, (a, b), interval).is_zero) != nonzero_in_quotient:
                    discrepancies.append(format_word((first,) + z))
    return Check(
        "homomorphic-image",
        "translation images agree with the degree-bounded quotient of cutoff |I|",
        "pass" if model is not None and not discrepancies else "fail",
        {"max_len": max_len, "tested": tested, "discrepancies": discrepancies[:20]},
        time.perf_counter() - start,
    )
