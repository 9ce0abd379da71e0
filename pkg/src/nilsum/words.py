"""Finite words, infinite-word generators and factor indexing.

Words are tuples of letter indices ``1..m``.  For two-letter constructions
letter 1 is ``x`` and letter 2 is ``y``.
"""

from __future__ import annotations

import enum
import string
import threading
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .exact import AlgebraicReal, IntPolynomial, NumberField, NumberFieldElement

Word = tuple[int, ...]

__all__ = [
    "Word",
    "Answer",
    "parse_word",
    "format_word",
    "abelianize",
    "word_polynomial",
    "slope",
    "factors",
    "InfiniteWordGenerator",
    "RecurrentGenerator",
    "MechanicalGenerator",
    "kolotov",
    "DegenerateRecurrenceError",
    "NotNestedError",
    "FactorIndex",
    "factor_index",
    "default_horizon",
    "complexity",
    "is_factor",
]

BINARY_LETTERS = "xy"


class Answer(enum.Enum):
    """Outcome of a membership query against a finite horizon.

    ``NO`` is definitive; ``UNKNOWN`` means absent from the indexed prefix but
    the factor complexity had not stabilized there.
    """

    YES = "yes"
    NO = "no"
    UNKNOWN = "not-within-horizon"


def _alphabet_for(m: int) -> str:
    return BINARY_LETTERS if m == 2 else string.ascii_lowercase[:m]


def parse_word(text: str, letters: str | None = None) -> Word:
    """Read ``xyxxy`` or ``abba`` style text.  Without ``letters``, ``x``/``y``
    map to 1/2 and ``a``, ``b``, ``c``, ... to 1, 2, 3, ..."""
    text = text.strip()
    if letters is None:
        letters = BINARY_LETTERS if set(text) <= set(BINARY_LETTERS) else string.ascii_lowercase
    try:
        return tuple(letters.index(ch) + 1 for ch in text)
    except ValueError:
        raise ValueError(f"word {text!r} uses letters outside {letters!r}") from None


def format_word(w: Sequence[int], m: int = 2, letters: str | None = None) -> str:
    letters = letters or _alphabet_for(max(m, max(w, default=1)))
    return "".join(letters[i - 1] for i in w)


def abelianize(w: Sequence[int], m: int) -> tuple[int, ...]:
    counts = [0] * m
    for i in w:
        counts[i - 1] += 1
    return tuple(counts)


def word_polynomial(w: Sequence[int], m: int) -> IntPolynomial:
    """Polynomial whose coefficient of t^(i-1) is the number of letters i."""
    return IntPolynomial(abelianize(w, m))


def slope(w: Sequence[int]) -> Fraction:
    """Proportion of ``x`` letters in a nonempty binary word."""
    if not w:
        raise ValueError("slope of the empty word")
    if any(i not in (1, 2) for i in w):
        raise ValueError("slope is defined for binary words")
    return Fraction(sum(1 for i in w if i == 1), len(w))


def factors(w: Sequence[int]) -> Iterator[Word]:
    """All nonempty contiguous factors, with repetition."""
    w = tuple(w)
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            yield w[i:j]


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


class DegenerateRecurrenceError(ValueError):
    """The recursively defined words stopped growing."""


class NotNestedError(ValueError):
    """The recursively defined words are not prefixes of one another, so they
    do not converge to a single infinite word."""


def default_horizon(n: int) -> int:
    return max(4096, 64 * n)


class InfiniteWordGenerator:
    """Produces prefixes of an infinite word, memoized."""

    alphabet_size: int = 2
    name: str = "generator"

    def __init__(self) -> None:
        self._lock = threading.RLock()
        self._indexes: dict[int, FactorIndex] = {}

    def prefix(self, n: int) -> Word:
        raise NotImplementedError

    def factor_text(self, horizon: int) -> Word:
        """The finite word whose factors stand in for the language at this
        horizon; for nested generators this is the length-``horizon`` prefix."""
        return self.prefix(horizon)

    def index(self, horizon: int) -> "FactorIndex":
        with self._lock:
            idx = self._indexes.get(horizon)
            if idx is None:
                idx = FactorIndex(self.factor_text(horizon))
                self._indexes[horizon] = idx
            return idx

    def describe(self) -> dict:
        return {"kind": self.name}


class RecurrentGenerator(InfiniteWordGenerator):
    """Words defined by ``omega[n+m] = rho_n(omega[n], ..., omega[n+m-1])``.

    ``rho`` is either one word (constant sequence) or a callable ``n -> word``;
    in the latter case ``rho_abelian`` must declare the common letter counts.
    """

    name = "recurrent"

    def __init__(
        self,
        seeds: Sequence[Sequence[int]],
        rho: Sequence[int] | Callable[[int], Sequence[int]],
        rho_abelian: Sequence[int] | None = None,
        name: str | None = None,
    ):
        super().__init__()
        m = len(seeds)
        if m < 2:
            raise ValueError("need at least two seed words")
        if any(len(s) == 0 for s in seeds):
            raise ValueError("seed words must be nonempty")
        self.alphabet_size = m
        for s in list(seeds):
            if any(not 1 <= i <= m for i in s):
                raise ValueError(f"seed letters must lie in 1..{m}")
        self.seeds = [tuple(s) for s in seeds]
        if callable(rho):
            if rho_abelian is None:
                raise ValueError("a rho sequence must declare its abelianization up front")
            self._rho = rho
            self.rho_abelian = tuple(rho_abelian)
            self.constant_rho: Word | None = None
        else:
            word = tuple(rho)
            self._rho = lambda n, _w=word: _w
            self.rho_abelian = abelianize(word, m)
            if rho_abelian is not None and tuple(rho_abelian) != self.rho_abelian:
                raise ValueError("declared abelianization does not match rho")
            self.constant_rho = word
        if len(self.rho_abelian) != m:
            raise ValueError("rho abelianization has the wrong length")
        if name:
            self.name = name
        self._omegas: list[Word] = list(self.seeds)
        self._stalled = 0

    def rho(self, n: int) -> Word:
        w = tuple(self._rho(n))
        if any(not 1 <= i <= self.alphabet_size for i in w):
            raise ValueError(f"rho_{n} uses letters outside 1..{self.alphabet_size}")
        if abelianize(w, self.alphabet_size) != self.rho_abelian:
            raise ValueError(f"rho_{n} does not have the declared abelianization")
        return w

    @property
    def c(self) -> int:
        """Length of every rho_n."""
        return sum(self.rho_abelian)

    def omega(self, n: int) -> Word:
        m = self.alphabet_size
        with self._lock:
            while len(self._omegas) <= n:
                k = len(self._omegas) - m
                rho = self.rho(k)
                block = self._omegas[k:]
                new = tuple(ch for i in rho for ch in block[i - 1])
                if len(new) <= len(self._omegas[-1]):
                    self._stalled += 1
                    if self._stalled >= m:
                        raise DegenerateRecurrenceError("words stopped growing")
                else:
                    self._stalled = 0
                self._omegas.append(new)
            return self._omegas[n]

    def omega_abelian(self, n: int) -> tuple[int, ...]:
        """Letter counts of omega_n, computed from the substitution structure
        without materializing the word."""
        m = self.alphabet_size
        counts = [abelianize(s, m) for s in self.seeds]
        for k in range(0, n - m + 1):
            rho = self.rho(k)
            block = counts[k:k + m]
            total = [0] * m
            for i in rho:
                for j, c in enumerate(block[i - 1]):
                    total[j] += c
            counts.append(tuple(total))
        return counts[n]

    def omega_length(self, n: int) -> int:
        return sum(self.omega_abelian(n))

    def is_nested(self, upto: int) -> bool:
        return all(self.omega(k + 1)[: len(self.omega(k))] == self.omega(k) for k in range(self.alphabet_size - 1, upto))

    def _first_long(self, n: int) -> int:
        k = 0
        while len(self.omega(k)) < n:
            k += 1
        return k

    def prefix(self, n: int) -> Word:
        if n < 1:
            raise ValueError("prefix length must be >= 1")
        k = max(self._first_long(n), self.alphabet_size - 1)
        if not self.is_nested(k):
            raise NotNestedError("omega_n are not prefixes of omega_(n+1); no limit word")
        return self.omega(k)[:n]

    def factor_text(self, horizon: int) -> Word:
        k = max(self._first_long(horizon), self.alphabet_size - 1)
        if self.is_nested(k):
            return self.omega(k)[:horizon]
        return self.omega(k)

    def describe(self) -> dict:
        m = self.alphabet_size
        out = {
            "kind": self.name,
            "seeds": [format_word(s, m) for s in self.seeds],
            "rho_abelianization": list(self.rho_abelian),
        }
        if self.constant_rho is not None:
            out["rho"] = format_word(self.constant_rho, m)
        return out


def kolotov() -> RecurrentGenerator:
    """omega_0 = x, omega_1 = xy, omega_(n+2) = omega_(n+1) omega_n omega_(n+1)."""
    return RecurrentGenerator([(1,), (1, 2)], (2, 1, 2), name="kolotov")


class MechanicalGenerator(InfiniteWordGenerator):
    """Lower mechanical word of slope ``alpha`` and intercept ``intercept``:
    letter k is x iff floor((k+1)alpha + rho) - floor(k alpha + rho) = 1."""

    name = "mechanical"

    def __init__(self, alpha: AlgebraicReal | NumberFieldElement, intercept=0):
        super().__init__()
        if isinstance(alpha, AlgebraicReal):
            field = NumberField(alpha, "alpha")
            alpha = field.gen()
        self.field = alpha.field
        self.alpha = alpha
        self.intercept = Fraction(intercept)
        if not (alpha > 0 and alpha < 1):
            raise ValueError("slope must lie in (0, 1)")
        self._letters: list[int] = []
        self._last_floor = self.field.floor(self.field(self.intercept).coeffs)

    @property
    def irrational(self) -> bool:
        return not self.alpha.is_rational()

    def prefix(self, n: int) -> Word:
        if n < 1:
            raise ValueError("prefix length must be >= 1")
        with self._lock:
            k = len(self._letters)
            while k < n:
                value = self.alpha * (k + 1) + self.intercept
                fl = value.floor()
                self._letters.append(1 if fl - self._last_floor == 1 else 2)
                self._last_floor = fl
                k += 1
            return tuple(self._letters[:n])

    def describe(self) -> dict:
        lo, hi = self.field.generator.interval()
        return {
            "kind": self.name,
            "alpha_minpoly": self.field.minpoly.to_list(),
            "alpha": self.alpha.to_json(),
            "alpha_decimal": self.alpha.decimal(12),
            "intercept": str(self.intercept),
        }


# ---------------------------------------------------------------------------
# factor index (suffix automaton)
# ---------------------------------------------------------------------------


class FactorIndex:
    """Suffix automaton over a finite word: exact factor membership and the
    number of distinct factors of every length."""

    def __init__(self, text: Sequence[int]):
        self.text = tuple(text)
        link = [-1]
        length = [0]
        trans: list[dict[int, int]] = [{}]
        last = 0
        for ch in self.text:
            cur = len(length)
            length.append(length[last] + 1)
            link.append(-1)
            trans.append({})
            p = last
            while p != -1 and ch not in trans[p]:
                trans[p][ch] = cur
                p = link[p]
            if p == -1:
                link[cur] = 0
            else:
                q = trans[p][ch]
                if length[p] + 1 == length[q]:
                    link[cur] = q
                else:
                    clone = len(length)
                    length.append(length[p] + 1)
                    link.append(link[q])
                    trans.append(dict(trans[q]))
                    while p != -1 and trans[p].get(ch) == q:
                        trans[p][ch] = clone
                        p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur
        self._link, self._length, self._trans = link, length, trans
        diff = [0] * (len(self.text) + 2)
        for v in range(1, len(length)):
            diff[length[link[v]] + 1] += 1
            diff[length[v] + 1] -= 1
        counts = []
        running = 0
        for n in range(len(self.text) + 1):
            running += diff[n]
            counts.append(running)
        self._counts = counts

    @property
    def horizon(self) -> int:
        return len(self.text)

    def __contains__(self, u: Sequence[int]) -> bool:
        v = 0
        for ch in u:
            v = self._trans[v].get(ch, -1)
            if v < 0:
                return False
        return True

    def count(self, n: int) -> int:
        """Distinct factors of length ``n``."""
        if n < 0:
            raise ValueError("negative length")
        if n >= len(self._counts):
            return 0
        return self._counts[n] if n else 1

    def factors_of_length(self, n: int) -> list[Word]:
        out: list[Word] = []
        stack: list[tuple[int, Word]] = [(0, ())]
        while stack:
            v, w = stack.pop()
            if len(w) == n:
                out.append(w)
                continue
            for ch, nxt in self._trans[v].items():
                stack.append((nxt, w + (ch,)))
        return sorted(out)


def factor_index(g: InfiniteWordGenerator, horizon: int) -> FactorIndex:
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    return g.index(horizon)


def complexity(g: InfiniteWordGenerator, n: int, horizon: int | None = None) -> tuple[int, bool]:
    """Distinct length-``n`` factors at the horizon, and whether the count is
    unchanged when the horizon is doubled."""
    if n < 1:
        raise ValueError("length must be >= 1")
    h = horizon or default_horizon(n)
    c1 = g.index(h).count(n)
    c2 = g.index(2 * h).count(n)
    return c1, c1 == c2


def is_factor(u: Sequence[int], g: InfiniteWordGenerator, horizon: int | None = None) -> Answer:
    n = len(u)
    h = horizon or default_horizon(n)
    if n > h:
        raise ValueError(f"word of length {n} exceeds horizon {h}")
    if tuple(u) in g.index(h):
        return Answer.YES
    _, stable = complexity(g, max(n, 1), h)
    return Answer.NO if stable else Answer.UNKNOWN
