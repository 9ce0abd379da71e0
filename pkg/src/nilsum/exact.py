"""Exact arithmetic: rationals, integer polynomials, real root isolation and
arithmetic in a real number field Q(xi).

Rationals are :class:`fractions.Fraction`.  Polynomials keep their
coefficients constant term first.  A real algebraic number is a squarefree
integer polynomial together with a rational interval containing exactly one
of its roots; the interval is refined by bisection whenever a sign or floor
has to be decided, so no floating point is involved in any decision.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "IntPolynomial",
    "sturm_sequence",
    "count_real_roots",
    "AlgebraicReal",
    "MultipleRootsError",
    "isolate_root",
    "IrreducibilityCertificate",
    "irreducibility_witness",
    "NumberField",
    "NumberFieldElement",
    "nf_arith",
    "nf_sign",
    "rational_rank",
    "small_primes",
]


def parse_rational(value) -> Fraction:
    """Accept ints, Fractions and strings such as ``"3"``, ``"-2/7"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read a rational from {value!r}")


def format_rational(q: Number) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# dense rational polynomial helpers (coefficient lists, constant first)
# ---------------------------------------------------------------------------


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _peval(c: Sequence, x):
    acc = 0
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _pmul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _trim(out)


def _psub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _pdivmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Division with remainder over Q."""
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = _trim([Fraction(x) for x in a])
    if len(r) < len(b):
        return [], r
    q = [Fraction(0)] * (len(r) - len(b) + 1)
    lead = b[-1]
    while len(r) >= len(b):
        shift = len(r) - len(b)
        coef = r[-1] / lead
        q[shift] = coef
        for i, bi in enumerate(b):
            r[i + shift] -= coef * bi
        r.pop()
        _trim(r)
    return _trim(q), r


def _pmonic(a: Sequence) -> list:
    a = _trim([Fraction(x) for x in a])
    if not a:
        return a
    lead = a[-1]
    return [x / lead for x in a]


def _pgcd(a: Sequence, b: Sequence) -> list:
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a)


def _pderiv(a: Sequence) -> list:
    return _trim([i * a[i] for i in range(1, len(a))])


def _to_primitive_int(c: Sequence) -> tuple[int, ...]:
    """Scale a rational coefficient list to a primitive integer one with
    positive leading coefficient."""
    c = _trim([Fraction(x) for x in c])
    if not c:
        return ()
    den = 1
    for x in c:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in c]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if ints[-1] < 0:
        g = -g
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------------------
# integer polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, constant term first."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        object.__setattr__(self, "coeffs", tuple(_trim(c)))

    @classmethod
    def from_rationals(cls, coeffs: Sequence) -> "IntPolynomial":
        return cls(_to_primitive_int(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __call__(self, x):
        return _peval(self.coeffs, x)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(_pmul(self.coeffs, other.coeffs))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(_pderiv(self.coeffs))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        return IntPolynomial(_to_primitive_int(self.coeffs))

    def squarefree_part(self) -> "IntPolynomial":
        """p / gcd(p, p'), made primitive."""
        if self.degree < 1:
            return self.primitive()
        g = _pgcd(self.coeffs, _pderiv(self.coeffs))
        q, r = _pdivmod(self.coeffs, g)
        assert not r
        return IntPolynomial.from_rationals(q)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------


def sturm_sequence(p: IntPolynomial) -> list[list[Fraction]]:
    """Sturm chain p, p', -rem(p, p'), ... of the squarefree part of ``p``."""
    if p.is_zero():
        raise ValueError("zero polynomial has no Sturm sequence")
    sq = p.squarefree_part()
    seq = [[Fraction(c) for c in sq.coeffs]]
    d = [Fraction(c) for c in _pderiv(sq.coeffs)]
    if d:
        seq.append(d)
    while len(seq) > 1:
        r = _pdivmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    prev = 0
    n = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            n += 1
        prev = s
    return n


def _var_at(seq, x) -> int:
    return _variations(_sign(_peval(s, x)) for s in seq)


def _var_at_infinity(seq, positive: bool) -> int:
    signs = []
    for s in seq:
        lead = _sign(s[-1])
        if not positive and (len(s) - 1) % 2 == 1:
            lead = -lead
        signs.append(lead)
    return _variations(signs)


def count_real_roots(p: IntPolynomial, lo: Number | None = None, hi: Number | None = None) -> int:
    """Number of distinct real roots of ``p`` in the open interval (lo, hi);
    ``None`` bounds stand for -inf / +inf."""
    seq = sturm_sequence(p)
    v_lo = _var_at_infinity(seq, False) if lo is None else _var_at(seq, Fraction(lo))
    v_hi = _var_at_infinity(seq, True) if hi is None else _var_at(seq, Fraction(hi))
    n = v_lo - v_hi  # counts roots in (lo, hi]
    if hi is not None and _peval(seq[0], Fraction(hi)) == 0:
        n -= 1
    return n


# ---------------------------------------------------------------------------
# real algebraic numbers
# ---------------------------------------------------------------------------


class MultipleRootsError(ValueError):
    """More than one root lies in the requested interval."""


class AlgebraicReal:
    """A real root of a squarefree primitive integer polynomial, located in an
    open rational interval that contains no other root.

    The interval only ever shrinks.  Refinement is guarded by a lock so a
    value may be shared between threads.
    """

    def __init__(self, minpoly: IntPolynomial, lo: Number, hi: Number, *, _checked: bool = False):
        minpoly = minpoly.squarefree_part()
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise ValueError("isolating interval must satisfy lo < hi")
        if minpoly.degree < 1:
            raise ValueError("constant polynomial has no roots")
        self.minpoly = minpoly
        self._lock = threading.Lock()
        if not _checked:
            n = count_real_roots(minpoly, lo, hi)
            if n != 1:
                raise ValueError(f"interval ({lo}, {hi}) holds {n} roots of {minpoly}, expected 1")
        self.lo, self.hi = lo, hi
        self._normalize()

    def _normalize(self) -> None:
        # make both endpoints non-roots with opposite signs
        p = self.minpoly
        while True:
            flo, fhi = p(self.lo), p(self.hi)
            if flo != 0 and fhi != 0 and _sign(flo) != _sign(fhi):
                self._sign_lo = _sign(flo)
                return
            self._bisect_by_count()

    def _bisect_by_count(self) -> None:
        p = self.minpoly
        mid = (self.lo + self.hi) / 2
        if p(mid) == 0:
            quarter = (self.hi - self.lo) / 4
            self.lo, self.hi = mid - quarter, mid + quarter
        elif count_real_roots(p, self.lo, mid) == 1:
            self.hi = mid
        else:
            self.lo = mid

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def interval(self) -> tuple[Fraction, Fraction]:
        with self._lock:
            return self.lo, self.hi

    def bisect(self) -> None:
        """Halve the isolating interval once."""
        with self._lock:
            self._bisect_unlocked()

    def _bisect_unlocked(self) -> None:
        mid = (self.lo + self.hi) / 2
        s = _sign(self.minpoly(mid))
        if s == 0:
            quarter = (self.hi - self.lo) / 4
            self.lo, self.hi = mid - quarter, mid + quarter
        elif s == self._sign_lo:
            self.lo = mid
        else:
            self.hi = mid

    def refine(self, width: Number) -> tuple[Fraction, Fraction]:
        """Bisect until the interval is narrower than ``width``."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        with self._lock:
            while self.hi - self.lo >= width:
                self._bisect_unlocked()
            return self.lo, self.hi

    def same_root(self, other: "AlgebraicReal") -> bool:
        if self is other:
            return True
        if self.minpoly != other.minpoly:
            return False
        lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        if self.hi <= other.lo or other.hi <= self.lo:
            return False
        return count_real_roots(self.minpoly, lo, hi) == 1

    def __float__(self) -> float:
        lo, hi = self.refine(Fraction(1, 2**60))
        return float((lo + hi) / 2)

    def __repr__(self) -> str:
        return f"AlgebraicReal(root of {self.minpoly} in ({self.lo}, {self.hi}))"


def isolate_root(p: IntPolynomial, lo: Number, hi: Number) -> AlgebraicReal | None:
    """The unique root of ``p`` in the open interval (lo, hi), or ``None`` if
    there is none.  Raises :class:`MultipleRootsError` if there are several."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    sq = p.squarefree_part()
    if sq.degree < 1:
        return None
    n = count_real_roots(sq, lo, hi)
    if n == 0:
        return None
    if n > 1:
        raise MultipleRootsError(f"{n} roots of {p} in ({lo}, {hi})")
    return AlgebraicReal(sq, lo, hi, _checked=True)


# ---------------------------------------------------------------------------
# irreducibility certificates
# ---------------------------------------------------------------------------


def small_primes(count: int) -> list[int]:
    out: list[int] = []
    n = 2
    while len(out) < count:
        if all(n % p for p in out if p * p <= n):
            out.append(n)
        n += 1
    return out


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def _rational_roots(p: IntPolynomial) -> list[Fraction]:
    c = p.coeffs
    if c[0] == 0:
        return [Fraction(0)]
    roots = []
    for num in _divisors(c[0]):
        for den in _divisors(c[-1]):
            for r in (Fraction(num, den), Fraction(-num, den)):
                if r not in roots and p(r) == 0:
                    roots.append(r)
    return roots


# GF(p)[t] helpers; lists of ints mod p, constant first


def _gf_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_mod(a: list, b: list, p: int) -> list:
    a = a[:]
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[i + shift] = (a[i + shift] - coef * bi) % p
        _gf_trim(a)
    return a


def _gf_mulmod(a: list, b: list, f: list, p: int) -> list:
    out = [0] * max(len(a) + len(b) - 1, 0)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _gf_mod(_gf_trim(out), f, p)


def _gf_gcd(a: list, b: list, p: int) -> list:
    a, b = _gf_trim(a[:]), _gf_trim(b[:])
    while b:
        a, b = b, _gf_mod(a, b, p)
    return a


def _gf_frobenius_power(f: list, p: int, k: int) -> list:
    """t^(p^k) mod f over GF(p)."""
    x = [0, 1]
    for _ in range(k):
        result = [1]
        base = _gf_mod(x, f, p)
        e = p
        while e:
            if e & 1:
                result = _gf_mulmod(result, base, f, p)
            base = _gf_mulmod(base, base, f, p)
            e >>= 1
        x = result
    return _gf_mod(x, f, p)


def _gf_irreducible(f: list, p: int) -> bool:
    """Rabin's test for a monic f over GF(p)."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    t = [0, 1]
    if _gf_trim([(a - b) % p for a, b in _zip_pad(_gf_frobenius_power(f, p, n), t)]):
        return False
    for q in _prime_factors(n):
        h = _gf_frobenius_power(f, p, n // q)
        diff = _gf_trim([(a - b) % p for a, b in _zip_pad(h, t)])
        if len(_gf_gcd(f, diff, p)) != 1:
            return False
    return True


def _zip_pad(a: list, b: list):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """How irreducibility over Q was (or was not) established.

    ``kind`` is one of ``eisenstein``, ``rational-root-excluded``,
    ``mod-p-irreducible``, ``reducible`` or ``unknown``.
    """

    kind: str
    prime: int | None = None
    detail: str = ""

    @property
    def irreducible(self) -> bool | None:
        if self.kind == "reducible":
            return False
        if self.kind == "unknown":
            return None
        return True

    def to_json(self) -> dict:
        return {"kind": self.kind, "prime": self.prime, "detail": self.detail}


def _certify(p: IntPolynomial, n_primes: int = 25) -> IrreducibilityCertificate:
    c = p.coeffs
    n = p.degree
    if n == 1:
        return IrreducibilityCertificate("rational-root-excluded", detail="linear")
    lead = c[-1]
    g = 0
    for x in c[:-1]:
        g = math.gcd(g, x)
    for q in _prime_factors(g) if g else []:
        if lead % q and c[0] % (q * q):
            return IrreducibilityCertificate("eisenstein", q, f"Eisenstein at {q}")
    roots = _rational_roots(p)
    if roots:
        r = roots[0]
        return IrreducibilityCertificate(
            "reducible", detail=f"rational root {format_rational(r)}, factor ({r.denominator}t - {r.numerator})"
        )
    if n <= 3:
        return IrreducibilityCertificate("rational-root-excluded", detail=f"degree {n}, no rational root")
    for q in [q for q in small_primes(n_primes + 8) if lead % q][:n_primes]:
        inv = pow(lead % q, -1, q)
        f = [(x * inv) % q for x in c]
        if _gf_irreducible(f, q):
            return IrreducibilityCertificate("mod-p-irreducible", q, f"irreducible modulo {q}")
    return IrreducibilityCertificate("unknown", detail="no certificate found")


def irreducibility_witness(p: IntPolynomial) -> IrreducibilityCertificate:
    """Try, in order: Eisenstein at a prime, rational-root exclusion (degree at
    most 3; a found rational root is reported as ``reducible``) and
    irreducibility modulo one of the first 25 usable primes."""
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    if not p.is_monic():
        raise ValueError(f"{p} is not monic")
    return _certify(p)


# ---------------------------------------------------------------------------
# number fields
# ---------------------------------------------------------------------------


def _imul(a: tuple, b: tuple) -> tuple:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(products), max(products)


class NumberField:
    """The real field Q(xi) for an algebraic real ``xi``.

    ``certificate`` records how irreducibility of the minimal polynomial was
    established; if it is ``unknown`` the field is usable but marked
    ``conditional``.  A reducible polynomial is rejected.
    """

    _SIGN_CACHE_LIMIT = 1 << 18

    def __init__(self, generator: AlgebraicReal, name: str = "xi"):
        self.generator = generator
        self.name = name
        self.minpoly = generator.minpoly
        self.degree = generator.degree
        self.certificate = _certify(self.minpoly)
        if self.certificate.irreducible is False:
            raise ValueError(f"{self.minpoly} is reducible ({self.certificate.detail})")
        self.conditional = self.certificate.irreducible is None
        self._monic = [Fraction(c, self.minpoly.lead) for c in self.minpoly.coeffs]
        self._lock = threading.Lock()
        self._powers: list[tuple[Fraction, Fraction]] | None = None
        self._powers_for: tuple[Fraction, Fraction] | None = None
        self._sign_cache: dict[tuple, int] = {}

    @classmethod
    def from_polynomial(cls, coeffs: Sequence[int], lo: Number, hi: Number, name: str = "xi") -> "NumberField":
        root = isolate_root(IntPolynomial(coeffs), lo, hi)
        if root is None:
            raise ValueError(f"no root of {IntPolynomial(coeffs)} in ({lo}, {hi})")
        return cls(root, name)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, NumberField) and self.generator.same_root(other.generator)

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def __repr__(self) -> str:
        lo, hi = self.generator.interval()
        return f"NumberField({self.minpoly}, {self.name} in ({lo}, {hi}))"

    # element construction

    def __call__(self, value) -> "NumberFieldElement":
        if isinstance(value, NumberFieldElement):
            if value.field != self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, (list, tuple)):
            if len(value) > self.degree:
                raise ValueError(f"expected at most {self.degree} coordinates")
            coeffs = [parse_rational(v) for v in value]
            return NumberFieldElement(self, coeffs + [Fraction(0)] * (self.degree - len(coeffs)))
        return NumberFieldElement(self, [parse_rational(value)] + [Fraction(0)] * (self.degree - 1))

    def zero(self) -> "NumberFieldElement":
        return self(0)

    def one(self) -> "NumberFieldElement":
        return self(1)

    def gen(self) -> "NumberFieldElement":
        if self.degree == 1:
            # the generator is a rational root
            lo, hi = self.generator.interval()
            c = self.minpoly.coeffs
            return self(Fraction(-c[0], c[1]))
        return self([0, 1])

    # reduction

    def reduce(self, coeffs: Sequence) -> tuple[Fraction, ...]:
        c = [Fraction(x) for x in coeffs]
        m = self.degree
        mon = self._monic
        for i in range(len(c) - 1, m - 1, -1):
            top = c[i]
            if top:
                for j in range(m):
                    c[i - m + j] -= top * mon[j]
            c[i] = Fraction(0)
        c = c[:m] + [Fraction(0)] * (m - len(c))
        return tuple(c)

    # sign determination

    def _power_enclosures(self) -> list[tuple[Fraction, Fraction]]:
        ival = self.generator.interval()
        if self._powers is None or self._powers_for != ival:
            pw = [(Fraction(1), Fraction(1))]
            for _ in range(1, self.degree):
                pw.append(_imul(pw[-1], ival))
            self._powers, self._powers_for = pw, ival
        return self._powers

    def enclosure(self, coeffs: Sequence[Fraction]) -> tuple[Fraction, Fraction]:
        """Closed rational interval containing the value of ``coeffs``."""
        with self._lock:
            pw = self._power_enclosures()
        lo = hi = coeffs[0]
        for c, (pl, ph) in zip(coeffs[1:], pw[1:]):
            if c > 0:
                lo += c * pl
                hi += c * ph
            elif c < 0:
                lo += c * ph
                hi += c * pl
        return lo, hi

    def sign(self, coeffs: tuple[Fraction, ...]) -> int:
        if not any(coeffs[1:]):
            return _sign(coeffs[0])
        cached = self._sign_cache.get(coeffs)
        if cached is not None:
            return cached
        steps = 0
        while True:
            lo, hi = self.enclosure(coeffs)
            if lo > 0:
                s = 1
                break
            if hi < 0:
                s = -1
                break
            for _ in range(4):
                self.generator.bisect()
            steps += 4
            if steps > 8000:
                raise ArithmeticError("sign undecided; is the minimal polynomial irreducible?")
        if len(self._sign_cache) > self._SIGN_CACHE_LIMIT:
            self._sign_cache.clear()
        self._sign_cache[coeffs] = s
        return s

    def floor(self, coeffs: tuple[Fraction, ...]) -> int:
        if not any(coeffs[1:]):
            return math.floor(coeffs[0])
        steps = 0
        while True:
            lo, hi = self.enclosure(coeffs)
            flo = math.floor(lo)
            if flo == math.floor(hi):
                return flo
            for _ in range(4):
                self.generator.bisect()
            steps += 4
            if steps > 8000:
                raise ArithmeticError("floor undecided; is the minimal polynomial irreducible?")

    def decimal(self, coeffs: tuple[Fraction, ...], digits: int = 12) -> str:
        """Decimal rendering, correct to about ``digits`` places (display only)."""
        target = Fraction(1, 10 ** (digits + 2))
        while True:
            lo, hi = self.enclosure(coeffs)
            if hi - lo < target:
                break
            for _ in range(4):
                self.generator.bisect()
        mid = (lo + hi) / 2
        scaled = round(mid * 10**digits)
        neg = scaled < 0
        scaled = abs(scaled)
        whole, frac = divmod(scaled, 10**digits)
        return f"{'-' if neg else ''}{whole}.{frac:0{digits}d}"


class NumberFieldElement:
    """Element ``sum(coeffs[i] * xi**i)`` of a :class:`NumberField`.

    Immutable.  Comparison operators decide the sign of the difference
    exactly.
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: NumberField, coeffs: Sequence):
        self.field = field
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if len(self.coeffs) != field.degree:
            raise ValueError("coefficient vector length must equal the field degree")
        self._hash = None

    def _coerce(self, other) -> "NumberFieldElement":
        if isinstance(other, NumberFieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumberFieldElement(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumberFieldElement(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return NumberFieldElement(self.field, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = _pmul(self.coeffs, other.coeffs)
        return NumberFieldElement(self.field, self.field.reduce(prod) if prod else [0] * self.field.degree)

    __rmul__ = __mul__

    def inverse(self) -> "NumberFieldElement":
        """Inverse via the extended Euclidean algorithm modulo the minimal
        polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        r0, r1 = [Fraction(c) for c in self.field.minpoly.coeffs], _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        if not r1:
            raise ArithmeticError("element shares a factor with the minimal polynomial")
        inv = [c / r1[0] for c in s1]
        return NumberFieldElement(self.field, self.field.reduce(inv))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return NumberFieldElement(self.field, [a / other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def sign(self) -> int:
        return self.field.sign(self.coeffs)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def floor(self) -> int:
        return self.field.floor(self.coeffs)

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def _cmp(self, other) -> int:
        diff = self - other
        if diff is NotImplemented:
            raise TypeError("unsupported comparison")
        return diff.sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self) -> float:
        return float(self.decimal(17))

    def decimal(self, digits: int = 12) -> str:
        return self.field.decimal(self.coeffs, digits)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else (self.field.name if i == 1 else f"{self.field.name}^{i}")
            if mono and c == 1:
                body = mono
            elif mono and c == -1:
                body = "-" + mono
            else:
                body = f"{c}{'*' + mono if mono else ''}"
            terms.append(body)
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"NumberFieldElement({self})"


def nf_arith(a: NumberFieldElement, b: NumberFieldElement, op: str) -> NumberFieldElement:
    if a.field != b.field:
        raise ValueError("elements of different number fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def nf_sign(a: NumberFieldElement) -> str:
    return {-1: "negative", 0: "zero", 1: "positive"}[a.sign()]


def rational_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q of a list of rational vectors."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank
