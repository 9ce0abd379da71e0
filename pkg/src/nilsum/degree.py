"""Additive degree functions on free semigroups with values in a real number
field, and the degree solve for recursively defined word families."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exact import (
    AlgebraicReal,
    IntPolynomial,
    IrreducibilityCertificate,
    NumberField,
    NumberFieldElement,
    irreducibility_witness,
    isolate_root,
    rational_rank,
)
from .report import Check
from .words import RecurrentGenerator, Word, abelianize, word_polynomial

__all__ = [
    "DegreeFunction",
    "IndependenceCertificate",
    "independence_certificate",
    "sturmian_degree",
    "RecurrenceDegrees",
    "ConstructionError",
    "solve_recurrence_degrees",
    "verify_power_degrees",
    "PrefixBound",
    "prefix_degree_bound",
    "balancing_slope",
    "sturmian_bounds_check",
]


class ConstructionError(ValueError):
    """Inputs do not satisfy the hypotheses of a construction."""


class DegreeFunction:
    """Letter degrees in one number field, extended additively to words."""

    def __init__(self, values: Mapping[int, NumberFieldElement] | Sequence[NumberFieldElement]):
        if isinstance(values, Mapping):
            letters = sorted(values)
            if letters != list(range(1, len(letters) + 1)):
                raise ValueError("letters must be 1..m")
            vals = [values[i] for i in letters]
        else:
            vals = list(values)
        if not vals:
            raise ValueError("empty alphabet")
        self.field: NumberField = vals[0].field
        for v in vals:
            if v.field != self.field:
                raise ValueError("all letter degrees must lie in one field")
        self.values: tuple[NumberFieldElement, ...] = tuple(vals)

    @property
    def alphabet_size(self) -> int:
        return len(self.values)

    def __getitem__(self, letter: int) -> NumberFieldElement:
        return self.values[letter - 1]

    def __call__(self, w: Sequence[int]) -> NumberFieldElement:
        return self.of_counts(abelianize_checked(w, self.alphabet_size))

    def of_counts(self, counts: Sequence[int]) -> NumberFieldElement:
        coeffs = [Fraction(0)] * self.field.degree
        for c, v in zip(counts, self.values):
            if c:
                for j, x in enumerate(v.coeffs):
                    coeffs[j] += c * x
        return NumberFieldElement(self.field, coeffs)

    def prefix_degrees(self, w: Sequence[int]) -> list[NumberFieldElement]:
        """Degrees of the prefixes of ``w`` of length 0, 1, ..., |w|."""
        cur = [Fraction(0)] * self.field.degree
        out = [NumberFieldElement(self.field, cur)]
        for i in w:
            cur = [a + b for a, b in zip(cur, self.values[i - 1].coeffs)]
            out.append(NumberFieldElement(self.field, cur))
        return out

    def to_json(self) -> dict:
        return {
            "minpoly": self.field.minpoly.to_list(),
            "values": [v.to_json() for v in self.values],
            "decimal": [v.decimal(12) for v in self.values],
        }


def abelianize_checked(w: Sequence[int], m: int) -> tuple[int, ...]:
    if any(not 1 <= i <= m for i in w):
        raise KeyError(f"word uses letters outside 1..{m}")
    return abelianize(w, m)


@dataclass(frozen=True)
class IndependenceCertificate:
    """Coordinates of the letter degrees in the basis 1, xi, ..., xi^(m-1)
    and the rank of that matrix over Q."""

    coords: tuple[tuple[Fraction, ...], ...]
    rank: int

    @property
    def full_rank(self) -> bool:
        return self.rank == len(self.coords)

    def to_json(self) -> dict:
        return {
            "coords": [[str(c) for c in row] for row in self.coords],
            "rank": self.rank,
            "full_rank": self.full_rank,
        }


def independence_certificate(d: DegreeFunction) -> IndependenceCertificate:
    coords = tuple(v.coeffs for v in d.values)
    return IndependenceCertificate(coords, rational_rank(coords))


def sturmian_degree(alpha: AlgebraicReal | NumberFieldElement) -> DegreeFunction:
    """d(x) = 1 - alpha, d(y) = -alpha in Q(alpha)."""
    if isinstance(alpha, AlgebraicReal):
        alpha = NumberField(alpha, "alpha").gen()
    if alpha.is_rational():
        raise ConstructionError("slope must be irrational")
    if not (alpha > 0 and alpha < 1):
        raise ConstructionError("slope must lie in (0, 1)")
    one = alpha.field.one()
    return DegreeFunction([one - alpha, -alpha])


def _determinant(matrix: Sequence[Sequence[int]]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for i in range(col + 1, n):
            f = m[i][col] / m[col][col]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return det


def _solve(matrix: Sequence[Sequence], rhs: Sequence[NumberFieldElement]) -> list[NumberFieldElement]:
    """Gaussian elimination; entries may be rationals or field elements."""
    n = len(matrix)
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [a[i][n] for i in range(n)]


@dataclass
class RecurrenceDegrees:
    """Outcome of the degree solve for a recurrent word family."""

    degree: DegreeFunction
    xi: NumberFieldElement
    characteristic: IntPolynomial
    irreducibility: IrreducibilityCertificate
    matrix: list[list[int]]
    determinant: Fraction
    independence: IndependenceCertificate
    conditional: bool = False
    warnings: list[str] = field(default_factory=list)

    @property
    def field(self) -> NumberField:
        return self.xi.field

    def to_json(self) -> dict:
        lo, hi = self.field.generator.interval()
        return {
            "characteristic_polynomial": self.characteristic.to_list(),
            "characteristic_polynomial_text": str(self.characteristic),
            "irreducibility": self.irreducibility.to_json(),
            "xi_interval": [str(lo), str(hi)],
            "xi_decimal": self.xi.decimal(12),
            "matrix": self.matrix,
            "determinant": str(self.determinant),
            "degrees": self.degree.to_json(),
            "independence": self.independence.to_json(),
            "conditional_on_irreducibility": self.conditional,
            "warnings": self.warnings,
        }


def solve_recurrence_degrees(g: RecurrentGenerator, allow_unknown: bool = False) -> RecurrenceDegrees:
    """Find letter degrees with d(omega_j) = xi^j for the seeds, where xi is
    the root in (-1, 0) of t^m - f_rho(t).

    Raises :class:`ConstructionError` on a zero determinant, a missing root,
    a reducible polynomial, or (unless ``allow_unknown``) an uncertified one.
    """
    m = g.alphabet_size
    f_rho = word_polynomial(g.rho(0), m)
    t_m = IntPolynomial([0] * m + [1])
    char = t_m - f_rho
    cert = irreducibility_witness(char)
    warnings = []
    if cert.irreducible is False:
        raise ConstructionError(f"{char} is reducible: {cert.detail}")
    if cert.irreducible is None:
        if not allow_unknown:
            raise ConstructionError(f"irreducibility of {char} could not be certified")
        warnings.append(f"results are conditional on the irreducibility of {char}")
    root = isolate_root(char, -1, 0)
    if root is None:
        raise ConstructionError(f"{char} has no root in (-1, 0)")
    field = NumberField(root, "xi")
    xi = field.gen()
    # a[i][j]: occurrences of letter i+1 in omega_j
    seeds_ab = [abelianize(s, m) for s in g.seeds]
    matrix = [[seeds_ab[j][i] for j in range(m)] for i in range(m)]
    det = _determinant(matrix)
    if det == 0:
        raise ConstructionError("seed abelianizations give a zero determinant")
    # equation j: sum_i a[i][j] d(z_i) = xi^j
    rows = [[Fraction(seeds_ab[j][i]) for i in range(m)] for j in range(m)]
    rhs = [xi**j for j in range(m)]
    values = _solve(rows, rhs)
    d = DegreeFunction(values)
    indep = independence_certificate(d)
    if not indep.full_rank:
        raise ConstructionError("letter degrees are linearly dependent over Q")
    return RecurrenceDegrees(
        degree=d,
        xi=xi,
        characteristic=char,
        irreducibility=cert,
        matrix=matrix,
        determinant=det,
        independence=indep,
        conditional=cert.irreducible is None,
        warnings=warnings,
    )


def verify_power_degrees(g: RecurrentGenerator, d: DegreeFunction, xi: NumberFieldElement, n_max: int) -> Check:
    """d(omega_n) = xi^n for n = 0..n_max, exactly.  Letter counts of omega_n
    come from the substitution structure, so long words are not built."""
    start = time.perf_counter()
    records = []
    ok = True
    power = xi.field.one()
    for n in range(n_max + 1):
        lhs = d.of_counts(g.omega_abelian(n))
        equal = lhs == power
        ok &= equal
        records.append({"n": n, "lhs": lhs.to_json(), "rhs": power.to_json(), "equal": equal})
        power = power * xi
    return Check(
        "power-degrees",
        "degree of the n-th word equals xi^n",
        "pass" if ok else "fail",
        {"checks": records, "n_max": n_max},
        time.perf_counter() - start,
    )


@dataclass
class PrefixBound:
    """Closed-form bound q on |d(u)| over beginnings u of every omega_n,
    with the observed maxima q_n over beginnings of omega_0..omega_n."""

    q: NumberFieldElement
    q_seed: NumberFieldElement
    c: int
    observed: list[NumberFieldElement]

    def to_json(self) -> dict:
        return {
            "q": self.q.to_json(),
            "q_decimal": self.q.decimal(12),
            "q_seed": self.q_seed.to_json(),
            "c": self.c,
            "observed": [x.decimal(12) for x in self.observed],
        }


def _max_abs_prefix_degree(d: DegreeFunction, w: Word) -> NumberFieldElement:
    """max |d(u)| over nonempty beginnings u of w.  Floats pick out the
    candidates (accumulated error is far below the 1e-6 slack); the maximum
    among them is then taken exactly from letter counts."""
    approx = [float(v) for v in d.values]
    m = d.alphabet_size
    counts = [0] * m
    prefixes = []
    total = 0.0
    for i in w:
        counts[i - 1] += 1
        total += approx[i - 1]
        prefixes.append((abs(total), tuple(counts)))
    top = max(a for a, _ in prefixes)
    cands = {c for a, c in prefixes if a >= top - 1e-6 * max(1.0, top)}
    return max(abs(d.of_counts(c)) for c in cands)


def prefix_degree_bound(
    g: RecurrentGenerator, d: DegreeFunction, xi: NumberFieldElement, n_max: int
) -> tuple[PrefixBound, Check]:
    """q = (c - 1) / (1 - |xi|) + q_(m-1); checks |d(u)| < q for every
    beginning u of omega_0..omega_n_max and the step inequality
    q_(n+m) <= (c - 1)|xi|^n + q_(n+m-1) on the observed maxima."""
    start = time.perf_counter()
    m = g.alphabet_size
    c = g.c
    abs_xi = abs(xi)
    observed: list[NumberFieldElement] = []
    running = None
    for n in range(n_max + 1):
        top = _max_abs_prefix_degree(d, g.omega(n))
        running = top if running is None else max(running, top)
        observed.append(running)
    q_seed = observed[m - 1] if n_max >= m - 1 else max(_max_abs_prefix_degree(d, s) for s in g.seeds)
    q = (xi.field(c - 1)) / (1 - abs_xi) + q_seed
    below = [n for n in range(n_max + 1) if not observed[n] < q]
    step_failures = []
    for n in range(0, n_max - m + 1):
        rhs = abs_xi**n * (c - 1) + observed[n + m - 1]
        if not observed[n + m] <= rhs:
            step_failures.append(n)
    lengths = [len(g.omega(n)) for n in range(n_max + 1)]
    bound = PrefixBound(q, q_seed, c, observed)
    ok = not below and not step_failures
    details = {
        "bound": bound.to_json(),
        "n_max": n_max,
        "word_lengths": lengths,
        "violations": below,
        "step_inequality_failures": step_failures,
    }
    return bound, Check(
        "prefix-degree-bound",
        "all beginnings of all omega_n have |degree| below q",
        "pass" if ok else "fail",
        details,
        time.perf_counter() - start,
    )


def balancing_slope(d: DegreeFunction) -> NumberFieldElement:
    """For binary d with d(x) > 0 > d(y): the x-density at which the degree
    vanishes, -d(y) / (d(x) - d(y))."""
    if d.alphabet_size != 2:
        raise ValueError("binary alphabet required")
    dx, dy = d.values
    if not (dx.sign() > 0 and dy.sign() < 0):
        raise ValueError("need d(x) > 0 > d(y)")
    return -dy / (dx - dy)


def sturmian_bounds_check(factor_words, d: DegreeFunction, max_len: int) -> Check:
    """For every listed factor u: |slope(u) - alpha| <= 1/|u| and, for the
    normalized degree d(u) / (d(x) - d(y)), -1 <= d(u) <= 1."""
    from .words import format_word, slope

    start = time.perf_counter()
    alpha = balancing_slope(d)
    scale = d.values[0] - d.values[1]
    slope_fail, degree_fail = [], []
    tested = 0
    for u in factor_words:
        if len(u) > max_len:
            continue
        tested += 1
        if abs(alpha - slope(u)) > Fraction(1, len(u)):
            slope_fail.append(format_word(u))
        du = d(u) / scale
        if du > 1 or du < -1:
            degree_fail.append(format_word(u))
    return Check(
        "sturmian-bounds",
        "|slope(u) - alpha| <= 1/|u| and |d(u)| <= 1 for every factor u",
        "pass" if not slope_fail and not degree_fail else "fail",
        {
            "max_len": max_len,
            "tested": tested,
            "alpha": alpha.to_json(),
            "alpha_decimal": alpha.decimal(12),
            "slope_failures": slope_fail[:20],
            "degree_failures": degree_fail[:20],
        },
        time.perf_counter() - start,
    )
