"""Verification suites: each builds a list of checks for one construction."""

from __future__ import annotations

import random
import time
from typing import Callable

from .algebra import growth_check, non_nil_check
from .config import ConfigError, Construction, RunConfig
from .degree import (
    ConstructionError,
    DegreeFunction,
    prefix_degree_bound,
    solve_recurrence_degrees,
    sturmian_bounds_check,
    sturmian_degree,
    verify_power_degrees,
)
from .report import Check, Report
from .salwa import cross_model_check, verify_homomorphism, verify_prop2, verify_salwa_decomposition
from .semigroup import (
    DegreeBounded,
    FactorWord,
    SignClass,
    classify,
    diameter_oracle_check,
    identity_power_check,
    nonzero_words,
    partition_check,
    verify_ideal_nilpotency,
    verify_local_nilpotency,
    witness_word,
)
from .words import Answer, MechanicalGenerator, RecurrentGenerator, complexity, format_word

DEFAULT_PRESET = {
    "theorem3": "kelarev",
    "theorem6": "sturmian-sqrt2",
    "theorem7": "example-8i",
    "kolotov": "kolotov",
    "prop2": "salwa",
    "nonnil": "kelarev",
    "growth": "sturmian-sqrt2",
}


def degree_for(construction: Construction) -> DegreeFunction | None:
    """The degree function attached to a word construction, if one exists."""
    g = construction.generator
    if isinstance(g, MechanicalGenerator):
        return sturmian_degree(g.alpha)
    if isinstance(g, RecurrentGenerator):
        try:
            return solve_recurrence_degrees(g, allow_unknown=True).degree
        except ConstructionError:
            return None
    return None


def model_for(construction: Construction, horizon: int | None = None):
    if construction.model is not None:
        return construction.model
    if construction.generator is not None:
        return FactorWord(construction.generator, degree_for(construction), horizon)
    raise ConfigError(f"construction {construction.kind!r} has no semigroup model")


def complexity_check(g, n_max: int, horizon: int | None = None) -> Check:
    """Exactly n + 1 factors of each length n <= n_max."""
    start = time.perf_counter()
    rows, wrong, unstable = [], [], []
    for n in range(1, n_max + 1):
        count, stable = complexity(g, n, max(horizon, n) if horizon else None)
        rows.append([n, count, stable])
        if not stable:
            unstable.append(n)
        elif count != n + 1:
            wrong.append(n)
    status = "fail" if wrong else ("indeterminate" if unstable else "pass")
    return Check(
        "complexity-n+1",
        "exactly n + 1 distinct factors of each length n",
        status,
        {"n_max": n_max, "counts": [r[1] for r in rows], "mismatches": wrong, "unstabilized": unstable},
        time.perf_counter() - start,
    )


def witness_check(model: DegreeBounded, n: int) -> Check:
    """The greedy word of length n is nonzero with every prefix degree
    strictly inside (-b, a)."""
    start = time.perf_counter()
    w = witness_word(model, n)
    degs = model.degree.prefix_degrees(w)[1:]
    outside = [i for i, x in enumerate(degs, 1) if not (-model.b < x < model.a)]
    nonzero = model.is_nonzero(w) is Answer.YES
    return Check(
        "witness",
        "a word of every length has all prefix degrees in (-b, a), so S is not nil",
        "pass" if nonzero and not outside else "fail",
        {
            "n": n,
            "prefix": format_word(w[:40], model.alphabet_size),
            "nonzero": nonzero,
            "prefixes_outside": outside[:20],
            "max_prefix_degree": max(degs).decimal(12),
            "min_prefix_degree": min(degs).decimal(12),
        },
        time.perf_counter() - start,
    )


def ideal_generators(model: DegreeBounded, seed: int, max_len: int = 5) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    pool = [w for w in nonzero_words(model, max_len) if classify(model, w) is SignClass.PLUS]
    return sorted(rng.sample(pool, min(3, len(pool))))


def theorem3_suite(c: Construction, cfg: RunConfig) -> list[Check]:
    model = c.model
    if not isinstance(model, DegreeBounded):
        raise ConfigError("theorem3 needs a degree-bounded construction (kelarev or theorem3)")
    return [
        partition_check(model, cfg.max_len or 10),
        witness_check(model, cfg.n_max or 1000),
        verify_local_nilpotency(model, subsets=100, subset_size=3, max_len=5, seed=cfg.seed),
        verify_ideal_nilpotency(model, ideal_generators(model, cfg.seed), seed=cfg.seed),
        diameter_oracle_check(model, 8),
        non_nil_check(model, 200),
    ]


def theorem6_suite(c: Construction, cfg: RunConfig) -> list[Check]:
    if c.generator is None or c.generator.alphabet_size != 2:
        raise ConfigError("theorem6 needs a binary infinite word (sturmian, kolotov or a binary recurrence)")
    model = model_for(c, cfg.horizon)
    if model.degree is None:
        raise ConfigError("theorem6 needs a degree function for the word")
    n_max = cfg.n_max or 30
    max_len = cfg.max_len or 30
    _, grow = growth_check(model, n_max)
    return [
        complexity_check(c.generator, n_max, cfg.horizon),
        sturmian_bounds_check(model.factors_up_to(max_len), model.degree, max_len),
        grow,
        partition_check(model, cfg.max_len or 10),
        non_nil_check(model, 200),
    ]


def lengths_check(g: RecurrentGenerator, n_max: int) -> Check:
    """|omega_n| strictly increases from n = m - 1 on, so the words are
    pairwise distinct and arbitrarily long."""
    start = time.perf_counter()
    lengths = [g.omega_length(n) for n in range(n_max + 1)]
    m = g.alphabet_size
    tail = lengths[m - 1 :]
    ok = all(x < y for x, y in zip(tail, tail[1:]))
    return Check(
        "unbounded-lengths",
        "the words omega_n have unbounded length, so S(omega, rho) is not nilpotent",
        "pass" if ok else "fail",
        {
            "n_max": n_max,
            "lengths": lengths,
            "strictly_increasing_from": m - 1,
            "strictly_increasing_from_0": all(x < y for x, y in zip(lengths, lengths[1:])),
        },
        time.perf_counter() - start,
    )


def theorem7_suite(c: Construction, cfg: RunConfig) -> list[Check]:
    g = c.generator
    if not isinstance(g, RecurrentGenerator):
        raise ConfigError("theorem7 needs a recurrent construction (theorem7, kolotov or example-8i/ii)")
    start = time.perf_counter()
    try:
        solved = solve_recurrence_degrees(g, allow_unknown=True)
    except ConstructionError as exc:
        return [Check("degree-solve", "degrees with d(omega_j) = xi^j exist", "fail", {"error": str(exc)}, time.perf_counter() - start)]
    lo, hi = solved.field.generator.interval()
    in_range = -1 <= lo and hi <= 0
    pipeline = Check(
        "degree-solve",
        "xi in (-1, 0) is a root of t^m - f_rho, and d(omega_j) = xi^j has an independent solution",
        "pass" if in_range and solved.determinant != 0 and solved.independence.full_rank else "fail",
        solved.to_json(),
        time.perf_counter() - start,
    )
    checks = [pipeline, verify_power_degrees(g, solved.degree, solved.xi, cfg.n_max or 20)]
    checks.append(prefix_degree_bound(g, solved.degree, solved.xi, 10)[1])
    checks.append(lengths_check(g, cfg.n_max or 20))
    model = FactorWord(g, solved.degree, cfg.horizon)
    checks.append(partition_check(model, cfg.max_len or 10))
    checks.append(non_nil_check(model, 200))
    return checks


def kolotov_suite(c: Construction, cfg: RunConfig) -> list[Check]:
    if c.generator is None:
        raise ConfigError("kolotov suite needs an infinite word construction")
    model = FactorWord(c.generator, None, cfg.horizon)
    return [
        identity_power_check(model, cfg.max_len or 12, 5),
        complexity_check(c.generator, cfg.n_max or 30, cfg.horizon),
    ]


def prop2_suite(c: Construction, cfg: RunConfig) -> list[Check]:
    if c.salwa is None:
        raise ConfigError("prop2 needs a salwa construction")
    a, b, interval = c.salwa
    return [
        verify_prop2(a, b, interval, cfg.max_len or 12),
        verify_homomorphism(a, b, interval, pairs=1000, max_len=8, seed=cfg.seed),
        verify_salwa_decomposition(a, b, interval, seed=cfg.seed),
        cross_model_check(a, b, interval, 10),
    ]


def nonnil_suite(c: Construction, cfg: RunConfig) -> list[Check]:
    return [non_nil_check(model_for(c, cfg.horizon), cfg.n_max or 200)]


def growth_suite(c: Construction, cfg: RunConfig) -> list[Check]:
    model = model_for(c, cfg.horizon)
    sturmian = isinstance(model, FactorWord) and model.alphabet_size == 2
    return [growth_check(model, cfg.n_max or 30, expect_sturmian=sturmian)[1]]


SUITE_RUNNERS: dict[str, Callable[[Construction, RunConfig], list[Check]]] = {
    "theorem3": theorem3_suite,
    "theorem6": theorem6_suite,
    "theorem7": theorem7_suite,
    "kolotov": kolotov_suite,
    "prop2": prop2_suite,
    "nonnil": nonnil_suite,
    "growth": growth_suite,
}


def run(cfg: RunConfig) -> Report:
    """Run the selected suites in name order; failures are recorded in the
    report, configuration mismatches raise :class:`ConfigError`."""
    report = Report(cfg.construction.echo, seed=cfg.seed)
    for name in sorted(set(cfg.suites)):
        report.add(name, SUITE_RUNNERS[name](cfg.construction, cfg))
    return report
