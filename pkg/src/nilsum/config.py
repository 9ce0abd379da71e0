"""Run configuration: JSON construction specs, validated before any work."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import presets
from .degree import DegreeFunction, sturmian_degree
from .exact import NumberField, parse_rational
from .salwa import ExactInterval, check_generators
from .semigroup import DegreeBounded
from .words import MechanicalGenerator, RecurrentGenerator, kolotov, parse_word

SUITES = ("growth", "kolotov", "nonnil", "prop2", "theorem3", "theorem6", "theorem7")
FORMATS = ("json", "csv", "text")


class ConfigError(ValueError):
    """Invalid configuration; the message names the failing constraint."""


@dataclass
class Construction:
    """A validated construction: the kind, its echo for reports, and the
    objects it builds."""

    kind: str
    echo: dict[str, Any]
    model: DegreeBounded | None = None
    generator: Any = None
    salwa: tuple | None = None


@dataclass
class RunConfig:
    construction: Construction
    suites: list[str] = field(default_factory=list)
    max_len: int | None = None
    n_max: int | None = None
    horizon: int | None = None
    seed: int = 0
    format: str = "json"
    output: str | None = None


def _need(spec: dict, key: str, where: str):
    if key not in spec:
        raise ConfigError(f"{where}: missing required field {key!r}")
    return spec[key]


def _field(spec: dict, where: str) -> NumberField:
    minpoly = _need(spec, "minpoly", where)
    interval = _need(spec, "interval", where)
    if not isinstance(minpoly, list) or not all(isinstance(c, int) for c in minpoly):
        raise ConfigError(f"{where}: minpoly must be a list of integers, constant term first")
    if not isinstance(interval, list) or len(interval) != 2:
        raise ConfigError(f"{where}: interval must be [lo, hi]")
    try:
        lo, hi = (parse_rational(x) for x in interval)
        return NumberField.from_polynomial(minpoly, lo, hi, spec.get("name", "xi"))
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ConfigError(f"{where}: {exc}") from None


def _element(F: NumberField, value, where: str):
    try:
        return F(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ConfigError(f"{where}: {exc}") from None


def _int(value, where: str, minimum: int = 0) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ConfigError(f"{where} must be an integer >= {minimum}")
    return value


def build_construction(spec) -> Construction:
    if isinstance(spec, str):
        spec = {"kind": "preset", "name": spec}
    if not isinstance(spec, dict):
        raise ConfigError("construction must be an object or a preset name")
    kind = _need(spec, "kind", "construction")
    try:
        if kind == "preset":
            return preset_construction(_need(spec, "name", "construction"))
        if kind == "kelarev":
            F = _field({"minpoly": _need(spec, "alpha_minpoly", "kelarev"), "interval": _need(spec, "alpha_interval", "kelarev"), "name": "alpha"}, "kelarev")
            alpha = F.gen()
            if alpha.is_rational() or alpha.sign() <= 0:
                raise ConfigError("kelarev: alpha must be a positive irrational")
            d = DegreeFunction([F(1), -alpha])
            model = DegreeBounded(d, _element(F, _need(spec, "a", "kelarev"), "kelarev.a"), _element(F, _need(spec, "b", "kelarev"), "kelarev.b"))
            return Construction("degree-bounded", {"kind": kind, **model.describe()}, model=model)
        if kind == "theorem3":
            F = _field(spec, "theorem3")
            degrees = _need(spec, "degrees", "theorem3")
            if not isinstance(degrees, list) or len(degrees) < 2:
                raise ConfigError("theorem3: degrees must list at least two letter degrees")
            d = DegreeFunction([_element(F, v, f"theorem3.degrees[{i}]") for i, v in enumerate(degrees)])
            model = DegreeBounded(d, _element(F, _need(spec, "a", "theorem3"), "theorem3.a"), _element(F, _need(spec, "b", "theorem3"), "theorem3.b"))
            return Construction("degree-bounded", {"kind": kind, **model.describe()}, model=model)
        if kind == "sturmian":
            F = _field(_need(spec, "alpha", "sturmian"), "sturmian.alpha")
            g = MechanicalGenerator(F.gen(), parse_rational(spec.get("intercept", 0)))
            sturmian_degree(g.alpha)
            return Construction("factor-word", {"kind": kind, **g.describe()}, generator=g)
        if kind == "kolotov":
            g = kolotov()
            return Construction("factor-word", {"kind": kind, **g.describe()}, generator=g)
        if kind in ("theorem7", "recurrent"):
            seeds = _need(spec, "seeds", kind)
            rho = _need(spec, "rho", kind)
            if not isinstance(seeds, list) or len(seeds) < 2:
                raise ConfigError(f"{kind}: seeds must be a list of at least two words")
            letters = spec.get("letters")
            g = RecurrentGenerator([parse_word(s, letters) for s in seeds], parse_word(rho, letters), name=kind)
            return Construction("recurrent", {"kind": kind, **g.describe()}, generator=g)
        if kind == "salwa":
            F = _field(spec, "salwa")
            a = _element(F, _need(spec, "a", "salwa"), "salwa.a")
            b = _element(F, _need(spec, "b", "salwa"), "salwa.b")
            interval = ExactInterval(_element(F, _need(spec, "lo", "salwa"), "salwa.lo"), _element(F, _need(spec, "hi", "salwa"), "salwa.hi"))
            check_generators(a, b)
            if interval.empty:
                raise ConfigError("salwa: interval must be nonempty")
            return Construction("salwa", _salwa_echo(a, b, interval), salwa=(a, b, interval))
    except ConfigError:
        raise
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"{kind}: {exc}") from None
    raise ConfigError(f"unknown construction kind {kind!r}")


def _salwa_echo(a, b, interval) -> dict:
    return {"kind": "salwa", "a": a.to_json(), "b": b.to_json(), "interval": interval.to_json(), "minpoly": a.field.minpoly.to_list()}


def preset_construction(name: str) -> Construction:
    if name == "kelarev":
        model = presets.kelarev()
        return Construction("degree-bounded", {"preset": name, **model.describe()}, model=model)
    if name == "kolotov":
        g = kolotov()
        return Construction("factor-word", {"preset": name, **g.describe()}, generator=g)
    if name in ("example-8i", "example-8ii"):
        g = presets.example_8i() if name == "example-8i" else presets.example_8ii()
        return Construction("recurrent", {"preset": name, **g.describe()}, generator=g)
    if name in ("sturmian-sqrt2", "sturmian-sqrt3"):
        g = presets.mechanical(name)
        return Construction("factor-word", {"preset": name, **g.describe()}, generator=g)
    if name == "salwa":
        a, b, interval = presets.salwa()
        return Construction("salwa", {"preset": name, **_salwa_echo(a, b, interval)}, salwa=(a, b, interval))
    raise ConfigError(f"unknown preset {name!r}; choose from {', '.join(sorted(presets.CONSTRUCTIONS))}")


def load_config(data: dict | str | Path) -> RunConfig:
    if not isinstance(data, dict):
        try:
            data = json.loads(Path(data).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    construction = build_construction(_need(data, "construction", "config"))
    suites = data.get("suites", [])
    if isinstance(suites, str):
        suites = [suites]
    for s in suites:
        if s not in SUITES:
            raise ConfigError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    fmt = data.get("format", "json")
    if fmt not in FORMATS:
        raise ConfigError(f"format must be one of {', '.join(FORMATS)}")
    cfg = RunConfig(construction, list(suites), format=fmt, output=data.get("output"))
    for key in ("max_len", "n_max", "horizon"):
        if data.get(key) is not None:
            setattr(cfg, key, _int(data[key], key, 1))
    cfg.seed = _int(data.get("seed", 0), "seed", 0)
    return cfg
