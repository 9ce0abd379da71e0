"""Command-line front end.

    nilsum gen-word kolotov -n 13
    nilsum complexity sturmian-sqrt2 --n-max 30
    nilsum growth kelarev --n-max 12
    nilsum verify theorem3 --preset kelarev --format text
    nilsum verify --config run.json
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import presets
from .algebra import growth
from .config import FORMATS, SUITES, ConfigError, Construction, RunConfig, build_construction, load_config
from .report import write_csv
from .suites import DEFAULT_PRESET, model_for, run
from .words import NotNestedError, complexity, format_word

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _construction(arg: str) -> Construction:
    """A preset name, or a path to a JSON file holding a construction (or a
    whole run config with a "construction" key)."""
    if arg in presets.CONSTRUCTIONS:
        return build_construction(arg)
    path = Path(arg)
    if not path.exists():
        raise ConfigError(f"unknown construction {arg!r}: not a preset ({', '.join(sorted(presets.CONSTRUCTIONS))}) or a file")
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read {arg}: {exc}") from None
    return build_construction(data.get("construction", data) if isinstance(data, dict) else data)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen_word(args) -> int:
    c = _construction(args.construction)
    if c.generator is None:
        raise ConfigError(f"{args.construction} does not define an infinite word")
    try:
        w = c.generator.prefix(args.n)
    except NotNestedError as exc:
        raise ConfigError(str(exc)) from None
    _emit(format_word(w, c.generator.alphabet_size) + "\n", args.output)
    return EXIT_OK


def cmd_complexity(args) -> int:
    c = _construction(args.construction)
    if c.generator is None:
        raise ConfigError(f"{args.construction} does not define an infinite word")
    rows = []
    for n in range(1, args.n_max + 1):
        count, stable = complexity(c.generator, n, max(args.horizon, n) if args.horizon else None)
        rows.append((n, count, str(stable).lower()))
    _emit(write_csv(rows, ["n", "count", "stabilized"]), args.output)
    return EXIT_OK


def cmd_growth(args) -> int:
    model = model_for(_construction(args.construction), args.horizon)
    table = growth(model, args.n_max)
    rows = [(n, c, g, e, str(m).lower()) for n, c, g, e, m in table.rows()]
    _emit(write_csv(rows, ["n", "count_n", "g_n", "expected_sturmian", "match"]), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.config:
        cfg = load_config(args.config)
        if args.suite:
            cfg.suites = [args.suite]
        if not cfg.suites:
            raise ConfigError("no suite selected: name one on the command line or in the config")
    else:
        if not args.suite:
            raise ConfigError("name a suite or pass --config")
        cfg = RunConfig(build_construction(args.preset or DEFAULT_PRESET[args.suite]), [args.suite])
    for key in ("max_len", "n_max", "horizon", "seed", "format", "output"):
        val = getattr(args, key)
        if val is not None:
            setattr(cfg, key, val)
    report = run(cfg)
    _emit(report.render(cfg.format, timing=not args.no_timing), cfg.output)
    if report.indeterminate:
        print("indeterminate: " + ", ".join(report.indeterminate), file=sys.stderr)
    return EXIT_FAIL if report.failed else EXIT_OK


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nilsum", description="Exact checks for degree-bounded and factor semigroups.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-word", help="print a prefix of an infinite word")
    g.add_argument("construction", help="preset name or JSON file")
    g.add_argument("-n", type=_positive, required=True, help="prefix length")
    g.add_argument("--output")
    g.set_defaults(func=cmd_gen_word)

    c = sub.add_parser("complexity", help="CSV of factor counts per length")
    c.add_argument("construction")
    c.add_argument("--n-max", type=_positive, default=30)
    c.add_argument("--horizon", type=_positive)
    c.add_argument("--output")
    c.set_defaults(func=cmd_complexity)

    gr = sub.add_parser("growth", help="CSV of the growth function")
    gr.add_argument("construction")
    gr.add_argument("--n-max", type=_positive, default=30)
    gr.add_argument("--horizon", type=_positive)
    gr.add_argument("--output")
    gr.set_defaults(func=cmd_growth)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", nargs="?", choices=SUITES)
    src = v.add_mutually_exclusive_group()
    src.add_argument("--preset", choices=sorted(presets.CONSTRUCTIONS))
    src.add_argument("--config", help="JSON run configuration")
    v.add_argument("--max-len", type=_positive)
    v.add_argument("--n-max", type=_positive)
    v.add_argument("--horizon", type=_positive)
    v.add_argument("--seed", type=int)
    v.add_argument("--format", choices=FORMATS)
    v.add_argument("--output")
    v.add_argument("--no-timing", action="store_true", help="omit timing fields for byte-identical reports")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
