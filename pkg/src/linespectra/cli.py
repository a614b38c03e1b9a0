"""Command line front end: generate, analyze, check, search, render.

All outputs are machine readable.  Exit codes: 0 on success, 1 for argument
or input errors, 2 when an applicable proven check (identity, theorem or
corollary) is violated, which always indicates a bug somewhere upstream.
Conjectures and informational checks never affect the exit code.

The --threads flag only changes how the pair enumeration is partitioned;
it never changes an output byte, so it is excluded from the echoed argument
map.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from .constructions import GENERATORS, expected_spectrum
from .inequalities import exit_code_for, run_checks, violations
from .projective import spectrum
from .render import render_svg
from .search import exhaustive_search, local_search
from .serialization import (
    config_to_json,
    dumps,
    field_to_json,
    frac_str,
    load_configuration,
    record_to_json,
    report_to_json,
    reports_to_csv,
    save_configuration,
    spectrum_to_csv,
    spectrum_to_json,
)


class CliError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


_GENERATOR_PARAMS = {
    "fermat": ("m",),
    "boroczky": ("m",),
    "sylvester-cubic": ("k",),
    "cuspidal-cubic": ("k",),
    "two-lines": ("m",),
    "near-pencil": ("n",),
    "grid": ("a", "b"),
    "random": ("n",),
}


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=("json", "csv"), default="json",
                    help="output format (json is lossless, csv approximate)")
    sp.add_argument("--out", help="write the output document here instead of stdout")
    sp.add_argument("--seed", type=int, default=0, help="random seed")
    sp.add_argument("--threads", type=int, default=1,
                    help="worker threads for pair enumeration (speed only)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linespectra",
                     description="Exact spanned-line spectra of planar "
                                 "point configurations.")
    sub = parser.add_subparsers(dest="command")

    gen = sub.add_parser("generate", help="write a named configuration as JSON")
    gen.add_argument("name", choices=sorted(_GENERATOR_PARAMS))
    gen.add_argument("--m", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--a", type=int)
    gen.add_argument("--b", type=int)
    gen.add_argument("--bound", type=int)
    _add_common(gen)
    gen.set_defaults(handler=_cmd_generate)

    ana = sub.add_parser("analyze", help="compute the line spectrum of a configuration file")
    ana.add_argument("input")
    _add_common(ana)
    ana.set_defaults(handler=_cmd_analyze)

    chk = sub.add_parser("check", help="evaluate identities and inequalities")
    chk.add_argument("input")
    chk.add_argument("which", nargs="?", default="all",
                     help="check name or name prefix (default: all)")
    chk.add_argument("--all", action="store_true", help="run every check")
    _add_common(chk)
    chk.set_defaults(handler=_cmd_check)

    sea = sub.add_parser("search", help="look for configurations with few incidences")
    sea.add_argument("mode", choices=("exhaustive", "local"))
    sea.add_argument("--n", type=int, required=True)
    sea.add_argument("--g", type=int, help="grid side (exhaustive)")
    sea.add_argument("--cap", type=int, help="maximum collinearity allowed")
    sea.add_argument("--bound", type=int, help="coordinate bound (local)")
    sea.add_argument("--iterations", type=int, default=2000)
    sea.add_argument("--restarts", type=int, default=4)
    sea.add_argument("--objective", choices=("incidences", "lines"),
                     default="incidences")
    sea.add_argument("--no-prune", action="store_true",
                     help="disable symmetry pruning (exhaustive)")
    sea.add_argument("--checkpoint", help="checkpoint file for resumable local search")
    _add_common(sea)
    sea.set_defaults(handler=_cmd_search)

    ren = sub.add_parser("render", help="draw a real configuration as SVG")
    ren.add_argument("input")
    _add_common(ren)
    ren.set_defaults(handler=_cmd_render)
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _manifest(command: str, arguments: Dict, result) -> str:
    return dumps({"command": command, "arguments": arguments, "result": result})


def _workers(args) -> int:
    if args.threads < 1:
        raise CliError("--threads must be at least 1")
    return args.threads


# ---------------------------------------------------------------------------
# Handlers.

def _cmd_generate(args) -> int:
    if not args.out:
        raise CliError("generate requires --out for the configuration file")
    params: Dict[str, int] = {}
    for pname in _GENERATOR_PARAMS[args.name]:
        value = getattr(args, pname)
        if value is None:
            raise CliError(f"{args.name} requires --{pname}")
        params[pname] = value
    if args.name == "random":
        params["seed"] = args.seed
        if args.bound is not None:
            params["bound"] = args.bound
    pyname = args.name.replace("-", "_")
    config = GENERATORS[pyname](**params)
    save_configuration(config, args.out)
    expected = expected_spectrum(pyname, **params)
    result = {
        "path": args.out,
        "label": config.label,
        "n": config.n,
        "field": field_to_json(config.field),
        "expected_spectrum":
            None if expected is None
            else {str(i): expected[i] for i in sorted(expected)},
    }
    sys.stdout.write(_manifest("generate", {"generator": args.name, **params}, result))
    return 0


def _cmd_analyze(args) -> int:
    config = load_configuration(args.input)
    s = spectrum(config, workers=_workers(args))
    real = config.is_real()
    if args.format == "csv":
        _emit(spectrum_to_csv(s, real), args.out)
        return 0
    arguments = {"input": args.input, "format": args.format}
    _emit(_manifest("analyze", arguments, spectrum_to_json(s, real)), args.out)
    return 0


def _cmd_check(args) -> int:
    which = "all" if args.all else args.which
    config = load_configuration(args.input)
    s = spectrum(config, workers=_workers(args))
    try:
        reports = run_checks(s, config.is_real(), which)
    except KeyError as exc:
        raise CliError(exc.args[0]) from exc
    code = exit_code_for(reports)
    if args.format == "csv":
        _emit(reports_to_csv(reports), args.out)
        return code
    arguments = {"input": args.input, "which": which, "format": args.format}
    result = {
        "label": config.label,
        "n": s.n,
        "reports": [report_to_json(r) for r in reports],
        "violations": [r.name for r in violations(reports)],
        "exit_code": code,
    }
    _emit(_manifest("check", arguments, result), args.out)
    return code


def _conjecture_reference(record) -> Dict:
    s = spectrum(record.best_config)
    ratio = Fraction(s.incidences, s.n * s.n)
    return {
        "statement": "incidences >= (3/8) n^2 for real sets with at most "
                     "n/2 points collinear (reported, not asserted)",
        "threshold": "3/8",
        "incidence_ratio": frac_str(ratio),
        "at_or_above": ratio >= Fraction(3, 8),
        "max_collinear": s.max_collinear,
    }


def _cmd_search(args) -> int:
    if args.format == "csv":
        raise CliError("search emits JSON only")
    if args.cap is None:
        raise CliError("search requires --cap")
    if args.mode == "exhaustive":
        if args.g is None:
            raise CliError("exhaustive search requires --g")
        record = exhaustive_search(args.n, args.g, args.cap,
                                   objective=args.objective,
                                   prune=not args.no_prune)
        arguments = {"mode": "exhaustive", "n": args.n, "g": args.g,
                     "cap": args.cap, "objective": args.objective,
                     "prune": not args.no_prune}
    else:
        record = local_search(args.n, bound=args.bound, cap=args.cap,
                              iterations=args.iterations, seed=args.seed,
                              restarts=args.restarts,
                              objective=args.objective,
                              checkpoint=args.checkpoint)
        arguments = {"mode": "local", "n": args.n, "bound": args.bound,
                     "cap": args.cap, "iterations": args.iterations,
                     "restarts": args.restarts, "seed": args.seed,
                     "objective": args.objective}
    result = {
        "record": record_to_json(record),
        "conjecture_reference": _conjecture_reference(record),
    }
    _emit(_manifest("search", arguments, result), args.out)
    return 0


def _cmd_render(args) -> int:
    if not args.out:
        raise CliError("render requires --out for the SVG file")
    config = load_configuration(args.input)
    svg = render_svg(config)
    Path(args.out).write_text(svg)
    result = {
        "path": args.out,
        "points": svg.count("<circle"),
        "lines": svg.count("<line"),
    }
    sys.stdout.write(_manifest("render", {"input": args.input}, result))
    return 0


# ---------------------------------------------------------------------------


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = getattr(args, "handler", None)
        if handler is None:
            raise CliError("a subcommand is required "
                           "(generate, analyze, check, search, render)")
        return handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
