"""Command-line interface: ``symhom <subcommand> ...``.

Results go to stdout, progress and timing (``--verbose``) to stderr.  Exit
status is 0 on success, 2 on a usage error and 3 when a computation raises
one of the package's errors; the error class name is printed verbatim.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import deltas, jobs
from .algebra import FinAlgebra, preset
from .cache import ENV_VAR, ResultCache
from .errors import SymHomError
from .linalg.homology import HomologyGroup
from .sym import format_polynomial

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE = 0, 2, 3


@dataclass
class JobConfig:
    command: str
    parameters: dict = field(default_factory=dict)
    characteristic: int = 0
    output_format: str = "text"
    cache_dir: str | None = None
    threads: int = 1
    memory_advice_mb: int | None = None


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    parser.add_argument("--cache-dir", default=None,
                        help=f"cache directory (default: ${ENV_VAR}, or no cache)")
    parser.add_argument("--threads", type=_positive_int, default=1,
                        help="worker threads; results never depend on this (default: 1)")
    parser.add_argument("--memory-advice", type=int, default=None, metavar="MB",
                        help="advisory memory ceiling, recorded in the job description")
    parser.add_argument("--verbose", action="store_true", help="log progress and timings to stderr")


def _algebra_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--algebra", metavar="FILE", help="algebra JSON file (see README)")
    group.add_argument("--preset", metavar="NAME(ARGS)",
                       help="preset such as trunc_poly(3,2), cyclic_group(4), quaternion_units")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symhom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of morphisms [n] -> [m]")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    _common(p)

    p = sub.add_parser("enumerate", help="list all morphisms [n] -> [m]")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--epi", action="store_true", help="epimorphisms only")
    _common(p)

    p = sub.add_parser("compose", help="composite f∘g of two morphism literals")
    p.add_argument("f")
    p.add_argument("g")
    _common(p)

    p = sub.add_parser("factor", help="epi-mono factorization of a morphism literal")
    p.add_argument("f")
    _common(p)

    p = sub.add_parser("sym", help="the complex Sym^(p)")
    p.add_argument("--p", type=int, required=True, dest="p")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--poincare", action="store_true", help="Poincaré polynomial over --char")
    mode.add_argument("--homology", action="store_true", help="integral homology")
    mode.add_argument("--verify-chessboard", action="store_true",
                      help="check the chessboard isomorphism")
    p.add_argument("--char", type=int, default=0, help="0 or a prime (default: 0)")
    p.add_argument("--degree", type=int, default=None, help="homological degree (default: all)")
    _common(p)

    p = sub.add_parser("hs", help="HS_0 / HS_1 of an algebra")
    _algebra_args(p)
    p.add_argument("--degree", choices=("0", "1", "both"), default="both")
    p.add_argument("--layered", action="store_true", help="split by monoid layers")
    p.add_argument("--action", action="store_true", help="HS_0-module structure of HS_1")
    _common(p)

    p = sub.add_parser("free-monoid-layers", help="HS_1(Z[t]) layer by layer")
    p.add_argument("--from", type=int, required=True, dest="lo")
    p.add_argument("--to", type=int, required=True, dest="hi")
    _common(p)

    p = sub.add_parser("cyclic-compare", help="comparison map from cyclic homology in degrees 0, 1")
    _algebra_args(p)
    _common(p)
    return parser


def _load_algebra(args) -> FinAlgebra:
    if args.preset:
        try:
            return preset(args.preset)
        except (KeyError, ValueError, TypeError) as exc:
            if isinstance(exc, SymHomError):
                raise
            raise UsageError(f"--preset: {exc}") from None
    try:
        text = Path(args.algebra).read_text()
    except OSError as exc:
        raise UsageError(f"--algebra: cannot read {args.algebra}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--algebra: {args.algebra} is not valid JSON: {exc.msg}") from None
    return FinAlgebra.from_json(doc)


def _group_text(doc: dict) -> str:
    return str(HomologyGroup(doc["free"], tuple(doc["torsion"])))


def run_command(args, cache: ResultCache) -> tuple[object, str]:
    """Return ``(json payload, text rendering)``."""
    cmd = args.command
    if cmd == "count":
        c = deltas.count(args.n, args.m)
        return {"n": args.n, "m": args.m, "count": c}, str(c)
    if cmd == "enumerate":
        mors = [deltas.format_morphism(f) for f in deltas.iter_morphisms(args.n, args.m, args.epi)]
        return {"n": args.n, "m": args.m, "epi": args.epi, "morphisms": mors}, "\n".join(mors)
    if cmd == "compose":
        f, g = deltas.parse_morphism(args.f), deltas.parse_morphism(args.g)
        h = deltas.format_morphism(deltas.compose(f, g))
        return {"result": h}, h
    if cmd == "factor":
        epi, mono = deltas.epi_mono_factor(deltas.parse_morphism(args.f))
        e, m = deltas.format_morphism(epi), deltas.format_morphism(mono)
        return {"epi": e, "mono": m}, f"epi: {e}\nmono: {m}"
    if cmd == "sym":
        if args.poincare:
            coeffs = jobs.sym_poincare(args.p, args.char, cache)
            text = format_polynomial(coeffs)
            return {"p": args.p, "char": args.char, "coefficients": coeffs,
                    "polynomial": text}, text
        if args.homology:
            degrees = [args.degree] if args.degree is not None else list(range(args.p + 1))
            groups = {i: jobs.sym_homology(args.p, i, cache) for i in degrees}
            text = "\n".join(f"H_{i}: {g}" for i, g in groups.items())
            return {"p": args.p, "homology": {str(i): g.as_dict() for i, g in groups.items()}}, text
        report = jobs.sym_chessboard_report(args.p)
        text = "\n".join(f"{k}: {v}" for k, v in report.items())
        return report, text
    if cmd == "hs":
        A = _load_algebra(args)
        doc = jobs.hs_report(A, args.degree, args.layered, args.action, cache)
        lines = [f"algebra: {doc['algebra']}"]
        for k in ("hs0", "hs1"):
            if k in doc:
                lines.append(f"{k}: {_group_text(doc[k])}")
        for label, layer in doc.get("layers", {}).items():
            lines.append(f"layer {label}: hs0 {_group_text(layer['hs0'])}, "
                         f"hs1 {_group_text(layer['hs1'])}")
        if "action" in doc:
            lines.append(f"hs1 generator orders: {doc['action_orders']}")
            for name, mat in doc["action"].items():
                lines.append(f"action of {name}: {mat}")
            if "module_generator" in doc:
                lines.append(f"cyclic generator: {doc['module_generator']}, "
                             f"relations (Hermite basis): {doc['module_relations']}")
        return doc, "\n".join(lines)
    if cmd == "free-monoid-layers":
        if args.lo < 0 or args.hi < args.lo:
            raise UsageError("--from/--to: need 0 <= from <= to")
        layers = jobs.free_monoid_layers(args.lo, args.hi, cache)
        text = "\n".join(f"t^{m}: {_group_text(g)}" for m, g in layers.items())
        return {"layers": {str(m): g for m, g in layers.items()}}, text
    if cmd == "cyclic-compare":
        A = _load_algebra(args)
        doc = jobs.cyclic_report(A)
        text = "\n".join([
            f"algebra: {doc['algebra']}",
            "chain-map squares: commute",
            f"HC0: {_group_text(doc['hc0'])}  ->  HS0: {_group_text(doc['hs0'])}  {doc['induced0']}",
            f"HC1: {_group_text(doc['hc1'])}  ->  HS1: {_group_text(doc['hs1'])}  {doc['induced1']}",
            "diagnostics: " + ", ".join(f"{k}={v}" for k, v in sorted(doc["diagnostics"].items()))])
        return doc, text
    raise UsageError(f"unknown command {cmd}")


def _configure_logging(verbose: bool) -> None:
    logger = logging.getLogger("symhom")
    for h in list(logger.handlers):
        if getattr(h, "_symhom_cli", False):
            logger.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    handler._symhom_cli = True
    logger.addHandler(handler)
    logger.setLevel(logging.INFO if verbose else logging.WARNING)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    _configure_logging(args.verbose)
    cache_dir = args.cache_dir or os.environ.get(ENV_VAR) or None
    config = JobConfig(args.command, {k: v for k, v in vars(args).items()
                                      if k not in ("command", "format", "cache_dir", "threads",
                                                   "memory_advice", "verbose")},
                       getattr(args, "char", 0), args.format, cache_dir, args.threads,
                       args.memory_advice)
    logging.getLogger("symhom").info("job %s", json.dumps(asdict(config), sort_keys=True))
    try:
        cache = ResultCache(cache_dir)
        payload, text = run_command(args, cache)
    except UsageError as exc:
        print(f"symhom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SymHomError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
