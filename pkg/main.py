"""
main.py — Matchbound Prover Command Line
==========================================
Entry point.  Subcommands:

    prove FILE   run completion on a rewriting system, print a report,
                 optionally emit the certificate as JSON and DOT
    verify CERT  independently re-check a JSON certificate
    chain FILE   dump the multiplication chain built for FILE's query words
    bench        run the synthetic scaling suite
    serve        start the Flask JSON API

Exit codes:
    0  certificate found / certificate verified
    1  limit reached (MAYBE) / certificate rejected
    2  input error (unreadable file, bad SRS, bad certificate JSON)
    3  internal invariant violation

Reports go to standard output; diagnostics to standard error
(-v for INFO, -vv for DEBUG).
"""

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional

from algorithms.chain import build_chain
from algorithms.completion import LIMIT_PRESETS, Limits, query_words
from algorithms.srs import SrsInput, parse_srs
from algorithms.step import RuleKind, Step
from certificate import read_json, verify, write_json
from engine import Recorder, run_benchmark
from errors import EngineError, InputError
from ui import render_bench, render_chain, render_dot, render_prove_report, render_stats, render_trace, render_verdict

logger = logging.getLogger("matchbox")

EXIT_OK       = 0
EXIT_MAYBE    = 1
EXIT_INPUT    = 2
EXIT_INTERNAL = 3


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------
def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _read_srs(path: str) -> SrsInput:
    return parse_srs(_read_text(path))


def _write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror or exc}") from None


def _limits(args: argparse.Namespace) -> Limits:
    limits = LIMIT_PRESETS[args.preset]
    overrides = {
        key: value
        for key, value in (
            ("max_steps",  args.max_steps),
            ("max_states", args.max_states),
            ("max_height", args.max_height),
        )
        if value is not None
    }
    return replace(limits, **overrides)


def _progress(step: Step) -> None:
    if step.rule is RuleKind.REWRITE:
        m = step.metrics
        logger.info("step %d: %d states, %d edges, height %d",
                    m["steps"], m["states"], m["edges"], m["max_height"])


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------
def cmd_prove(args: argparse.Namespace) -> int:
    srs = _read_srs(args.file)
    rec = Recorder()
    rec.start(srs, limits=_limits(args), check_full=args.full_recompute_check)
    metrics = rec.run_to_completion(on_step=_progress)

    out = render_prove_report(metrics)
    if args.stats:
        out += render_stats(metrics)
    if args.trace:
        out += render_trace(rec.steps)
    sys.stdout.write(out)

    cert = rec.certificate()
    if cert is None:
        if args.emit_cert or args.dot:
            logger.warning("no certificate to write: %s", metrics.limit_kind)
        return EXIT_MAYBE

    if args.emit_cert:
        try:
            write_json(cert, args.emit_cert)
        except OSError as exc:
            raise InputError(f"cannot write {args.emit_cert}: {exc.strerror or exc}") from None
    if args.dot:
        _write_text(args.dot, render_dot(cert))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        cert = read_json(args.cert)
    except OSError as exc:
        raise InputError(f"cannot read {args.cert}: {exc.strerror or exc}") from None
    verdict = verify(cert)
    sys.stdout.write(render_verdict(verdict))
    return EXIT_OK if verdict.ok else EXIT_MAYBE


def cmd_chain(args: argparse.Namespace) -> int:
    srs = _read_srs(args.file)
    sys.stdout.write(render_chain(build_chain(query_words(srs.alphabet, srs.rules))))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    if args.letters < 1:
        raise InputError("--letters must be at least 1")
    result = run_benchmark(args.letters, limits=_limits(args), compare_full=not args.no_compare)
    sys.stdout.write(render_bench(result))
    return EXIT_OK if result.metrics.succeeded else EXIT_MAYBE


def cmd_serve(args: argparse.Namespace) -> int:
    from server import create_app

    create_app(limits=_limits(args)).run(host=args.host, port=args.port)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------
def _add_limit_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--preset", choices=sorted(LIMIT_PRESETS), default="default",
                   help="limit preset (explicit --max-* flags override it)")
    p.add_argument("--max-steps", type=int, help="maximum number of REWRITE steps")
    p.add_argument("--max-states", type=int, help="maximum number of automaton states")
    p.add_argument("--max-height", type=int, help="maximum edge height")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matchbox", description="Matchbound certificates for string rewriting.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", help="search for a matchbound certificate")
    p.add_argument("file", help="rewriting system, one 'lhs -> rhs' rule per line")
    _add_limit_flags(p)
    p.add_argument("--emit-cert", metavar="PATH", help="write the certificate as JSON")
    p.add_argument("--dot", metavar="PATH", help="write the automaton as Graphviz DOT")
    p.add_argument("--stats", action="store_true", help="print rule firings and timing")
    p.add_argument("--trace", action="store_true", help="print every completion step")
    p.add_argument("--full-recompute-check", action="store_true",
                   help="cross-check every incremental update against a full recomputation (slow)")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("verify", help="independently check a JSON certificate")
    p.add_argument("cert", help="certificate JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chain", help="dump the multiplication chain for a rewriting system")
    p.add_argument("file")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("bench", help="run the synthetic scaling suite")
    p.add_argument("--letters", type=int, default=9,
                   help="number of renamed aa -> aba copies (default 9, the smallest suite with at least 50 states; 8 gives 49)")
    p.add_argument("--no-compare", action="store_true", help="skip timing full recomputation")
    _add_limit_flags(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="start the JSON API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=5000)
    _add_limit_flags(p)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EngineError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
