"""
=============================================================================
COMMAND-LINE SURFACE
=============================================================================

    python -m backend gen SPEC [--seed N] [--out FILE]
    python -m backend solve  --graph FILE --s R --t R [--json FILE]
    python -m backend oracle --graph FILE --s R --t R [--cap N] [--fact5]
    python -m backend verify --graph FILE --json FILE [--s R --t R]
    python -m backend serve [--host H] [--port P]

Rationals are "num/den" or integers. Output documents go to stdout unless a
file is given; logging goes to stderr (--verbose for DEBUG).

EXIT CODES:
    0  success / witness valid
    1  verify rejected the witness
    2  hypothesis not met, or the oracle found no partition
    3  invalid input
    4  internal certificate check failed (always a bug)
=============================================================================
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import config
from .logging_config import configure_logging
from .services.assembler import solve, validate
from .services.errors import HypothesisNotMet, InternalAssertion, InvalidInput, ParseError
from .services.generators import generate
from .services.graph import Graph
from .services.oracle import brute_force_partition, check_fact5
from .services.parser import format_graph, parse_graph, parse_rational
from .services.witness_io import margins_match, parse_witness, render_witness, to_witness

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_HYPOTHESIS = 2
EXIT_INVALID = 3
EXIT_INTERNAL = 4


# ==================== I/O helpers ====================

def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}")


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)


# ==================== Subcommands ====================

def cmd_gen(args: argparse.Namespace) -> int:
    G = generate(args.spec, seed=args.seed)
    _emit(format_graph(G), args.out)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    G = _load_graph(args.graph)
    s, t = parse_rational(args.s), parse_rational(args.t)
    witness = solve(G, s, t)
    _emit(render_witness(witness, s, t), args.json)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    G = _load_graph(args.graph)
    s, t = parse_rational(args.s), parse_rational(args.t)

    if args.fact5:
        sparse = check_fact5(G, s + t + 1, cap=args.cap)
        _emit(json.dumps({"fact5": sparse}) + "\n", args.json)
        return EXIT_OK if sparse else EXIT_HYPOTHESIS

    found = brute_force_partition(G, s, t, cap=args.cap)
    if found is None:
        _emit(json.dumps({"found": False}) + "\n", args.json)
        return EXIT_HYPOTHESIS
    A, B = found
    _emit(json.dumps({"found": True, "A": sorted(A), "B": sorted(B)}, sort_keys=True) + "\n",
          args.json)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    G = _load_graph(args.graph)
    doc = parse_witness(_read_text(args.json))
    s = parse_rational(args.s) if args.s is not None else parse_rational(doc.s)
    t = parse_rational(args.t) if args.t is not None else parse_rational(doc.t)

    report = validate(G, s, t, to_witness(doc))
    matched = margins_match(G, doc)
    same_params = (parse_rational(doc.s), parse_rational(doc.t)) == (s, t)
    for failure in report.failures:
        sys.stdout.write(f"FAIL {failure}\n")
    if not matched:
        sys.stdout.write("FAIL recorded margins differ from the graph\n")
    if not same_params:
        sys.stdout.write("FAIL witness was written for different (s, t)\n")

    if report.ok and matched and same_params:
        sys.stdout.write("OK\n")
        return EXIT_OK
    return EXIT_REJECTED


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    logger.info(f"Starting partition solver on {args.host}:{args.port}")
    uvicorn.run("backend.main:app", host=args.host, port=args.port)
    return EXIT_OK


# ==================== Parser ====================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m backend",
        description="Average-degree graph partitions with exact certificates",
    )
    parser.add_argument("--verbose", action="store_true", help="DEBUG logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph in GraphText")
    gen.add_argument("spec", help="complete(n), gnp(n,p[,seed]), sharp(s,t,n), union(a,b)")
    gen.add_argument("--seed", type=int, default=None, help="seed for gnp specs without one")
    gen.add_argument("--out", default=None, help="output file (default stdout)")
    gen.set_defaults(func=cmd_gen)

    def add_problem(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--graph", required=True, help="GraphText file")
        p.add_argument("--s", required=required, default=None, help="rational s")
        p.add_argument("--t", required=required, default=None, help="rational t")

    solve_p = sub.add_parser("solve", help="compute a partition witness")
    add_problem(solve_p)
    solve_p.add_argument("--json", default=None, help="witness output file (default stdout)")
    solve_p.set_defaults(func=cmd_solve)

    oracle_p = sub.add_parser("oracle", help="exhaustive search on small graphs")
    add_problem(oracle_p)
    oracle_p.add_argument("--cap", type=int, default=None, help="override the vertex cap")
    oracle_p.add_argument("--fact5", action="store_true",
                          help="check every proper subset is sparser than s+t+1 instead")
    oracle_p.add_argument("--json", default=None, help="output file (default stdout)")
    oracle_p.set_defaults(func=cmd_oracle)

    verify_p = sub.add_parser("verify", help="re-check a witness against its graph")
    add_problem(verify_p, required=False)
    verify_p.add_argument("--json", required=True, help="witness file")
    verify_p.set_defaults(func=cmd_verify)

    serve_p = sub.add_parser("serve", help="run the HTTP service")
    serve_p.add_argument("--host", default=config.API_HOST)
    serve_p.add_argument("--port", type=int, default=config.API_PORT)
    serve_p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging("DEBUG" if args.verbose else None)

    try:
        return args.func(args)
    except HypothesisNotMet as exc:
        sys.stderr.write(f"hypothesis not met: {exc}\n")
        return EXIT_HYPOTHESIS
    except InvalidInput as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_INVALID
    except InternalAssertion as exc:
        logger.error(f"Internal check failed: {exc}", exc_info=True)
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
