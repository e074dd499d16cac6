"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
Payloads go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys

from . import core, galeryser, harness, scores
from .constructions import CONSTRUCTIONS
from .formats import WRITERS, read_tournament

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_input(args) -> core.Tournament:
    if args.edges is not None:
        text = args.edges
    elif args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {args.input}: {e.strerror}") from e
    try:
        return read_tournament(text)
    except core.TournamentError as e:
        raise InputError(f"malformed tournament: {e}") from e


def _emit(payload) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload.rstrip("\n") + "\n")
    else:
        sys.stdout.write(json.dumps(payload) + "\n")


def cmd_embed(args) -> int:
    t = _read_input(args)
    res = CONSTRUCTIONS[args.kind](t)
    if args.format == "json":
        _emit(res.to_dict(trace=args.trace))
    else:
        _emit(WRITERS[args.format](res.output))
    if args.kind == "greedy" and not res.regular_verdict:
        print("greedy construction did not produce a regular tournament", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_check(args) -> int:
    t = _read_input(args)
    s = core.score_sequence(t)
    report = {
        "n": t.n,
        "regular": core.is_regular(t),
        "scores": list(s),
        "conditions": scores.evaluate_conditions(s)._asdict() if t.n else None,
    }
    for kind in (core.TYPE_I, core.TYPE_II):
        w = core.certify_type(t, kind) if report["regular"] else None
        report[kind] = None if w is None else {"vertex": w.vertex, "iso": list(w.iso)}
    _emit(report)
    return EXIT_OK


def cmd_scores(args) -> int:
    if args.enumerate is not None:
        for s in scores.enumerate_scores(args.enumerate):
            _emit(scores.format_scores(s))
        return EXIT_OK
    try:
        s = scores.parse_scores(args.realize)
        t = scores.realize(s)
    except scores.ScoreError as e:
        raise InputError(str(e)) from e
    _emit(WRITERS[args.format](t))
    return EXIT_OK


def cmd_galeryser(args) -> int:
    try:
        p = scores.parse_scores(args.rows)
        q = scores.parse_scores(args.cols)
        if args.feasible:
            _emit({"feasible": galeryser.feasible(p, q, args.lam)})
            return EXIT_OK
        c = galeryser.realize01(p, q)
    except galeryser.InfeasibleError as e:
        print(str(e), file=sys.stderr)
        return EXIT_FAIL
    except ValueError as e:
        raise InputError(str(e)) from e
    _emit(galeryser.format_matrix(c))
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = harness.verify_greedy_over_scores(
        args.n_max, shards=args.shards, checkpoint=args.checkpoint, tie_break=args.tie_break
    )
    _emit(rep.table() if args.table else rep.to_json(timing=args.timing))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_enumerate(args) -> int:
    if args.sample is not None:
        rng = random.Random(args.seed)
        ts = (harness.random_tournament(args.order, rng) for _ in range(args.sample))
    else:
        ts = harness.enumerate_labeled(args.order)
    for t in ts:
        _emit(WRITERS["json"](t))
    return EXIT_OK


def cmd_export(args) -> int:
    t = _read_input(args)
    _emit(WRITERS[args.format](t))
    return EXIT_OK


def _add_input(p) -> None:
    p.add_argument("input", nargs="?", help="tournament file (JSON, matrix text or DOT); '-' or omitted for stdin")
    p.add_argument("--edges", help="inline tournament text instead of a file")


def _order(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("order must be nonnegative")
    return n


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regtourn", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="embed a tournament in a regular one")
    _add_input(p)
    p.add_argument("--kind", choices=sorted(CONSTRUCTIONS), default="regular")
    p.add_argument("--format", choices=sorted(WRITERS), default="json")
    p.add_argument("--trace", action="store_true", help="include the construction trace")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("check", help="regularity, types, scores and condition flags")
    _add_input(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scores", help="enumerate or realize score sequences")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--enumerate", type=_order, metavar="N")
    g.add_argument("--realize", metavar="S1,S2,...")
    p.add_argument("--format", choices=sorted(WRITERS), default="json")
    p.set_defaults(func=cmd_scores)

    p = sub.add_parser("galeryser", help="0-1 matrices with given row and column sums")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--feasible", action="store_true")
    g.add_argument("--realize", action="store_true")
    p.add_argument("--rows", required=True, metavar="P1,P2,...")
    p.add_argument("--cols", required=True, metavar="Q1,Q2,...")
    p.add_argument("--lam", type=int, default=1, help="entry bound for --feasible")
    p.set_defaults(func=cmd_galeryser)

    p = sub.add_parser("verify-conjecture", help="greedy Type-II sweep over score sequences")
    p.add_argument("--n-max", type=_order, required=True)
    p.add_argument("--shards", type=int, default=1, help="worker processes")
    p.add_argument("--checkpoint", help="append-only shard log for resuming")
    p.add_argument("--tie-break", choices=("stable", "reverse", "label"), default="stable")
    p.add_argument("--table", action="store_true", help="human-readable table instead of JSON")
    p.add_argument("--timing", action="store_true", help="include elapsed time in the JSON report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list labeled tournaments of one order")
    p.add_argument("--order", type=_order, required=True)
    p.add_argument("--sample", type=int, help="draw this many random tournaments instead")
    p.add_argument("--seed", type=int, default=0, help="seed for --sample")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("export", help="convert a tournament between formats")
    _add_input(p)
    p.add_argument("--format", choices=sorted(WRITERS), default="json")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
