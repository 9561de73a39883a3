"""Command-line front end.

Exit codes: 0 success, 1 failed check or false predicate under ``--assert``,
2 input error, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import classify as K
from . import harness as H
from . import report as R
from .dsl import evaluate
from .errors import CapacityError, RingInputError, ValidationError
from .ring import DEFAULT_CAP, VALIDATE_BOUND, load, save, validate

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise RingInputError(message)


def _globals(defaults: bool) -> argparse.ArgumentParser:
    # the same flags are accepted before and after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--cap", type=int, default=d(DEFAULT_CAP), help="largest carrier size to build")
    p.add_argument("--validate-bound", type=int, default=d(VALIDATE_BOUND),
                   help="exhaustive validation up to this size, sampled above")
    p.add_argument("--jobs", type=int, default=d(1))
    p.add_argument("--seed", type=int, default=d(0), help="seed for sampled validation")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gnclab", parents=[_globals(True)],
                     description="Finite ring construction and GNC classification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = [_globals(False)]

    p = sub.add_parser("build", parents=common, help="construct and validate a ring")
    p.add_argument("expr")
    p.add_argument("--save", metavar="FILE")

    p = sub.add_parser("classify", parents=common, help="decide ring properties")
    p.add_argument("expr", nargs="?")
    p.add_argument("--load", metavar="FILE")
    p.add_argument("--props", help="comma-separated subset of: " + ",".join(K.PROPERTIES))
    p.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit 1 unless every selected property holds")
    p.add_argument("--format", choices=("json", "md"), default="json")

    p = sub.add_parser("decompose", parents=common, help="decompose one element")
    p.add_argument("expr")
    p.add_argument("--element", type=int, required=True, help="carrier index")
    p.add_argument("--kind", choices=K.KINDS, required=True)
    p.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit 1 when no decomposition exists")

    p = sub.add_parser("suite", parents=common, help="run the structural checks")
    p.add_argument("--catalog", metavar="FILE", help="one ring expression per line")
    p.add_argument("--only", help="comma-separated check ids")
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.add_argument("--no-timing", action="store_true", help="zero the runtime fields")

    p = sub.add_parser("scan-zn", parents=common, help="classify Zn for 1 <= n <= N")
    p.add_argument("--max", type=int, required=True, dest="max_n")
    p.add_argument("--format", choices=("json", "md"), default="json")
    return parser


def _ring(args):
    if args.load and args.expr:
        raise RingInputError("give either an expression or --load, not both")
    if args.load:
        ring = load(args.load, cap=args.cap)
        rep = validate(ring, args.validate_bound, seed=args.seed)
        if not rep.valid:
            raise ValidationError(f"{args.load} violates {rep.axiom} at {list(rep.witness)}")
        return ring
    if not args.expr:
        raise RingInputError("classify needs an expression or --load FILE")
    return evaluate(args.expr, args.cap)


def _cmd_build(args, out) -> int:
    ring = evaluate(args.expr, args.cap)
    rep = validate(ring, args.validate_bound, seed=args.seed)
    payload = {"command": "build", "label": ring.label, "size": ring.size, "validation": rep.to_dict()}
    if args.save:
        save(ring, args.save)
        payload["saved"] = str(args.save)
    out.write(R.dumps(payload))
    return EXIT_OK if rep.valid else EXIT_FAIL


def _cmd_classify(args, out) -> int:
    props = K.PROPERTIES
    if args.props:
        props = tuple(p.strip() for p in args.props.split(",") if p.strip())
        unknown = [p for p in props if p not in K.PROPERTIES]
        if unknown:
            raise RingInputError(f"unknown property {unknown[0]!r}")
    ring = _ring(args)
    payload = {"command": "classify", **K.ring_profile(ring, props).to_dict(ring)}
    out.write(R.profile_markdown(payload) if args.format == "md" else R.dumps(payload))
    if args.assert_ and not all(v["holds"] for v in payload["verdicts"].values()):
        return EXIT_FAIL
    return EXIT_OK


def _cmd_decompose(args, out) -> int:
    ring = evaluate(args.expr, args.cap)
    result = K.decompose(ring, args.element, args.kind)
    found = isinstance(result, K.Decomposition)
    payload = {"command": "decompose", "label": ring.label, "kind": args.kind, "found": found,
               "result": result.to_dict(ring)}
    out.write(R.dumps(payload))
    return EXIT_FAIL if args.assert_ and not found else EXIT_OK


def _cmd_suite(args, out) -> int:
    catalog = None
    if args.catalog:
        try:
            text = Path(args.catalog).read_text()
        except OSError as exc:
            raise RingInputError(f"cannot read catalog {args.catalog}: {exc.strerror}") from exc
        catalog = H.parse_catalog(text)
    only = None
    if args.only:
        only = [s.strip() for s in args.only.split(",") if s.strip()]
        unknown = [c for c in only if c not in H.CHECKS_BY_ID]
        if unknown:
            raise RingInputError(f"unknown check id {unknown[0]!r}")
    rep = H.run_all(catalog, cap=args.cap, jobs=args.jobs, only=only)
    payload = R.suite_payload(rep, timing=not args.no_timing)
    out.write(R.suite_markdown(payload) if args.format == "md" else R.dumps(payload))
    return EXIT_OK if rep.ok else EXIT_FAIL


def _cmd_scan(args, out) -> int:
    if args.max_n < 1:
        raise RingInputError("--max must be at least 1")
    if args.max_n > args.cap:
        raise CapacityError(args.max_n, args.cap)
    payload = R.scan_payload(H.scan_zn(args.max_n))
    out.write(R.scan_markdown(payload) if args.format == "md" else R.dumps(payload))
    return EXIT_OK if payload["consistent"] else EXIT_FAIL


COMMANDS = {"build": _cmd_build, "classify": _cmd_classify, "decompose": _cmd_decompose,
            "suite": _cmd_suite, "scan-zn": _cmd_scan}


def main(argv: Optional[list] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.cap < 1 or args.validate_bound < 0 or args.jobs < 1:
            raise RingInputError("--cap and --jobs must be positive, --validate-bound non-negative")
        return COMMANDS[args.command](args, out)
    except CapacityError as exc:
        err.write(f"gnclab: capacity: {exc}\n")
        return EXIT_CAPACITY
    except (RingInputError, ValidationError) as exc:
        err.write(f"gnclab: error: {' '.join(str(exc).split())}\n")
        return EXIT_INPUT
    except json.JSONDecodeError as exc:  # pragma: no cover - load wraps these
        err.write(f"gnclab: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
