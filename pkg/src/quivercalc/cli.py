"""Command-line front end.

Subcommands: ``analyze``, ``frame``, ``reduce``, ``verify``.  Each reads a
quiver spec file, runs the corresponding analysis, and emits a report, either
human-readable (default) or machine-readable (``--json``), to standard output
or to ``--out FILE``.

Exit codes: 0 when every check passes, 1 when a hypothesis or verification
fails (a report is still emitted), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .errors import AssumptionViolatedError, QuiverCalcError, SpecFileError, UnknownVertexError
from .report import (
    SCHEMA_VERSION,
    build_analyze_report,
    build_frame_report,
    build_reduce_report,
    build_verify_report,
    render_human,
)
from .specfile import load_spec

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivercalc",
        description="stability, framing, and cohomology dimension analysis for quiver data",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit the machine-readable report")
        p.add_argument("--out", metavar="FILE", help="write the report to FILE instead of stdout")

    p_analyze = sub.add_parser("analyze", help="hypotheses report and dimension bookkeeping")
    p_analyze.add_argument("spec", help="path to a quiver spec file")
    p_analyze.add_argument(
        "--override-assumptions",
        action="store_true",
        help="compute the vector-fields formula even when hypotheses fail (flagged as unreliable)",
    )
    add_output_flags(p_analyze)

    p_frame = sub.add_parser("frame", help="double framing at two vertices")
    p_frame.add_argument("spec")
    p_frame.add_argument("i", nargs="?", help="framed vertex i (default: spec framing block)")
    p_frame.add_argument("j", nargs="?", help="framed vertex j (default: spec framing block)")
    p_frame.add_argument("--scale", type=int, metavar="N", help="framing scale (default: minimal)")
    add_output_flags(p_frame)

    p_reduce = sub.add_parser("reduce", help="thin-framing reduction of the framed datum")
    p_reduce.add_argument("spec")
    p_reduce.add_argument("i", nargs="?")
    p_reduce.add_argument("j", nargs="?")
    p_reduce.add_argument("--scale", type=int, metavar="N")
    add_output_flags(p_reduce)

    p_verify = sub.add_parser("verify", help="finite-field verification of the framed stability description")
    p_verify.add_argument("spec")
    p_verify.add_argument("--prime", type=int, metavar="P", help="field size (default: oracle block or 2)")
    p_verify.add_argument("--budget", type=int, metavar="B", help="enumeration budget (default: 10^6)")
    p_verify.add_argument("--seed", type=int, metavar="S", help="sampling seed (default: 0)")
    p_verify.add_argument("--scale", type=int, metavar="N")
    add_output_flags(p_verify)
    return parser


def _framed_vertices(spec, args) -> tuple[str, str]:
    if args.i is not None and args.j is not None:
        return args.i, args.j
    if args.i is not None or args.j is not None:
        raise SpecFileError("either give both vertices i and j or neither")
    if spec.framing is None:
        raise SpecFileError("no framing vertices: pass i and j or add a framing block to the spec")
    return spec.framing.i, spec.framing.j


def _emit(report: dict[str, Any], args) -> None:
    text = json.dumps(report, indent=2) + "\n" if args.json else render_human(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        spec = load_spec(args.spec)
        if args.command == "analyze":
            report = build_analyze_report(spec, override_assumptions=args.override_assumptions)
        elif args.command == "frame":
            i, j = _framed_vertices(spec, args)
            report = build_frame_report(spec, i, j, args.scale)
        elif args.command == "reduce":
            i, j = _framed_vertices(spec, args)
            report = build_reduce_report(spec, i, j, args.scale)
        else:
            oracle = spec.oracle
            prime = args.prime if args.prime is not None else (oracle.prime if oracle else 2)
            budget = args.budget if args.budget is not None else (oracle.budget if oracle else 10**6)
            seed = args.seed if args.seed is not None else (oracle.seed if oracle else 0)
            report = build_verify_report(spec, prime, budget, seed, args.scale)
    except SpecFileError as exc:
        print(f"quivercalc: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except UnknownVertexError as exc:
        print(f"quivercalc: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        print(f"quivercalc: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except AssumptionViolatedError as exc:
        report = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "hypotheses": {"verified": [], "failed": [exc.assumption], "assumed": []},
            "error": {"assumption": exc.assumption, "message": str(exc)},
            "exit_code": EXIT_FAILED,
        }
        _emit(report, args)
        return EXIT_FAILED
    except QuiverCalcError as exc:
        print(f"quivercalc: error: {exc}", file=sys.stderr)
        return EXIT_FAILED

    _emit(report, args)
    return int(report["exit_code"])


if __name__ == "__main__":
    sys.exit(main())
