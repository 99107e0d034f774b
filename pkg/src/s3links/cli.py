"""Command-line front end.

Inputs are either a path to a diagram file or family notation such as
``"T(2,4)"``, ``"J(3,5)"`` or ``"C(2,4,-2)"``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .diagram import DiagramError
from .moves import MoveError, promote_to_five
from .notation import NotationError, emit_diagram, family_diagram, parse_diagram, parse_family
from .solver import (ColoringError, classify, determinant, enumerate_colorings,
                     format_coloring, is_valid_coloring, parse_coloring)
from .verify import verify_conway, verify_double_twist, verify_torus


class CLIError(Exception):
    pass


def load_input(arg):
    """Return ``(diagram, label)`` for a file path or family notation."""
    if os.path.isfile(arg):
        with open(arg) as fh:
            return parse_diagram(fh.read()), arg
    try:
        spec = parse_family(arg)
    except NotationError as exc:
        raise CLIError(f"{arg!r} is neither a diagram file nor family notation: {exc}") from None
    try:
        return family_diagram(spec), str(spec)
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def _coloring_words(c):
    return [str(g) for g in c]


def cmd_classify(args):
    d, label = load_input(args.input)
    cls = classify(d)
    report = {"command": "classify", "inputs": {"input": label}, **cls.to_json(),
              "witnesses": {str(n): _coloring_words(cls.witnesses[n]) for n in sorted(cls.counts)}}
    lines = [f"{label}: n in {{{', '.join(map(str, sorted(cls.counts)))}}}"]
    for n in sorted(cls.counts):
        lines.append(f"  n={n}: {cls.counts[n]} colorings, e.g. "
                     + " ".join(_coloring_words(cls.witnesses[n])))
    return report, "\n".join(lines), True


def cmd_det(args):
    d, label = load_input(args.input)
    det = determinant(d)
    return ({"command": "det", "inputs": {"input": label}, "determinant": det},
            f"{label}: determinant {det}", True)


def cmd_solve(args):
    d, label = load_input(args.input)
    cols = enumerate_colorings(d)
    report = {"command": "solve", "inputs": {"input": label}, "count": len(cols),
              "colorings": [_coloring_words(c) for c in cols]}
    text = "\n".join([f"{label}: {len(cols)} colorings"]
                     + [" ".join(_coloring_words(c)) for c in cols])
    return report, text, True


def cmd_gen(args):
    spec = parse_family(args.family)
    text = emit_diagram(family_diagram(spec))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    return ({"command": "gen", "inputs": {"family": str(spec)}, "diagram": text},
            text.rstrip("\n"), True)


def cmd_promote(args):
    d, label = load_input(args.input)
    if args.coloring:
        with open(args.coloring) as fh:
            col = parse_coloring(fh.read(), d)
        if not is_valid_coloring(d, col):
            raise CLIError("supplied coloring is not valid on the diagram")
    else:
        cls = classify(d)
        if 4 not in cls:
            report = {"command": "promote", "inputs": {"input": label}, "passed": False,
                      "error": "no 4-coloring", "diagram": emit_diagram(d)}
            return report, f"{label}: no 4-coloring exists on this diagram", False
        col = cls.witnesses[4]
    try:
        promo = promote_to_five(d, col)
    except MoveError as exc:
        report = {"command": "promote", "inputs": {"input": label}, "passed": False,
                  "error": str(exc), "diagram": emit_diagram(d)}
        return report, f"{label}: {exc}", False
    ok = is_valid_coloring(promo.diagram, promo.coloring) and len(set(promo.coloring)) == 5
    diagram_text = emit_diagram(promo.diagram)
    coloring_text = format_coloring(promo.coloring)
    report = {"command": "promote", "inputs": {"input": label}, "passed": ok,
              "diagram": diagram_text, "coloring": coloring_text,
              "moves": [m.to_json() for m in promo.moves]}
    return report, diagram_text + coloring_text.rstrip("\n"), ok


def _verify_text(report):
    lines = []
    for row in report["results"]:
        bad = [k for k, v in row["checks"].items() if not v]
        status = "ok  " if not bad else "FAIL"
        extra = f" n={row['n_set']}"
        if "link_n_set" in row and row["link_n_set"] != row["n_set"]:
            extra += f" link n={row['link_n_set']}"
        if "determinant" in row:
            extra += f" det={row['determinant']}"
        lines.append(f"{status} {row['family']}{extra}" + (f"  failed: {', '.join(bad)}" if bad else ""))
        if bad:
            lines.append(row["diagram"].rstrip("\n"))
    failed = sum(1 for r in report["results"] if not all(r["checks"].values()))
    lines.append(f"{len(report['results']) - failed}/{len(report['results'])} passed")
    return "\n".join(lines)


def cmd_verify_torus(args):
    report = verify_torus(args.q_max)
    return report, _verify_text(report), report["passed"]


def cmd_verify_j(args):
    report = verify_double_twist(args.k_max, args.l_max)
    return report, _verify_text(report), report["passed"]


def cmd_verify_conway(args):
    report = verify_conway(args.seed, args.samples, args.max_crossings)
    return report, _verify_text(report), report["passed"]


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")

    parser = argparse.ArgumentParser(prog="s3links", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_ in [("classify", cmd_classify, "achievable palette sizes"),
                              ("det", cmd_det, "link determinant"),
                              ("solve", cmd_solve, "list all S3-colorings")]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("input", help="diagram file or family notation")
        p.set_defaults(func=func)

    p = sub.add_parser("gen", parents=[common], help="family notation to diagram file")
    p.add_argument("family")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("promote", parents=[common], help="4-coloring to 5-coloring by R2 moves")
    p.add_argument("input")
    p.add_argument("--coloring", help="coloring file ('arc <i> <element>' lines)")
    p.set_defaults(func=cmd_promote)

    p = sub.add_parser("verify-torus", parents=[common])
    p.add_argument("--q-max", type=int, default=20)
    p.set_defaults(func=cmd_verify_torus)

    p = sub.add_parser("verify-j", parents=[common])
    p.add_argument("--k-max", type=int, default=7)
    p.add_argument("--l-max", type=int, default=7)
    p.set_defaults(func=cmd_verify_j)

    p = sub.add_parser("verify-conway", parents=[common])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--max-crossings", type=int, default=16)
    p.set_defaults(func=cmd_verify_conway)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        report, text, ok = args.func(args)
    except (CLIError, NotationError, DiagramError, ColoringError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.setdefault("elapsed_s", round(time.perf_counter() - started, 4))
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
