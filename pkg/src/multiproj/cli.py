"""Command line front end.

Exit codes: 0 when the computation ran (whatever the verdict), 1 for a
failed verdict under --strict, 2 for unparseable input, 3 for input that
parses but is invalid.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import beilinson, blocks, criteria
from .errors import SheafSyntaxError
from .expr import format_atom, format_sheaf, parse_sheaf, parse_space
from .sheaves import cohomology, rank

EXIT_OK, EXIT_VERDICT, EXIT_PARSE, EXIT_INVALID = 0, 1, 2, 3

_JS_SAFE = 2**53


def _num(x: int):
    return str(x) if abs(x) >= _JS_SAFE else x


def _witness(w):
    out = {"t": _num(w.t), "degree": w.degree, "dim": _num(w.dim)}
    if w.box is not None:
        out["box"] = list(w.box)
    return out


def _violation(v):
    return {
        "condition": v.condition,
        "source": format_atom(v.source),
        "target": format_atom(v.target),
        "degree": v.degree,
        "dim": _num(v.dim),
    }


def _report(violations):
    return {"pass": not violations, "violations": [_violation(v) for v in violations]}


def cmd_coh(args, X):
    S = parse_sheaf(args.sheaf, X)
    return {str(q): _num(h) for q, h in sorted(cohomology(S).items())}, None


def cmd_blocks(args, X):
    C = blocks.standard_blocks(X)
    out = {
        "space": list(X.dims),
        "type": list(C.type),
        "blocks": [[format_atom(a) for a in b] for b in C.blocks],
    }
    verdict = None
    if args.verify:
        violations = blocks.verify_block_axioms(C)
        out["report"] = _report(violations)
        verdict = not violations
    return out, verdict


def cmd_dual(args, X):
    D = blocks.dual_collection(X)
    out = {
        "space": list(X.dims),
        "entries": [
            {"k": k, "bundle": format_atom(E), "dual": format_atom(R)} for k, E, R in D.pairs()
        ],
    }
    verdict = None
    if args.verify:
        violations = blocks.verify_duality(X, D)
        out["report"] = _report(violations)
        verdict = not violations
    return out, verdict


def cmd_beilinson(args, X):
    F = parse_sheaf(args.sheaf, X)
    page = beilinson.e1_page(X, F, args.variant)
    out = {
        "variant": page.variant,
        "sheaf": format_sheaf(F),
        "cells": [
            {"p": p, "q": q, "label": format_atom(label), "multiplicity": _num(m)}
            for (p, q), entries in sorted(page.cells.items())
            for label, m in entries
        ],
    }
    verdict = None
    if args.kcheck:
        kc = beilinson.kclass_check(page)
        out["kcheck"] = {"pass": kc.ok, "residual": [_num(r) for r in kc.residual]}
        verdict = kc.ok
    return out, verdict


def cmd_acm(args, X):
    S = parse_sheaf(args.sheaf, X)
    ws = criteria.acm_check(X, S)
    return {"acm": not ws, "witnesses": [_witness(w) for w in ws]}, not ws


def cmd_split(args, X):
    E = parse_sheaf(args.sheaf, X)
    v = criteria.split_check(X, E)
    out = {"verdict": v.verdict}
    if v.witness is not None:
        out["witness"] = _witness(v.witness)
    return out, v.verdict == criteria.CERTIFIED_SPLIT


def cmd_omega(args, X):
    S = criteria.omega_bundle(X, args.j)
    return {"j": args.j, "sheaf": format_sheaf(S), "rank": _num(rank(S))}, None


def _check(c):
    return {
        "group": c.group,
        "p": c.p,
        "bundle": format_atom(c.bundle) if c.bundle is not None else None,
        "degree": c.degree,
        "dim": _num(c.dim),
        "expected": _num(c.expected),
    }


def cmd_characterize(args, X):
    F = parse_sheaf(args.sheaf, X)
    res = criteria.characterize(X, args.j, F)
    out = {"verdict": res.verdict}
    if res.failure is not None:
        out["failure"] = _check(res.failure)
    out["checks"] = [_check(c) for c in res.checks]
    return out, res.verdict == criteria.PASS


def cmd_summand(args, X):
    F = parse_sheaf(args.sheaf, X)
    rep = beilinson.corner_summand(X, F)
    out = {
        "hypotheses_hold": rep.hypotheses_hold,
        "failures": [
            {"p": p, "bundle": format_atom(E), "degree": q, "dim": _num(h)}
            for p, E, q, h in rep.failures
        ],
        "predicted": format_sheaf(rep.predicted) if rep.predicted is not None else None,
        "confirmed": rep.confirmed,
    }
    return out, None


def render_table(obj, indent=0) -> str:
    """Plain-text rendering carrying the same values as the JSON form."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, dict) and val or isinstance(val, list) and any(
                isinstance(x, (dict, list)) for x in val
            ):
                lines.append(f"{pad}{key}:")
                lines.append(render_table(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(obj, list):
        if all(isinstance(x, dict) for x in obj):
            cols = list(dict.fromkeys(k for x in obj for k in x))
            rows = [[_scalar(x.get(c)) for c in cols] for x in obj]
            widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)]
            lines.append(pad + "  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
            for r in rows:
                lines.append(pad + "  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
        else:
            for x in obj:
                if isinstance(x, dict):
                    lines.append(render_table(x, indent))
                else:
                    lines.append(f"{pad}{_scalar(x)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return "\n".join(lines)


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", required=True, help="factor dimensions, e.g. 1,2")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--strict", action="store_true", help="exit 1 on a failed verdict")

    parser = argparse.ArgumentParser(
        prog="multiproj",
        description="Exact sheaf cohomology and splitting criteria on multiprojective spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coh", parents=[common], help="cohomology table")
    p.add_argument("--sheaf", required=True)
    p.set_defaults(func=cmd_coh)

    p = sub.add_parser("blocks", parents=[common], help="standard block collection")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("dual", parents=[common], help="dual block collection")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("beilinson", parents=[common], help="E1 page of a Beilinson spectral sequence")
    p.add_argument("--variant", choices=("I", "II"), default="II")
    p.add_argument("--sheaf", required=True)
    p.add_argument("--kcheck", action="store_true")
    p.set_defaults(func=cmd_beilinson)

    p = sub.add_parser("acm", parents=[common], help="intermediate cohomology witnesses")
    p.add_argument("--sheaf", required=True)
    p.set_defaults(func=cmd_acm)

    p = sub.add_parser("split", parents=[common], help="box splitting criterion")
    p.add_argument("--sheaf", required=True)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("omega", parents=[common], help="bundle of differential forms")
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("characterize", parents=[common], help="differential-form characterization")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--sheaf", required=True)
    p.set_defaults(func=cmd_characterize)

    p = sub.add_parser("summand", parents=[common], help="trivial direct summand test")
    p.add_argument("--sheaf", required=True)
    p.set_defaults(func=cmd_summand)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        X = parse_space(args.space)
        result, verdict = args.func(args, X)
    except SheafSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    if args.format == "json":
        text = json.dumps(result, indent=2)
    else:
        text = render_table(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.strict and verdict is False:
        return EXIT_VERDICT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
