"""Command-line interface: ``supermult {witt,multiplier,oracle,capable,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
limit, 4 I/O or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any

from .exactlin import PreconditionError
from .families import FamilyParseError, parse_family
from .freelie import DEFAULT_WORD_CAP, GradedAlphabet, ResourceError
from .multiplier import ClosedFormUnavailable, multiplier_closed
from .oracle import Bracket, BracketExpr, Gen, Presentation, Scale, Sum, capability_table, is_capable, multiplier_oracle, present
from .verify import SUITES, run_suites
from .witt import ParitySignature, graded_dims, layer_dim, super_witt_SW, witt_W

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE, EXIT_IO = 0, 1, 2, 3, 4
COLUMNS = ["input", "even", "odd", "total", "provenance", "method", "value"]


class UsageError(Exception):
    pass


class ParseError(Exception):
    pass


# --- presentation files -----------------------------------------------------------


def parse_expr(obj: Any) -> BracketExpr:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ParseError(f"expression must be a one-key object, got {obj!r}")
    (key, val), = obj.items()
    if key == "gen":
        if not isinstance(val, str):
            raise ParseError("gen takes a generator name")
        return Gen(val)
    if key == "bracket":
        if not isinstance(val, list) or len(val) != 2:
            raise ParseError("bracket takes exactly two expressions")
        return Bracket(parse_expr(val[0]), parse_expr(val[1]))
    if key == "scale":
        if not isinstance(val, list) or len(val) != 2 or not isinstance(val[0], str):
            raise ParseError('scale takes ["p/q", expression]')
        try:
            return Scale(val[0], parse_expr(val[1]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {val[0]!r}: {exc}") from None
    if key == "sum":
        if not isinstance(val, list):
            raise ParseError("sum takes a list of expressions")
        return Sum(tuple(parse_expr(v) for v in val))
    raise ParseError(f"unknown expression kind {key!r}")


def presentation_from_json(data: Any) -> Presentation:
    try:
        gens = data["generators"]
        alphabet = GradedAlphabet(tuple(str(g["name"]) for g in gens), tuple(int(g["parity"]) for g in gens))
        rels = tuple(parse_expr(r) for r in data.get("relators", []))
        return Presentation(alphabet, rels, int(data["class"]))
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"invalid presentation: {exc}") from None


def expr_to_json(e: BracketExpr) -> dict:
    if isinstance(e, Gen):
        return {"gen": e.name}
    if isinstance(e, Bracket):
        return {"bracket": [expr_to_json(e.left), expr_to_json(e.right)]}
    if isinstance(e, Scale):
        return {"scale": [f"{e.coeff.numerator}/{e.coeff.denominator}", expr_to_json(e.expr)]}
    if isinstance(e, Sum):
        return {"sum": [expr_to_json(t) for t in e.terms]}
    raise TypeError(f"not an expression: {e!r}")


def presentation_to_json(P: Presentation) -> dict:
    return {
        "generators": [{"name": n, "parity": p} for n, p in zip(P.alphabet.names, P.alphabet.parities)],
        "relators": [expr_to_json(r) for r in P.relators],
        "class": P.class_bound,
    }


def load_presentation(path: str) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from None
    return presentation_from_json(data)


# --- result tables ------------------------------------------------------------------------


def row(input_: str, even: int, odd: int, provenance: str, method: str, value: Any = None) -> dict:
    r = {"input": input_, "even": int(even), "odd": int(odd), "total": int(even) + int(odd),
         "provenance": provenance, "method": method}
    if value is not None:
        r["value"] = value
    return r


def render(rows: list[dict], fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        payload = {"rows": rows}
        if extra:
            payload.update(extra)
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: r.get(k, "") for k in COLUMNS})
        return buf.getvalue().rstrip("\n")
    cols = [c for c in COLUMNS if any(c in r for r in rows)]
    cells = [[str(r.get(c, "")) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(line[i]) for line in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.ljust(w) for v, w in zip(line, widths)).rstrip() for line in cells]
    if extra:
        lines += [f"{k}: {v}" for k, v in extra.items()]
    return "\n".join(lines)


# --- commands ---------------------------------------------------------------------------------


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def cmd_witt(args) -> tuple[list[dict], dict]:
    if args.even < 0 or args.odd < 0 or args.even + args.odd < 1:
        raise UsageError("--even and --odd must be non-negative with a positive sum")
    sig = ParitySignature(args.even, args.odd)
    tag = f"({args.even}|{args.odd})"
    rows = []
    if args.multidegree is not None:
        alpha = _int_list(args.multidegree)
        if len(alpha) != sig.size or any(a < 0 for a in alpha) or sum(alpha) < 1:
            raise UsageError(f"multidegree needs {sig.size} non-negative entries with positive sum")
        par = sig.parity_of(alpha)
        desc = f"{tag} alpha={','.join(map(str, alpha))}"
        for name, v in (("W", witt_W(alpha)), ("SW", super_witt_SW(sig, alpha))):
            rows.append(row(desc, 0 if par else v, v if par else 0, name, "closed", v))
        return rows, {}
    if args.degree is None or args.degree < 1:
        raise UsageError("--degree must be >= 1 (or give --multidegree)")
    r = args.degree
    g = graded_dims(sig, r)
    lay = layer_dim(sig, r)
    desc = f"{tag} r={r}"
    rows.append(row(desc, lay.even, lay.odd, "layer", "closed"))
    rows.append(row(desc, g.dim_Lr_plus, g.dim_Lr_minus, "graded-dims", "closed", g.sdim_Lr))
    return rows, {"dim_Lr": g.dim_Lr, "dim_Lr_plus": g.dim_Lr_plus, "dim_Lr_minus": g.dim_Lr_minus, "sdim_Lr": g.sdim_Lr}


def cmd_multiplier(args) -> tuple[list[dict], dict]:
    if args.c < 1:
        raise UsageError("--c must be >= 1")
    spec = parse_family(args.family)
    rows, extra = [], {}
    closed = oracle = None
    if args.method in ("closed", "both"):
        res = multiplier_closed(spec, args.c)
        closed = res.dims
        rows.append(row(str(spec), closed.even, closed.odd, res.provenance, "closed"))
    if args.method in ("oracle", "both"):
        P = present(spec.build())
        oracle = multiplier_oracle(P, args.c, word_cap=args.word_cap)
        rows.append(row(str(spec), oracle.even, oracle.odd, "presentation", "oracle"))
        extra["N"] = P.frame_degree(args.c)
    if args.method == "both":
        extra["match"] = closed == oracle
    return rows, extra


def cmd_oracle(args) -> tuple[list[dict], dict]:
    if args.c < 1:
        raise UsageError("--c must be >= 1")
    P = load_presentation(args.presentation)
    N = P.frame_degree(args.c)
    dims = multiplier_oracle(P, args.c, word_cap=args.word_cap)
    return [row(args.presentation, dims.even, dims.odd, "presentation", "oracle")], {"N": N, "universe": P.universe_size(args.c)}


def cmd_capable(args) -> tuple[list[dict], dict]:
    spec = parse_family(args.family)
    rep = is_capable(spec.build(), args.order)
    cert = rep.certificate_dim
    extra = {"capable": rep.capable, "order": args.order}
    if len(spec.parts) == 1:
        part = spec.parts[0]
        extra["expected"] = capability_table(part.kind, part.params, args.order)
    return [row(str(spec), cert.even, cert.odd, f"Z_{args.order}^*", "oracle", rep.capable)], extra


def cmd_verify(args) -> tuple[list[dict], dict]:
    checks = run_suites([args.suite], max_dim=args.max_dim, workers=args.workers)
    rows = [{"suite": c.suite, "check": c.name, "source": c.source, "passed": c.passed, "detail": c.detail}
            for c in checks]
    failed = sum(not c.passed for c in checks)
    return rows, {"checks": len(checks), "failed": failed}


def render_verify(rows: list[dict], extra: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"checks": rows, **extra}, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["suite", "check", "source", "passed", "detail"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    lines = [f"{'PASS' if r['passed'] else 'FAIL'}  {r['suite']:<10} {r['check']}  [{r['source']}]"
             + (f"  {r['detail']}" if not r["passed"] else "") for r in rows]
    lines.append(f"{extra['checks'] - extra['failed']}/{extra['checks']} checks passed")
    return "\n".join(lines)


# --- entry point ---------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="supermult", description="Multipliers and capability of nilpotent Lie superalgebras.")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    w = sub.add_parser("witt", help="free Lie superalgebra ranks")
    w.add_argument("--even", type=int, required=True)
    w.add_argument("--odd", type=int, required=True)
    g = w.add_mutually_exclusive_group(required=True)
    g.add_argument("--degree", type=int)
    g.add_argument("--multidegree")

    m = sub.add_parser("multiplier", help="dimension of M^(c) for a family")
    m.add_argument("--family", required=True, help="A:m,n | Heven:m,n | Hodd:m | sums joined by '+'")
    m.add_argument("--c", type=int, default=2)
    m.add_argument("--method", choices=["closed", "oracle", "both"], default="closed")
    m.add_argument("--word-cap", type=int, default=DEFAULT_WORD_CAP)

    o = sub.add_parser("oracle", help="M^(c) of a presentation file")
    o.add_argument("--presentation", required=True)
    o.add_argument("--c", type=int, default=2)
    o.add_argument("--word-cap", type=int, default=DEFAULT_WORD_CAP)

    c = sub.add_parser("capable", help="capability via Z_c^*")
    c.add_argument("--family", required=True)
    c.add_argument("--order", type=int, choices=[1, 2], default=1)

    v = sub.add_parser("verify", help="run the self-check suites")
    v.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    v.add_argument("--max-dim", type=int, default=5)
    v.add_argument("--workers", type=int, default=1)
    return p


COMMANDS = {"witt": cmd_witt, "multiplier": cmd_multiplier, "oracle": cmd_oracle, "capable": cmd_capable, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        rows, extra = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FamilyParseError, ClosedFormUnavailable, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (OSError, ParseError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_IO
    if args.command == "verify":
        print(render_verify(rows, extra, args.format))
        return EXIT_OK if extra["failed"] == 0 else EXIT_FAIL
    print(render(rows, args.format, extra))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
