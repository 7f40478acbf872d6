"""Command-line front end.

    multseq ms        --vars x,y --ideal "x2,xy"
    multseq monjmult  --vars a..d --ideal "ab2,bc3,cd4,da5" --power 3
    multseq spread    --vars a,b,c,d --ideal "ab2,bc3,cd4,da5" --power 5

Exit status is 0 on success, 1 for mathematical errors (improper ideal,
resource caps) and 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional

from . import hilbert, newton
from .errors import MultSeqError, ParseError
from .monomial import MonomialIdeal, RingSpec, power
from .parsing import parse_expression, render_ideal, render_monomial

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


def _ms(A: MonomialIdeal, args) -> dict:
    seq = hilbert.multiplicity_sequence(A, grid_cap=args.grid_cap, gen_cap=args.gen_cap, threads=args.threads)
    return {"c": list(seq.c), "nonzero": {str(i): v for i, v in seq.nonzero().items()}}


def _jmult(A, args) -> dict:
    return {"j": hilbert.j_multiplicity(A, grid_cap=args.grid_cap, gen_cap=args.gen_cap, threads=args.threads)}


def _monjmult(A, args) -> dict:
    return {"j": newton.mon_j_mult(A)}


def _spread(A, args) -> dict:
    return {"analytic_spread": newton.mon_analytic_spread(A)}


def _ideal_result(B: MonomialIdeal) -> dict:
    return {"ideal": [list(g) for g in B.gens], "text": render_ideal(B)}


def _reduction(A, args) -> dict:
    return _ideal_result(newton.mon_reduction(A))


def _closure(A, args) -> dict:
    return _ideal_result(newton.integral_closure(A))


def _facets(A, args) -> dict:
    P = newton.newton_polyhedron(A)
    return {
        "vertices": [list(v) for v in P.vertices],
        "facets": [{"normal": list(f.normal), "offset": f.offset, "bounded": f.is_bounded} for f in P.facets],
    }


def _lambda_table(A, args) -> dict:
    T = hilbert.lambda_table(A, args.max_i, args.max_j, gen_cap=args.gen_cap, threads=args.threads)
    return {"max_i": T.max_i, "max_j": T.max_j, "table": [list(r) for r in T.values]}


def _linear_form(normal, ring: RingSpec) -> str:
    parts = []
    for a, name in zip(normal, ring.var_names):
        if a:
            parts.append(name if a == 1 else f"{a}*{name}")
    return " + ".join(parts)


def _plain(cmd: str, A: MonomialIdeal, result: dict) -> str:
    if cmd == "ms":
        return "\n".join(f"c[{i}] = {v}" for i, v in result["nonzero"].items())
    if cmd in ("jmult", "monjmult"):
        return str(result["j"])
    if cmd == "spread":
        return str(result["analytic_spread"])
    if cmd in ("reduction", "closure"):
        return result["text"]
    if cmd == "facets":
        lines = ["vertices:"]
        lines += [f"  {render_monomial(v, A.ring)}  {tuple(v)}" for v in result["vertices"]]
        lines.append("facets:")
        for f in result["facets"]:
            tag = "  (bounded)" if f["bounded"] else ""
            lines.append(f"  {_linear_form(f['normal'], A.ring)} >= {f['offset']}{tag}")
        return "\n".join(lines)
    if cmd == "lambda-table":
        return "\n".join(" ".join(str(x) for x in row) for row in result["table"])
    raise AssertionError(cmd)


COMMANDS: Dict[str, Callable] = {
    "ms": _ms,
    "jmult": _jmult,
    "monjmult": _monjmult,
    "spread": _spread,
    "reduction": _reduction,
    "closure": _closure,
    "facets": _facets,
    "lambda-table": _lambda_table,
}

HELP = {
    "ms": "multiplicity sequence c_0..c_d (Hilbert-polynomial route)",
    "jmult": "j-multiplicity c_d via the Hilbert-polynomial route",
    "monjmult": "j-multiplicity via the Newton polyhedron",
    "spread": "analytic spread via compact faces of the Newton polyhedron",
    "reduction": "minimal monomial reduction (vertex ideal of the Newton polyhedron)",
    "closure": "integral closure",
    "facets": "vertices and facet inequalities of the Newton polyhedron",
    "lambda-table": "table of lengths of the bigraded pieces G_ij",
}


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multseq", description="Multiplicity sequences of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in COMMANDS:
        p = sub.add_parser(name, help=HELP[name], description=HELP[name])
        p.add_argument("--vars", required=True, help='variables, e.g. "x,y,z" or "a..e"')
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--ideal", help='ideal expression, e.g. "ab2,bc3" or "x^2*y, y^3"')
        src.add_argument("--ideal-file", help="file with one ideal expression per line (emits JSON lines)")
        p.add_argument("--power", type=_positive, default=1, help="replace the ideal by its k-th power")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--grid-cap", type=_positive, default=hilbert.DEFAULT_GRID_CAP)
        p.add_argument("--gen-cap", type=_positive, default=hilbert.DEFAULT_GEN_CAP)
        p.add_argument("--threads", type=_positive, default=1)
        if name == "lambda-table":
            p.add_argument("--max-i", type=_nonnegative, default=6)
            p.add_argument("--max-j", type=_nonnegative, default=6)
    return parser


def _evaluate(cmd: str, src: str, ring: RingSpec, args):
    expr = parse_expression(src, ring)
    A = expr.ideal
    if args.power > 1:
        A = power(A, args.power)
    return A, COMMANDS[cmd](A, args)


def _record(ring: RingSpec, A: MonomialIdeal, result: dict) -> str:
    return json.dumps({"vars": list(ring.var_names), "ideal": [list(g) for g in A.gens], "result": result})


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out, err = sys.stdout, sys.stderr
    try:
        ring = RingSpec.from_string(args.vars)
    except ValueError as exc:
        print(f"multseq: error: --vars: {exc}", file=err)
        return EXIT_USAGE

    if args.ideal is not None:
        try:
            A, result = _evaluate(args.command, args.ideal, ring, args)
        except ParseError as exc:
            print(f"multseq: parse error: {exc}", file=err)
            return EXIT_USAGE
        except MultSeqError as exc:
            print(f"multseq: error: {exc}", file=err)
            return EXIT_DOMAIN
        print(_record(ring, A, result) if args.json else _plain(args.command, A, result), file=out)
        return EXIT_OK

    try:
        with open(args.ideal_file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        print(f"multseq: error: cannot read {args.ideal_file}: {exc}", file=err)
        return EXIT_USAGE
    status = EXIT_OK
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            A, result = _evaluate(args.command, line, ring, args)
        except MultSeqError as exc:
            code = EXIT_USAGE if isinstance(exc, ParseError) else EXIT_DOMAIN
            status = max(status, code)
            print(f"multseq: line {lineno}: {exc}", file=err)
            print(json.dumps({"line": lineno, "input": line, "error": str(exc)}), file=out)
            continue
        print(_record(ring, A, result), file=out)
    return status


if __name__ == "__main__":
    sys.exit(main())
