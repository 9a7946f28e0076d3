"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb

from .errors import InexactDivisionError, ParseError, PreconditionError, SymHermError, VariableSetMismatch
from .interpolation import METHODS, coordinates, hermite_basis, hermite_interpolant, hermite_signs
from .nodes import NodeMultiset, parse_nodes
from .parser import parse, render
from .poly import VariableSet
from .verify import DEFAULT_SEED, SUITES, run_suites

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3

ALIASES = ("x", "y", "z")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def session(nodes_text: str, n: int) -> tuple[NodeMultiset, VariableSet, dict[str, str]]:
    """Nodes, variable set ``x1..xn`` plus node symbols, and the ``x, y, z`` aliases."""
    A = parse_nodes(nodes_text)
    if n < 1:
        raise UsageError("--n must be at least 1")
    aliases = {a: f"x{k + 1}" for k, a in enumerate(ALIASES[:n])} if n <= 3 else {}
    vars = A.session_vars(n)
    reserved = set(vars.main) | set(aliases)
    clash = [p for p in A.params if p in reserved]
    if clash:
        raise ParseError(f"node symbol {clash[0]!r} collides with a main variable name")
    return A, vars, aliases


def _warn_merged(A: NodeMultiset) -> None:
    if A.merged:
        print(f"note: repeated node values merged into {{{A}}}", file=sys.stderr)


def _labels(A: NodeMultiset, picks) -> str:
    return "(" + ", ".join(A.label_name(c) for c in picks) + ")"


def cmd_interpolate(args) -> str:
    A, vars, aliases = session(args.nodes, args.n)
    _warn_merged(A)
    h = parse(args.h, vars, aliases)
    r = hermite_interpolant(h, A, args.method)
    text = render(r)
    if args.output == "json":
        return json.dumps(
            {
                "interpolant": text,
                "method": args.method,
                "nodes": str(A),
                "d": A.d,
                "n": args.n,
                "subsets": comb(A.d, args.n),
            },
            indent=2,
        )
    return text


def cmd_basis(args) -> str:
    A, vars, _ = session(args.nodes, args.n)
    _warn_merged(A)
    if A.d < args.n:
        raise PreconditionError(f"need |A| >= n (|A| = {A.d}, n = {args.n})")
    basis = hermite_basis(A, vars)
    signs = hermite_signs(A, vars)
    rows = []
    for k, (elem, eps) in enumerate(zip(basis, signs), start=1):
        rows.append(
            {
                "index": k,
                "subset": _labels(A, elem.subset.picks),
                "columns": [c + 1 for c in elem.subset.picks],
                "epsilon": eps,
                "omega": render(elem.omega),
                "signed_omega": render(elem.omega if eps > 0 else -elem.omega),
            }
        )
    if args.output == "json":
        return json.dumps({"nodes": str(A), "d": A.d, "n": args.n, "basis": rows}, indent=2)
    lines = [f"# symmetric Hermite basis, A = {{{A}}}, d = {A.d}, n = {args.n}, {len(rows)} elements"]
    for row in rows:
        sign = "+" if row["epsilon"] > 0 else "-"
        cols = ",".join(str(c) for c in row["columns"])
        lines.append(f"{row['index']}  {row['subset']}  cols [{cols}]  eps {sign}1  omega = {row['omega']}  eps*omega = {row['signed_omega']}")
    return "\n".join(lines)


def cmd_coords(args) -> str:
    A, vars, aliases = session(args.nodes, args.n)
    _warn_merged(A)
    h = parse(args.h, vars, aliases)
    cv = coordinates(h, A)
    rows = []
    for k, s in enumerate(cv.subsets, start=1):
        num, den = cv.reduced(s)
        rows.append(
            {
                "index": k,
                "subset": _labels(A, s.picks),
                "columns": [c + 1 for c in s.picks],
                "epsilon": cv.signs[s],
                "numerator": render(num),
                "denominator": render(den),
            }
        )
    if args.output == "json":
        return json.dumps({"nodes": str(A), "d": A.d, "n": args.n, "coordinates": rows}, indent=2)
    lines = [f"# coordinates in the Hermite basis, A = {{{A}}}, d = {A.d}, n = {args.n}"]
    for row in rows:
        value = row["numerator"] if row["denominator"] == "1" else f"({row['numerator']}) / ({row['denominator']})"
        lines.append(f"{row['index']}  {row['subset']}  c = {value}")
    return "\n".join(lines)


def cmd_verify(args) -> tuple[str, bool]:
    suites = SUITES if args.suite in (None, "all") else tuple(s.strip() for s in args.suite.split(","))
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    nodes = None
    lines = []
    if args.nodes is not None:
        nodes = parse_nodes(args.nodes)
        _warn_merged(nodes)
        if args.method:
            # surface method preconditions up front
            n = args.n or 1
            vars = nodes.session_vars(n)
            hermite_interpolant(vars.one(), nodes, args.method)
    results = run_suites(suites, seed=args.seed, count=args.count, nodes=nodes, n=args.n)
    ok = True
    for res in results:
        lines.append(res.line())
        for note in res.notes:
            lines.append(f"    {note}")
        for fail in res.failures:
            lines.append(f"    counterexample: {fail}")
        ok = ok and res.passed
    lines.append("all suites passed" if ok else "verification FAILED")
    return "\n".join(lines), ok


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symherm", description="Symmetric Hermite interpolation in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p, need_h=False, n_required=True):
        p.add_argument("--nodes", required=True, help='node multiset, e.g. "a^3, b^2" or "1/2^3, 4"')
        p.add_argument("--n", type=int, required=n_required, help="number of main variables x1..xn")
        if need_h:
            p.add_argument("--h", required=True, help='symmetric polynomial, e.g. "x1^2 + x2^2"')
        p.add_argument("--output", choices=("text", "json"), default="text")

    p = sub.add_parser("interpolate", help="symmetric Hermite interpolant of h")
    common(p, need_h=True)
    p.add_argument("--method", choices=METHODS, default="normal_form")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("basis", help="list the Hermite basis with signs")
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("coords", help="coordinates of the interpolant of h in the Hermite basis")
    common(p, need_h=True)
    p.set_defaults(func=cmd_coords)

    p = sub.add_parser("verify", help="run the exact-identity verification suites")
    p.add_argument("--nodes", default=None, help="restrict the suites to this multiset")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--suite", default="all", help=f"comma-separated subset of: {', '.join(SUITES)}")
    p.add_argument("--method", choices=METHODS, default=None, help="check this method's preconditions on --nodes")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--count", type=int, default=60, help="random cases per suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            out, ok = cmd_verify(args)
            print(out)
            return EXIT_OK if ok else EXIT_VERIFY
        print(args.func(args))
        return EXIT_OK
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        if exc.text is not None and exc.pos is not None:
            print(f"  {exc.text}\n  {' ' * exc.pos}^", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, VariableSetMismatch, InexactDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SymHermError as exc:  # pragma: no cover - every subclass is handled above
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
