"""Command-line interface: ``shivar <subcommand> --n N ...``.

Exit status: 0 success, 1 invalid input, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .algebra import (
    AffineElement, Permutation, affine_reflection, compose, parse_permutation, parse_word,
    translation,
)
from .bijection import bijection_table
from .components import NotAdmitted, NotOnVariety, check_admitted, enumerate_admitted
from .diamond import ResultNotAdmitted, diamond_iterated, diamond_matrix, simple_reflection_table
from .poset import build_component_poset, build_cycle_poset, dumps, to_dot
from .shi import RootVector, admitted_part, k_vector
from .verify import run_checks

EXIT_INVALID = 1
EXIT_INTERNAL = 2


class InvalidInput(Exception):
    pass


class InvariantViolation(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--n", type=int, required=True, help="rank of A_n (n >= 1)")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--output", "-o", default="-", help="output file (default: stdout)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shivar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common()

    sub.add_parser("enumerate", parents=[common], help="list admitted vectors")

    p = sub.add_parser("kvec", parents=[common], help="Shi coefficients of an affine element")
    p.add_argument("--word", default="", help='generator indices, 0 = affine s_0, e.g. "1 2 0"')
    p.add_argument("--translate", help='translation x_1 ... x_{n+1} applied on the left')

    p = sub.add_parser("act", parents=[common], help="diamond action on admitted vectors")
    p.add_argument("--perm", help='one-line notation, e.g. "2 1 3 4"')
    p.add_argument("--lambda", dest="lam", help='non-simple coordinates, e.g. "0,1,0"')
    p.add_argument("--method", choices=("matrix", "closed", "both"), default="both")
    p.add_argument("--table", action="store_true", help="action of all simple reflections")

    sub.add_parser("bijection", parents=[common], help="cycles <-> components table")

    p = sub.add_parser("poset", parents=[common], help="build and export a poset")
    p.add_argument("--side", choices=("component", "cycle"), default="component")
    p.add_argument("--dot", metavar="FILE", help="also write Graphviz DOT to FILE")

    sub.add_parser("verify", parents=[common], help="run the invariant suite")
    return parser


def parse_lambda(n: int, text: str) -> RootVector:
    try:
        values = [int(t) for t in text.replace(" ", "").split(",") if t != ""]
        lam = RootVector.from_short(n, values)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    try:
        return check_admitted(lam)
    except NotAdmitted as exc:
        raise InvalidInput(str(exc)) from exc


def _affine_from_word(n: int, word: list[int]) -> AffineElement:
    w = AffineElement.identity(n)
    for i in word:
        if i == 0:
            g = affine_reflection(n, (1, n + 1), 1)
        elif 1 <= i <= n:
            g = affine_reflection(n, (i, i + 1), 0)
        else:
            raise InvalidInput(f"generator index {i} out of range 0..{n}")
        w = compose(w, g)
    return w


def _act(method: str, w: Permutation, lam: RootVector) -> RootVector:
    if method == "matrix":
        return diamond_matrix(w, lam)
    if method == "closed":
        return diamond_iterated(w, lam)
    a, b = diamond_matrix(w, lam), diamond_iterated(w, lam)
    if a != b:
        raise InvariantViolation(f"matrix path gives {a}, closed form gives {b} for {w} . {lam}")
    return a


def cmd_enumerate(args, out):
    vectors = enumerate_admitted(args.n)
    if args.format == "json":
        json.dump({"n": args.n, "admitted": [v.to_dict(skip_simple=True) for v in vectors]}, out, indent=1)
        out.write("\n")
    else:
        for v in vectors:
            out.write(f"{v}\n")


def cmd_kvec(args, out):
    try:
        w = _affine_from_word(args.n, parse_word(args.word))
        if args.translate:
            x = tuple(int(t) for t in args.translate.replace(",", " ").split())
            if len(x) != args.n + 1:
                raise InvalidInput(f"--translate needs {args.n + 1} integers")
            w = compose(translation(x), w)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    k = k_vector(w)
    lam = admitted_part(k)
    if args.format == "json":
        json.dump({"n": args.n, "k": k.to_dict(), "lambda": lam.to_dict(skip_simple=True)}, out, indent=1)
        out.write("\n")
    else:
        out.write("k      " + " ".join(f"({i},{j}):{v}" for (i, j), v in k.items()) + "\n")
        out.write(f"lambda {lam}\n")


def cmd_act(args, out):
    n = args.n
    if args.table:
        columns = enumerate_admitted(n)
        methods = ("matrix", "closed") if args.method == "both" else (args.method,)
        grids = [simple_reflection_table(columns, m) for m in methods]
        if any(g != grids[0] for g in grids):
            raise InvariantViolation("matrix and closed-form tables differ")
        rows = grids[0]
        if args.format == "json":
            json.dump({
                "n": n,
                "columns": [v.to_dict(skip_simple=True) for v in columns],
                "rows": [{"reflection": f"s_{i},{i + 1}", "images": [v.to_dict(skip_simple=True) for v in row]}
                         for i, row in enumerate(rows, start=1)],
            }, out, indent=1)
            out.write("\n")
        else:
            width = max(len(str(v)) for v in columns)
            head = " " * 8 + " ".join(f"{str(v):>{width}}" for v in columns)
            out.write(head + "\n")
            for i, row in enumerate(rows, start=1):
                label = f"s_{i},{i + 1}"
                out.write(f"{label:<8}" + " ".join(f"{str(v):>{width}}" for v in row) + "\n")
        return
    if args.perm is None or args.lam is None:
        raise InvalidInput("act needs --perm and --lambda (or --table)")
    try:
        w = parse_permutation(args.perm)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    if w.n != n:
        raise InvalidInput(f"--perm has {len(w.images)} points, expected {n + 1}")
    lam = parse_lambda(n, args.lam)
    result = _act(args.method, w, lam)
    if args.format == "json":
        json.dump({"n": n, "perm": str(w), "lambda": lam.to_dict(skip_simple=True),
                   "result": result.to_dict(skip_simple=True)}, out, indent=1)
        out.write("\n")
    else:
        out.write(f"{result}\n")


def cmd_bijection(args, out):
    table = bijection_table(args.n)
    if args.format == "json":
        json.dump(table.to_json(), out, indent=1)
        out.write("\n")
    else:
        for c, lam in table.rows():
            out.write(f"{str(c):<{2 * args.n + 3}} {c.cycle_str():<{2 * args.n + 5}} {lam}\n")


def cmd_poset(args, out):
    poset = build_component_poset(args.n) if args.side == "component" else build_cycle_poset(args.n)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(poset))
    if args.format == "dot":
        out.write(to_dot(poset))
    elif args.format == "json":
        out.write(dumps(poset) + "\n")
    else:
        for a, b, label in poset.covers:
            out.write(f"{poset.node_label(a)} < {poset.node_label(b)}  {poset.edge_label(label)}\n")
    if getattr(poset, "missing", None):
        print(f"warning: {len(poset.missing)} covers have no transposition label", file=sys.stderr)


def cmd_verify(args, out):
    def report(name, passed):
        out.write(f"{'PASS' if passed else 'FAIL'}  {name}\n")
        out.flush()
    if not run_checks(args.n, seed=args.seed, report=report):
        raise InvariantViolation("some invariants failed")


COMMANDS = {
    "enumerate": cmd_enumerate, "kvec": cmd_kvec, "act": cmd_act,
    "bijection": cmd_bijection, "poset": cmd_poset, "verify": cmd_verify,
}


@contextmanager
def _open_output(path):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.n < 1:
            raise InvalidInput(f"--n must be >= 1, got {args.n}")
        if args.format == "dot" and args.command != "poset":
            raise InvalidInput("--format dot is only valid for poset")
        with _open_output(args.output) as out:
            COMMANDS[args.command](args, out)
    except InvalidInput as exc:
        print(f"shivar: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InvariantViolation, NotOnVariety, ResultNotAdmitted) as exc:
        print(f"shivar: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return 0


if __name__ == "__main__":
    sys.exit(main())
