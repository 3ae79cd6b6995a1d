"""Command-line front end.

Every probabilistic choice (field, seed, trials) is a flag, so identical
invocations print identical output.  Ideal results are printed in the
ideal-file format so commands compose through files.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from . import hrank, matham, variety
from .arith import DEFAULT_PRIME, QQ, Field, GF, parse_field
from .goldens import GOLDENS, bundled_names, read_ideal
from .groebner import buchberger
from .parsing import ParseError
from .poly import GREVLEX, LEX, MonomialOrder
from .variety import VarietyIdeal


class UsageError(Exception):
    pass


def _field_arg(text: str) -> Field:
    try:
        return parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range_arg(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None


def _order(name: str) -> MonomialOrder:
    return LEX if name == "lex" else GREVLEX


def _field_note(field: Field) -> str:
    if field.is_prime:
        return f"# field: F_{field.characteristic} (probabilistic certificate of the characteristic-0 answer)"
    return "# field: QQ (exact)"


def _emit_ideal(V: VarietyIdeal, args) -> list[str]:
    if args.order != "grevlex":
        gb = buchberger(V.generators, _order(args.order), ring=V.ring)
        V = VarietyIdeal(gb.ring, gb.elements, V.projective)
    out = [_field_note(V.field), V.to_text().rstrip("\n")]
    if args.dim or args.deg:
        h = V.hilbert()
        if args.dim:
            out.append(f"dimension: {h.dimension}")
        if args.deg:
            out.append(f"degree: {h.degree}")
    return out


def _load(path: str, args) -> VarietyIdeal:
    return read_ideal(path, args.field)


# -- commands ----------------------------------------------------------------


def cmd_binary(args) -> list[str]:
    X, Y = _load(args.x, args), _load(args.y, args)
    op = {
        "sum": variety.minkowski_sum,
        "hadamard": variety.hadamard_affine,
        "hadamard-proj": variety.hadamard_projective,
        "join": variety.join,
    }[args.command]
    result = op(X, Y)
    lines = _emit_ideal(result, args)
    if args.command == "hadamard-proj" and result.is_empty():
        lines.append("empty: true")
    return lines


def cmd_power(args) -> list[str]:
    X = _load(args.ideal, args)
    P = variety.hadamard_power(X, args.s)
    lines = _emit_ideal(P, args)
    lines.append(f"equals input: {str(P.equals(X)).lower()}")
    return lines


def cmd_dim_deg(args) -> list[str]:
    V = _load(args.ideal, args)
    h = V.hilbert()
    value = h.dimension if args.command == "dim" else h.degree
    label = "dimension" if args.command == "dim" else "degree"
    return [_field_note(V.field), f"{label}: {value}"]


def cmd_gb(args) -> list[str]:
    V = _load(args.ideal, args)
    gb = buchberger(V.generators, _order(args.order), ring=V.ring)
    W = VarietyIdeal(gb.ring, gb.elements, V.projective)
    return [_field_note(V.field), f"# reduced Groebner basis ({args.order})", W.to_text().rstrip("\n")]


def cmd_disjoint(args) -> list[str]:
    X, Y = _load(args.x, args), _load(args.y, args)
    return [_field_note(X.field), f"disjoint at infinity: {str(variety.disjoint_at_infinity(X, Y)).lower()}"]


def cmd_cayley(args) -> list[str]:
    X, Y = _load(args.x, args), _load(args.y, args)
    Xt, Yt = variety.cayley_lift(X, Y, args.z0, args.z1)
    J = variety.join(Xt, Yt)
    alpha = variety.generic_scalar(args.seed, X.field)
    S = variety.minkowski_sum(variety.dilate(X, alpha), Y)
    return [
        _field_note(X.field),
        f"alpha: {alpha}",
        f"join dimension: {J.dimension()}",
        f"join degree: {J.degree()}",
        f"sum dimension: {S.dimension()}",
        f"sum degree: {S.degree()}",
    ]


def cmd_decompose(args) -> list[str]:
    field = args.field or QQ
    M = matham.Matrix.from_text(args.matrix, field)
    D = matham.decompose(M, args.r)
    if args.scramble is not None and len(D.factors) > 1:
        D = matham.scramble(D, args.scramble)
    D.validate()
    lines = [_field_note(field), f"target: {M.to_text()}", f"factors: {len(D.factors)}"]
    for i, F in enumerate(D.factors, 1):
        lines.append(f"factor {i} (rank {F.rank()}): {F.to_text()}")
    lines.append(f"product equals target: {str(D.product() == M).lower()}")
    return lines


def cmd_table(args) -> list[str]:
    lo, hi = args.n
    if args.field is not None and not args.field.is_prime:
        prime = None
    else:
        prime = args.prime or (args.field.characteristic if args.field else DEFAULT_PRIME)
    rows = hrank.rank_table(lo, hi, args.trials, args.seed, prime, args.workers)
    out = [hrank.format_table(rows, csv=args.csv).rstrip("\n")]
    if not args.csv:
        bad = [r for r in rows if not r.agrees]
        out.append(f"# {len(rows)} rows, {len(bad)} disagree with the expected generic rank")
    return out


def cmd_expected(args) -> list[str]:
    n = args.n if args.n is not None else args.m
    lines = [f"expected generic rank: {hrank.expected_generic_rank(args.m, n, args.r)}"]
    if args.s is not None:
        lines.append(f"expected dimension: {hrank.expected_dim(args.m, n, args.r, args.s)}")
    return lines


def cmd_bounds(args) -> list[str]:
    n = args.n if args.n is not None else args.m
    b = matham.hrank_bounds(args.m, n, args.r)
    lines = [f"lower: {b.lower}", f"upper: {b.upper}"]
    lines.append(f"exact: {b.exact}" if b.exact is not None else "exact: unknown")
    return lines


def cmd_golden(args) -> list[str]:
    field = args.field or GF(DEFAULT_PRIME)
    if args.list:
        return [f"{g.name}: {g.command} {g.x} {g.y} ({g.note})" for g in GOLDENS] + [
            "bundled ideals: " + ", ".join(bundled_names())
        ]
    chosen = [g for g in GOLDENS if not args.names or g.name in args.names]
    unknown = set(args.names) - {g.name for g in GOLDENS}
    if unknown:
        raise UsageError(f"unknown golden case(s): {', '.join(sorted(unknown))}")
    op = {
        "sum": variety.minkowski_sum,
        "hadamard": variety.hadamard_affine,
        "hadamard-proj": variety.hadamard_projective,
    }
    lines = [_field_note(field)]
    failures = 0
    for g in chosen:
        t0 = time.perf_counter()
        R = op[g.command](read_ideal(g.x, field), read_ideal(g.y, field))
        h = R.hilbert()
        ok = h.dimension == g.expect_dim and h.degree == g.expect_deg
        failures += not ok
        line = f"{'PASS' if ok else 'FAIL'} {g.name}: dimension {h.dimension}, degree {h.degree}"
        if args.timing:
            line += f" ({time.perf_counter() - t0:.2f}s)"
        lines.append(line)
    if failures:
        raise ArithmeticError(f"{failures} golden case(s) failed")
    return lines


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artifact",
        description="Minkowski sums, Hadamard products and Hadamard ranks of varieties and matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def common(p, order=True):
        p.add_argument("--field", type=_field_arg, default=None,
                       help="q or fp:<prime> (default: the file's field line, else fp:32003)")
        p.add_argument("--seed", type=int, default=0)
        if order:
            p.add_argument("--order", choices=("lex", "grevlex"), default="grevlex")

    def outputs(p):
        p.add_argument("--dim", action="store_true", help="also print the dimension")
        p.add_argument("--deg", action="store_true", help="also print the degree")

    helps = {
        "sum": "Minkowski sum of affine varieties",
        "hadamard": "Hadamard product of affine varieties",
        "hadamard-proj": "Hadamard product of projective varieties",
        "join": "join of projective varieties",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--x", required=True, help="ideal file (or bundled case name)")
        p.add_argument("--y", required=True, help="ideal file (or bundled case name)")
        common(p)
        outputs(p)
        p.set_defaults(func=cmd_binary)

    p = sub.add_parser("power", help="Hadamard power of a projective variety")
    p.add_argument("ideal")
    p.add_argument("--s", type=int, required=True)
    common(p)
    outputs(p)
    p.set_defaults(func=cmd_power)

    for name in ("dim", "deg"):
        p = sub.add_parser(name, help=f"{'dimension' if name == 'dim' else 'degree'} of an ideal file")
        p.add_argument("ideal")
        common(p)
        p.set_defaults(func=cmd_dim_deg)

    p = sub.add_parser("gb", help="reduced Groebner basis of an ideal file")
    p.add_argument("ideal")
    common(p)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("disjoint-at-infinity", help="test whether closures meet at infinity")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    common(p)
    p.set_defaults(func=cmd_disjoint)

    p = sub.add_parser("cayley-degree", help="degrees of the Cayley join and of alpha*X + Y")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z0", type=int, default=0)
    p.add_argument("--z1", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("decompose", help="Hadamard decomposition of a matrix into rank <= r factors")
    p.add_argument("--matrix", required=True, help='rows separated by ";", entries by ","')
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--scramble", type=int, default=None, metavar="SEED",
                   help="rescale the factors by seeded rank-one matrices")
    p.add_argument("--field", type=_field_arg, default=None, help="q (default) or fp:<prime>")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("hrank-table", help="generic Hadamard ranks of square matrices")
    p.add_argument("--n", type=_range_arg, default=(3, 14), help="N or LO..HI (default 3..14)")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prime", type=int, default=None)
    p.add_argument("--field", type=_field_arg, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("expected-rank", help="expected generic Hadamard rank")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, default=None, help="also print the expected dimension of the s-th power")
    p.set_defaults(func=cmd_expected)

    p = sub.add_parser("bounds", help="lower/upper bounds on the Hadamard rank")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("golden", help="run the bundled reproduction cases")
    p.add_argument("names", nargs="*")
    p.add_argument("--list", action="store_true")
    p.add_argument("--timing", action="store_true")
    p.add_argument("--field", type=_field_arg, default=None)
    p.set_defaults(func=cmd_golden)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, FileNotFoundError, ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
