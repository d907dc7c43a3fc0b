"""Command line surface: counting, enumeration, Frobenius computation,
verification suites, and positivity experiments.

Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 conjecture
counterexample (positivity verb only). Identical command lines produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from . import verify as verify_mod
from .combinat import partitions_of
from .homomorphisms import (
    bifrobenius,
    count_dyck_closed,
    count_parking_closed,
    count_primitive_closed,
    park_frobenius,
)
from .parking import (
    brute_bifrobenius,
    brute_frobenius,
    count_parking_brute,
    enumerate_parking,
    shapes,
)
from .paths import count_dyck, count_free, enumerate_dyck, enumerate_free, slope_params
from .positivity import conjecture_case
from .symfunc import BASES, BI_BASES


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_filter(raw: str):
    if raw in ("all", "primitive"):
        return raw
    if raw.startswith("returns="):
        body = raw[len("returns=") :]
        try:
            return tuple(int(x) for x in body.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad returns composition {body!r}")
    raise argparse.ArgumentTypeError(
        f"bad filter {raw!r}; expected all, primitive, or returns=c1,c2,..."
    )


def _filter_label(pathfilter) -> str:
    if isinstance(pathfilter, tuple):
        return "returns=" + ",".join(map(str, pathfilter))
    return pathfilter


def _metadata(m: int, n: int, pathfilter, basis: str) -> dict:
    d, a, b = slope_params(m, n)
    return {
        "m": m,
        "n": n,
        "a": a,
        "b": b,
        "d": d,
        "filter": _filter_label(pathfilter),
        "basis": basis,
    }


def _render_table(row_label, col_label, row_vals, col_vals, cell) -> str:
    grid = [[f"{row_label}\\{col_label}"] + [str(c) for c in col_vals]]
    for r in row_vals:
        grid.append([str(r)] + [str(cell(r, c)) for c in col_vals])
    widths = [max(len(row[i]) for row in grid) for i in range(len(grid[0]))]
    lines = [
        "  ".join(entry.rjust(w) for entry, w in zip(row, widths)) for row in grid
    ]
    return "\n".join(lines)


def _cmd_count(args) -> int:
    m, n = args.m, args.n
    if args.kind == "dyck":
        value = count_dyck(m, n) if args.brute else count_dyck_closed(m, n)
    elif args.kind == "primitive":
        if args.brute:
            value = sum(1 for q in enumerate_dyck(m, n) if q.is_primitive())
        else:
            value = count_primitive_closed(m, n)
    elif args.kind == "parking":
        if args.brute:
            value = count_parking_brute(m, n, args.filter)
        else:
            value = count_parking_closed(m, n, args.filter)
    else:  # free
        if args.brute:
            value = sum(1 for _ in enumerate_free(m, n, args.south_start))
        else:
            value = count_free(m, n, args.south_start)
    print(value)
    return 0


def _cmd_enumerate(args) -> int:
    m, n = args.m, args.n
    if args.kind == "dyck":
        items = shapes(m, n, args.filter)
        for path in items:
            if args.format == "json":
                print(json.dumps(path.to_json_dict(), sort_keys=True))
            else:
                print(" ".join(map(str, path.seq)))
    elif args.kind == "parking":
        for pf in enumerate_parking(m, n, args.filter):
            if args.format == "json":
                print(json.dumps(pf.to_json_dict(), sort_keys=True))
            else:
                print(" ".join(map(str, pf.word)))
    else:  # free
        for path in enumerate_free(m, n, args.south_start):
            if args.format == "json":
                print(json.dumps(path.to_json_dict(), sort_keys=True))
            else:
                print(path.word)
    return 0


def _cmd_frobenius(args) -> int:
    m, n = args.m, args.n
    f = brute_frobenius(m, n, args.filter) if args.brute else park_frobenius(m, n, args.filter)
    f = f.to_basis(args.basis)
    if args.format == "json":
        payload = _metadata(m, n, args.filter, args.basis)
        payload["terms"] = f.to_json_dict()["terms"]
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f.render())
    return 0


def _cmd_bifrobenius(args) -> int:
    m, n = args.m, args.n
    f = brute_bifrobenius(m, n) if args.brute else bifrobenius(m, n)
    f = f.to_basis(args.basis)
    if args.format == "json":
        payload = _metadata(m, n, "all", args.basis)
        payload["terms"] = f.to_json_dict()["terms"]
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f.render())
    return 0


def _cmd_table(args) -> int:
    if args.kind == "dyck":
        m_max = args.m_max or 7
        n_max = args.n_max or 9

        def cell(m, n):
            return count_dyck(m, n) if args.brute else count_dyck_closed(m, n)

        print(_render_table("m", "n", range(1, m_max + 1), range(1, n_max + 1), cell))
    else:
        m_max = args.m_max or 8
        n_max = args.n_max or 7

        def cell(n, m):
            return count_parking_brute(m, n) if args.brute else count_parking_closed(m, n)

        print(_render_table("n", "m", range(1, n_max + 1), range(1, m_max + 1), cell))
    return 0


def _parse_pairs(raw: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in raw.split():
        a_str, _, b_str = chunk.partition("/")
        try:
            a, b = int(a_str), int(b_str)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad slope pair {chunk!r}; use a/b")
        if a < 1 or b < 1 or gcd(a, b) != 1:
            raise argparse.ArgumentTypeError(f"{chunk!r} is not a coprime pair")
        pairs.append((a, b))
    if not pairs:
        raise argparse.ArgumentTypeError("no slope pairs given")
    return pairs


def _cmd_positivity(args) -> int:
    failures = 0
    for a, b in args.pairs:
        for d in range(1, args.max_size + 1):
            for mu in partitions_of(d):
                report = conjecture_case(mu, a, b)
                if args.format == "json":
                    print(json.dumps(report, sort_keys=True))
                else:
                    verdict = "schur-positive" if report["schur_positive"] else "COUNTEREXAMPLE"
                    print(
                        f"mu={','.join(map(str, mu))} a={a} b={b} "
                        f"iota={report['iota']} {verdict}"
                    )
                if not report["schur_positive"]:
                    failures += 1
                    print(
                        f"counterexample detail: {json.dumps(report, sort_keys=True)}",
                        file=sys.stderr,
                    )
    return 3 if failures else 0


def _cmd_verify(args) -> int:
    results = verify_mod.run_checks(max_semi=args.max_semi)
    ok = True
    for res in results:
        tag = "ok  " if res.ok else "FAIL"
        print(f"{tag} {res.name} ({res.detail})")
        ok = ok and res.ok
    print("verification passed" if ok else "verification FAILED")
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rectpark",
        description=(
            "Rectangular Dyck paths and parking functions: exact counts, "
            "Frobenius characteristics, and verification against brute force."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_rect(sp):
        sp.add_argument("m", type=int, help="rectangle width (east steps)")
        sp.add_argument("n", type=int, help="rectangle height (south steps)")

    def add_filter(sp):
        sp.add_argument(
            "--filter",
            type=_parse_filter,
            default="all",
            help="all, primitive, or returns=c1,c2,... (a composition of gcd(m, n))",
        )

    def add_format(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("count", help="count paths or parking functions")
    sp.add_argument("kind", choices=("dyck", "primitive", "parking", "free"))
    add_rect(sp)
    add_filter(sp)
    sp.add_argument("--brute", action="store_true", help="force enumeration")
    sp.add_argument("--south-start", action="store_true", help="free paths starting south")
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("enumerate", help="stream objects one per line")
    sp.add_argument("kind", choices=("dyck", "parking", "free"))
    add_rect(sp)
    add_filter(sp)
    add_format(sp)
    sp.add_argument("--south-start", action="store_true")
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("frobenius", help="parking Frobenius characteristic")
    add_rect(sp)
    add_filter(sp)
    add_format(sp)
    sp.add_argument("--basis", choices=BASES, default="h")
    sp.add_argument("--brute", action="store_true", help="use the enumeration oracle")
    sp.set_defaults(func=_cmd_frobenius)

    sp = sub.add_parser("bifrobenius", help="two-alphabet Frobenius characteristic")
    add_rect(sp)
    add_format(sp)
    sp.add_argument("--basis", choices=BI_BASES, default="hh")
    sp.add_argument("--brute", action="store_true")
    sp.set_defaults(func=_cmd_bifrobenius)

    sp = sub.add_parser("table", help="render a counting table")
    sp.add_argument("kind", choices=("dyck", "parking"))
    sp.add_argument("--m-max", type=int, default=None)
    sp.add_argument("--n-max", type=int, default=None)
    sp.add_argument("--brute", action="store_true")
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser(
        "positivity", help="Schur positivity experiments (exit 3 on counterexample)"
    )
    sp.add_argument("--max-size", type=int, default=3, help="largest shape size")
    sp.add_argument(
        "--pairs",
        type=_parse_pairs,
        default=[(1, 1), (1, 2), (2, 3)],
        help='space separated slope pairs, e.g. "1/1 1/2 2/3"',
    )
    add_format(sp)
    sp.set_defaults(func=_cmd_positivity)

    sp = sub.add_parser(
        "verify", help="run the oracle-equivalence suites (exit 2 on mismatch)"
    )
    sp.add_argument(
        "--max-semi",
        type=int,
        default=12,
        help="semiperimeter bound for the heavyweight sweeps",
    )
    sp.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"rectpark: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
