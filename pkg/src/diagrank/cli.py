"""Command-line front end: encode, decode, enumerate, grid, selftest.

Exit codes: 0 success, 1 self-test failure, 2 usage or input error.
"""
import argparse
import csv
import json
import re
import sys
from itertools import islice
from typing import List, Optional, Sequence

from . import monotone_order as mo
from .rank_codec import TupleStream, phi, psi, unrank_phi, unrank_psi
from .wellorder_rank import verify_prefix_bijection, monotone_spec

_DECIMAL = re.compile(r"0|[1-9][0-9]*")


class UsageError(Exception):
    pass


def parse_decimal(text: str) -> int:
    """Canonical nonnegative decimal only: no sign, no leading zeros."""
    if not _DECIMAL.fullmatch(text):
        raise UsageError(f"not a canonical nonnegative decimal: {text!r}")
    return int(text)


def _positive(text: str) -> int:
    try:
        value = parse_decimal(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {text}")
    return value


def cmd_encode(args, out) -> int:
    if len(args.coords) != args.dim:
        raise UsageError(f"expected {args.dim} coordinates, got {len(args.coords)}")
    coords = [parse_decimal(c) for c in args.coords]
    out.write(f"{psi(coords)}\n")
    return 0


def cmd_decode(args, out) -> int:
    x = parse_decimal(args.rank)
    out.write(" ".join(map(str, unrank_psi(x, args.dim))) + "\n")
    return 0


def cmd_enumerate(args, out) -> int:
    k = args.dim
    rows = islice(TupleStream(k, args.space), args.count)
    if args.format == "plain":
        for x, t in enumerate(rows):
            out.write(f"{x}: {' '.join(map(str, t))}\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["rank"] + [f"n{i}" for i in range(1, k + 1)])
        for x, t in enumerate(rows):
            writer.writerow([x, *t])
    else:
        for x, t in enumerate(rows):
            record = {"rank": str(x), "k": k, "tuple": [str(v) for v in t]}
            out.write(json.dumps(record) + "\n")
    return 0


def grid_table(rows: int, cols: int) -> List[List[int]]:
    """``table[r][c] == psi((r, c))``: rows index n_1, columns index n_2."""
    return [[psi((r, c)) for c in range(cols)] for r in range(rows)]


def grid_svg(rows: int, cols: int, cell: int = 48) -> str:
    """SVG of the grid with arrows joining its cells in increasing rank."""
    table = grid_table(rows, cols)
    pad = cell
    width, height = cols * cell + 2 * pad, rows * cell + 2 * pad

    def centre(r, c):
        return pad + c * cell + cell // 2, pad + r * cell + cell // 2

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        '<defs><marker id="head" markerWidth="8" markerHeight="8" refX="7" refY="4" '
        'orient="auto"><path d="M0,0 L8,4 L0,8 z" fill="#555"/></marker></defs>',
    ]
    order = sorted((table[r][c], r, c) for r in range(rows) for c in range(cols))
    shrink = cell // 4
    for (_, r0, c0), (_, r1, c1) in zip(order, order[1:]):
        (x0, y0), (x1, y1) = centre(r0, c0), centre(r1, c1)
        dx, dy = x1 - x0, y1 - y0
        norm = max(abs(dx), abs(dy))
        sx, sy = dx * shrink // norm, dy * shrink // norm
        lines.append(
            f'<line x1="{x0 + sx}" y1="{y0 + sy}" x2="{x1 - sx}" y2="{y1 - sy}" '
            'stroke="#555" stroke-width="1.5" marker-end="url(#head)"/>')
    for rank, r, c in order:
        x, y = centre(r, c)
        lines.append(
            f'<text x="{x}" y="{y}" text-anchor="middle" dominant-baseline="central" '
            f'font-family="monospace" font-size="14">{rank}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_grid(args, out) -> int:
    table = grid_table(args.rows, args.cols)
    width = max(len(str(v)) for row in table for v in row)
    for row in table:
        out.write(" ".join(str(v).rjust(width) for v in row) + "\n")
    if args.svg:
        try:
            with open(args.svg, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(grid_svg(args.rows, args.cols))
        except OSError as exc:
            raise UsageError(f"cannot write {args.svg}: {exc}") from None
    return 0


def _corrupted_successor(m):
    # skips one element whenever the coordinate sum is 3
    nxt = mo.successor(m)
    return mo.successor(nxt) if sum(m) == 3 else nxt


def run_selftest(k_max: int, count: int, out, successor=mo.successor) -> int:
    """Check every property for k = 1..k_max over ranks 0..count-1.

    Prints one PASS/FAIL line per property and dimension and stops at the
    first failure, printing its counterexample.
    """
    for k in range(1, k_max + 1):
        cone, full = [], []
        m = mo.minimum(k)
        for _ in range(count):
            cone.append(m)
            full.append(mo.fold(m))
            m = successor(m)

        def oracle():
            for x, (c, f) in enumerate(zip(cone, full)):
                if phi(c) != x or unrank_phi(x, k) != c:
                    return f"cone element {c} sits at position {x} but phi={phi(c)}, unrank={unrank_phi(x, k)}"
                if psi(f) != x or unrank_psi(x, k) != f:
                    return f"full element {f} sits at position {x} but psi={psi(f)}, unrank={unrank_psi(x, k)}"

        def round_trip():
            for c, f in zip(cone, full):
                if mo.unfold(mo.fold(c)) != c or mo.fold(mo.unfold(f)) != f:
                    return f"fold/unfold round trip fails at {c}"
                if unrank_psi(psi(f), k) != f:
                    return f"unrank_psi(psi({f})) = {unrank_psi(psi(f), k)}"

        def coherence():
            for c in cone:
                step = phi(successor(c)) - phi(c)
                if step != 1:
                    return f"phi(successor({c})) - phi({c}) = {step}"

        def prefix():
            bound = unrank_phi(count - 1, k)[0]
            report = verify_prefix_bijection(monotone_spec(k, bound, successor), count)
            if not report.passed:
                v = report.first_violation
                return f"{v.kind} at rank {v.index}: {v.detail}"

        for name, check in [("oracle-equivalence", oracle), ("round-trip", round_trip),
                            ("successor-coherence", coherence), ("theorem8-prefix", prefix)]:
            problem = check()
            if problem:
                out.write(f"FAIL {name} k={k}: {problem}\n")
                return 1
            out.write(f"PASS {name} k={k}\n")
    return 0


def cmd_selftest(args, out) -> int:
    successor = _corrupted_successor if args.inject_fault else mo.successor
    return run_selftest(args.k_max, args.count, out, successor)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diagrank", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_dim(p):
        p.add_argument("-k", "--dim", type=_positive, required=True, help="tuple length k >= 1")
        return p

    p = with_dim(sub.add_parser("encode", help="print the rank of a k-tuple"))
    p.add_argument("coords", nargs="+")
    p.set_defaults(func=cmd_encode)

    p = with_dim(sub.add_parser("decode", help="print the k-tuple with a given rank"))
    p.add_argument("rank")
    p.set_defaults(func=cmd_decode)

    p = with_dim(sub.add_parser("enumerate", help="stream tuples in rank order"))
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--format", choices=("plain", "csv", "jsonl"), default="plain")
    p.add_argument("--space", choices=("full", "cone"), default="full",
                   help="full: all of N^k; cone: nonincreasing tuples only")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("grid", help="table of pair ranks, optionally as SVG")
    p.add_argument("--rows", type=_positive, required=True)
    p.add_argument("--cols", type=_positive, required=True)
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("selftest", help="check the bijection properties")
    p.add_argument("--k-max", type=_positive, default=3)
    p.add_argument("--count", type=_positive, default=1000)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except UsageError as exc:
        print(f"diagrank: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
