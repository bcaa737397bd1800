"""
Command line interface: polynomial evaluation, enumeration streams,
crystal graph export, and the verification suites.
"""

from __future__ import annotations

import argparse
import json
import sys

from .crystal import crystal_f, kcrystal_f
from .kohnert import closure
from .polynomials import lascoux, lascoux_atom
from .skyline import enumerate_skyline
from .tableaux import enumerate_svt
from .verify import SUITE_NAMES, Bounds, run_suite


def _composition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad composition {text!r}") from exc
    if any(p < 0 for p in parts):
        raise argparse.ArgumentTypeError("composition parts must be >= 0")
    return parts


def cmd_lascoux(args) -> int:
    weight = args.weight
    if len(weight) > args.n:
        print(f"error: weight {weight} longer than n={args.n}", file=sys.stderr)
        return 2
    poly = (lascoux_atom if args.atom else lascoux)(weight, args.n)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "weight": list(weight),
                    "n": args.n,
                    "atom": bool(args.atom),
                    "polynomial": poly.to_text(),
                },
                sort_keys=True,
            )
        )
    else:
        print(poly.to_text())
    return 0


def cmd_enumerate(args) -> int:
    items: list[tuple[str, dict]]
    if args.kind in ("svt", "skyline") and args.n < 1:
        print("error: --n is required for svt and skyline", file=sys.stderr)
        return 2
    if args.kind == "svt":
        shape = tuple(sorted((p for p in args.shape if p), reverse=True))
        if tuple(p for p in args.shape if p) != shape:
            print("error: svt shape must be a partition", file=sys.stderr)
            return 2
        tableaux = enumerate_svt(args.n, shape)
        items = [
            (
                t.to_text(),
                {"tableau": t.to_text(), "weight": list(t.weight()), "excess": t.excess()},
            )
            for t in tableaux
        ]
    elif args.kind == "kohnert":
        diagrams = closure(args.shape)
        items = [
            (json.dumps(d.to_json_dict(), sort_keys=True), d.to_json_dict())
            for d in diagrams
        ]
    elif args.kind == "skyline":
        skylines = enumerate_skyline(args.shape, args.n)
        items = [
            (json.dumps(s.to_json_dict(), sort_keys=True), s.to_json_dict())
            for s in skylines
        ]
    else:
        print(f"error: unknown kind {args.kind!r}", file=sys.stderr)
        return 2
    if args.count:
        print(len(items))
        return 0
    for text, payload in items:
        print(json.dumps(payload, sort_keys=True) if args.format == "json" else text)
    return 0


def cmd_graph(args) -> int:
    shape = tuple(p for p in args.shape if p)
    if list(shape) != sorted(shape, reverse=True):
        print("error: graph shape must be a partition", file=sys.stderr)
        return 2
    tableaux = enumerate_svt(args.n, shape)
    lines = ["digraph crystal {", "  rankdir=TB;"]
    for t in tableaux:
        lines.append(f'  "{t.to_text()}";')
    edges = []
    for t in tableaux:
        for i in range(1, args.n):
            down = crystal_f(t, i)
            if down is not None:
                edges.append((t.to_text(), i, down.to_text(), False))
            if args.with_k_ops:
                drop = kcrystal_f(t, i)
                if drop is not None:
                    edges.append((t.to_text(), i, drop.to_text(), True))
    for src, i, dst, dashed in sorted(edges):
        style = ", style=dashed" if dashed else ""
        lines.append(f'  "{src}" -> "{dst}" [label="{i}"{style}];')
    lines.append("}")
    print("\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    bounds = Bounds(
        max_n=args.max_n,
        max_side=args.max_side,
        max_cells=args.max_cells,
        shape=tuple(args.shape) if args.shape else None,
        n=args.n,
    )
    failures = 0
    for result in run_suite(args.suite, bounds, args.jobs):
        line = (
            result.to_json(args.timings)
            if args.format == "json"
            else result.to_text(args.timings)
        )
        print(line)
        failures += result.status == "fail"
    if failures:
        print(f"{failures} case(s) failed", file=sys.stderr)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kcrystals",
        description="Exact combinatorics of K-crystals on set-valued tableaux",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lascoux", help="print a Lascoux polynomial or atom")
    p.add_argument("--weight", type=_composition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--atom", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_lascoux)

    p = sub.add_parser("enumerate", help="stream tableaux, diagrams, or skylines")
    p.add_argument("kind", choices=("svt", "kohnert", "skyline"))
    p.add_argument("--shape", type=_composition, required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--count", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("graph", help="crystal graph as DOT")
    p.add_argument("--shape", type=_composition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--with-k-ops", action="store_true")
    p.add_argument("--format", choices=("dot",), default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-side", type=int, default=3)
    p.add_argument("--max-cells", type=int, default=6)
    p.add_argument("--shape", type=_composition, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
