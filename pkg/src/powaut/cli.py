"""Command line entry point.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 a size cap was hit.
``POWAUT_CAP`` overrides the default enumeration cap of ``verify``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .automorphisms import aut_directed, aut_undirected, conjecture_zn, structure
from .group import GroupError, GroupTooLarge
from .groupspec import SpecError, parse_group
from .oracle import DEFAULT_AUT_CAP, CapExceeded, verify_group
from .perm import ClosureTooLarge, format_cycles
from .pgroup import PGTooLarge
from .power_graph import to_dot

SCHEMA = 1

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _env_cap(default: int) -> int:
    raw = os.environ.get("POWAUT_CAP")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"powaut: POWAUT_CAP must be an integer, got {raw!r}")


def _dump(obj: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **obj}, indent=2))


def cmd_info(G, args) -> int:
    hist = G.order_histogram()
    if args.json:
        _dump({"group": G.name, "order": G.size,
               "element_orders": {str(k): v for k, v in hist.items()}})
    else:
        print(f"{G.name}: order {G.size}")
        for o, count in hist.items():
            print(f"  order {o}: {count} element{'s' if count != 1 else ''}")
    return EXIT_OK


def cmd_graph(G, args) -> int:
    S = structure(G)
    D = S.digraph if args.command == "digraph" else S.graph
    if args.json:
        key = "arcs" if args.command == "digraph" else "edges"
        pairs = D.arcs() if args.command == "digraph" else D.edges()
        _dump({"group": G.name, "n": G.size,
               "labels": [G.label(x) for x in range(G.size)],
               key: [list(p) for p in sorted(pairs)]})
    else:
        sys.stdout.write(to_dot(D))
    return EXIT_OK


def cmd_subgroups(G, args) -> int:
    T = structure(G).table
    if args.json:
        _dump({"group": G.name, **T.to_json()})
        return EXIT_OK
    print(f"{G.name}: {T.k} cyclic subgroups")
    for c in T.subgroups:
        gens = ", ".join(G.label(g) for g in c.generators)
        print(f"  C{c.id}: order {c.order}, generators [{gens}]")
    for i, j in T.hasse:
        print(f"  C{i} < C{j}")
    return EXIT_OK


def cmd_classes(G, args) -> int:
    classes = structure(G).classes
    if args.json:
        _dump({"group": G.name, "classes": [c.to_json() for c in classes]})
        return EXIT_OK
    for c in classes:
        params = f" (p={c.p}, r={c.r}, s={c.s})" if c.params else ""
        members = ", ".join(G.label(x) for x in c.elements)
        print(f"  u{c.id}: type {c.kind.value}{params}, size {len(c.elements)}: {members}")
    return EXIT_OK


def cmd_pgroup(G, args) -> int:
    pg = structure(G).pg
    if args.json:
        _dump({"group": G.name, "pg_order": str(pg.order),
               "generators": [list(g) for g in pg.generators]})
    else:
        print(f"|P(G)| = {pg.order}")
        for g in pg.generators:
            print(f"  {format_cycles(g)}")
    return EXIT_OK


def cmd_aut(G, args) -> int:
    desc = aut_undirected(G) if args.undirected else aut_directed(G)
    if args.json:
        _dump({"group": G.name, **desc.to_json()})
    else:
        print(f"{desc.variant} order {desc.order} = {desc.factored_shape}")
        print(f"  {len(desc.generators)} generators")
    return EXIT_OK


def cmd_verify(G, args) -> int:
    cap = args.cap if args.cap is not None else _env_cap(DEFAULT_AUT_CAP)
    report = verify_group(G, cap=cap, strict=args.exhaustive)
    if args.json:
        _dump(report.to_json())
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_conjecture(args) -> int:
    if args.n < 2:
        print("powaut: conjecture needs n >= 2", file=sys.stderr)
        return EXIT_INPUT
    rep = conjecture_zn(args.n, brute=args.brute)
    if args.json:
        _dump(rep.to_json())
    else:
        print(f"n={rep.n}: conjecture {rep.conjecture_order}, computed {rep.computed_order}"
              + (f", search {rep.brute_order}" if rep.brute_order is not None else "")
              + f" -> {rep.verdict}")
    return EXIT_OK if rep.consistent else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="powaut",
                                 description="Automorphism groups of power (di)graphs of finite groups.")
    sub = ap.add_subparsers(dest="command", required=True)

    def group_cmd(name, help, func, dot=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("spec", help="group spec, e.g. Z:6, D:4, Q:2, E:2^3, prod(Z:2,Z:4)")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true")
        if dot:
            fmt.add_argument("--dot", action="store_true", help="DOT output (default)")
        p.set_defaults(func=func)
        return p

    group_cmd("info", "order and element-order histogram", cmd_info)
    for name in ("digraph", "graph"):
        group_cmd(name, f"emit the power {name}", cmd_graph, dot=True)
    group_cmd("subgroups", "cyclic subgroups and inclusion", cmd_subgroups)
    group_cmd("classes", "closed-neighbourhood classes with types", cmd_classes)
    group_cmd("pgroup", "order and generators of P(G)", cmd_pgroup)
    p = group_cmd("aut", "automorphism group description", cmd_aut)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--directed", action="store_true")
    mode.add_argument("--undirected", action="store_true")
    p = group_cmd("verify", "check against a brute-force graph search", cmd_verify)
    p.add_argument("--cap", type=int, default=None,
                   help="enumerate every automorphism up to this many")
    p.add_argument("--exhaustive", action="store_true",
                   help="fail with exit 3 instead of checking strong generators above the cap")

    p = sub.add_parser("conjecture", help="test the Z_n conjecture")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--brute", action=argparse.BooleanOptionalAction, default=None,
                   help="cross-check with graph search (default: n <= 14)")
    p.set_defaults(func=None)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "conjecture":
            return cmd_conjecture(args)
        G = parse_group(args.spec)
        return args.func(G, args)
    except (GroupTooLarge, CapExceeded, PGTooLarge, ClosureTooLarge) as exc:
        print(f"powaut: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (SpecError, GroupError) as exc:
        print(f"powaut: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
