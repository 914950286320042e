"""Command-line surface.

Verbs:
  table <spec>                       print the exact character table
  codegrees <spec>                   per-character codegrees and the sets
  graph <spec> [--relative ...]      prime graph of a codegree set
  classify <spec>                    classification certificate
  verify [--manifest F] [--jobs N] [--json OUT]   run the whole pipeline

Specs use the manifest keyword syntax, e.g. "symmetric 4" or
"file data/sg480_1188.gens".  Exit codes: 0 all checks pass, 1 an oracle
or certificate failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chartable import character_table
from .classify import classify
from .codegree import cod_relative, cod_set, codegree, prime_graph
from .constructions import (
    SpecError,
    default_manifest,
    parse_spec_line,
    read_manifest,
)
from .groups import DEFAULT_ORDER_BOUND, GroupError, derived_subgroup, normal_subgroups
from .report import run_suite

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2


def _build(spec_text: str, bound: int):
    from .constructions import build_from_spec

    spec = parse_spec_line(spec_text)
    return spec, build_from_spec(spec, bound=bound)


def _cmd_table(args) -> int:
    _, G = _build(args.spec, args.bound)
    T = character_table(G)
    print(f"group: {G.name or '?'}   order {G.order}   classes {len(G.classes)}   "
          f"exponent {G.exponent()}")
    heads = [f"size {c.size}, rep order {c.rep_order}" for c in G.classes]
    print("columns: " + "; ".join(f"{i}: {h}" for i, h in enumerate(heads)))
    width = max(len(str(v)) for row in T.values for v in row) + 2
    for i, row in enumerate(T.values):
        cells = "".join(str(v).rjust(width) for v in row)
        print(f"X{i:<3}{cells}")
    return EXIT_OK


def _cmd_codegrees(args) -> int:
    _, G = _build(args.spec, args.bound)
    T = character_table(G)
    D = derived_subgroup(G)
    print(f"group: {G.name or '?'}   order {G.order}")
    for i in range(T.num_rows):
        print(f"  X{i}: degree {T.degrees[i]}, kernel order {T.kernels[i].order}, "
              f"codegree {codegree(T, i)}")
    print("cod(G) =", set(cod_set(T)))
    if D.order > 1:
        print("cod(G|G') =", set(cod_relative(T, D)))
    else:
        print("cod(G|G') = {} (abelian group)")
    return EXIT_OK


def _cmd_graph(args) -> int:
    _, G = _build(args.spec, args.bound)
    T = character_table(G)
    if args.relative is None:
        values = cod_set(T)
        label = "cod(G)"
    elif args.relative == "GPRIME":
        D = derived_subgroup(G)
        if D.order == 1:
            print("error: group is abelian, cod(G|G') is empty", file=sys.stderr)
            return EXIT_INPUT
        values = cod_relative(T, D)
        label = "cod(G|G')"
    elif args.relative.startswith("N="):
        order = int(args.relative[2:])
        matches = [n for n in normal_subgroups(G) if n.order == order]
        if len(matches) != 1:
            print(f"error: {len(matches)} normal subgroups of order {order}; "
                  "need exactly one", file=sys.stderr)
            return EXIT_INPUT
        values = cod_relative(T, matches[0])
        label = f"cod(G|N), |N|={order}"
    else:
        print("error: --relative expects GPRIME or N=<order>", file=sys.stderr)
        return EXIT_INPUT
    g = prime_graph(values)
    print(f"{label} = {set(values)}")
    print(f"vertices: {set(g.vertices) or '{}'}")
    print(f"edges: {[tuple(e) for e in g.edges]}")
    print(f"components ({g.component_count}): {[tuple(c) for c in g.components]}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    _, G = _build(args.spec, args.bound)
    cert = classify(G)
    print(f"group: {cert.group_name}   order {G.order}")
    print(f"cod(G|G') = {set(cert.cod_nonlinear) or '{}'}")
    print(f"star group: {cert.is_star}   branch: {cert.branch}")
    if cert.not_star_reason:
        extra = f" (pair {cert.noncoprime_pair})" if cert.noncoprime_pair else ""
        print(f"reason: {cert.not_star_reason}{extra}")
    if cert.frobenius_witness:
        p, k = cert.frobenius_witness
        print(f"witness: Frobenius kernel C_{p}^{k}, complement Q8")
    if cert.two_frobenius_witness:
        w = cert.two_frobenius_witness
        print(f"witness: 2-Frobenius |K|={w['K_order']} |H|={w['H_order']} "
              f"p={w['p']} |R|={w['R_order']} |R0|={w.get('R0_order')}")
    if cert.failure_reason:
        print(f"THEOREM A VIOLATION: {cert.failure_reason}")
        return EXIT_FAILURE
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.manifest:
        manifest = read_manifest(args.manifest)
    else:
        manifest = default_manifest()
    report = run_suite(manifest, jobs=args.jobs, bound=args.bound)
    for rec in report.records:
        status = "ok" if rec["ok"] else "FAIL"
        order = rec.get("order", "-")
        print(f"[{status}] {rec['name']} (order {order})"
              + (f"  error: {rec['error']}" if "error" in rec else ""))
    s = report.summary
    print(f"summary: {s['passed']}/{s['groups']} passed; "
          f"star groups: {len(s['star_groups'])}; "
          f"violations: {len(s['theorem_violations'])}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
        print(f"report written to {args.json}")
    return EXIT_OK if report.all_ok else EXIT_FAILURE


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codegrees",
        description="exact character codegrees, prime graphs, and "
                    "Frobenius-structure classification")
    parser.add_argument("--bound", type=int, default=DEFAULT_ORDER_BOUND,
                        help="group enumeration bound (default %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the exact character table")
    p.add_argument("spec")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("codegrees", help="codegrees and codegree sets")
    p.add_argument("spec")
    p.set_defaults(func=_cmd_codegrees)

    p = sub.add_parser("graph", help="prime graph of a codegree set")
    p.add_argument("spec")
    p.add_argument("--relative", default=None, metavar="GPRIME|N=<order>")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("classify", help="classification certificate")
    p.add_argument("spec")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--manifest", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", default=None, metavar="OUT")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, GroupError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
