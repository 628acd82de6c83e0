"""Command-line entry point.

Subcommands: solve, verify, reduce (ham-to-trvb, insert-deg2, contract),
convert (trvb-to-hst, hst-to-trvb), classify, gadget (list, verify), score,
export-dot.  Yes/no answers land in the exit status (0 yes, 1 no) for
scripting; parse errors exit 2 with a diagnostic, guard violations exit 3.
Output is deterministic: identical inputs and flags give identical bytes.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .classify import classify as classify_spec
from .core import (DegreeSet, GuardExceeded, InvalidGraph, Multigraph,
                   VariantSpec, rotation_is_planar, validate)
from .gadgets import CATALOG, behavior, builtin, equivalent_to_unbreakable
from .hypergraph import TrivialNo, Hypergraph, hst_to_trvb, trvb_to_hst
from .reductions import (contract_unbreakable_adjacent, hamiltonicity_to_trvb,
                         insert_unbreakable_deg2, preprocess_to_degree2)
from .score import bundles_at, score as graph_score
from .solver import PruningOptions, solve, solve_brute, verify

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_GUARD = 3


def _write_output(text: str, out_path: str | None) -> None:
    sys.stdout.write(text)
    if out_path:
        Path(out_path).write_text(text)


def _cmd_solve(args: argparse.Namespace) -> int:
    g = io.load_instance(args.instance)
    if args.oracle:
        cert = solve_brute(g)
    else:
        prunings = PruningOptions(budget=not args.no_budget_pruning,
                                  adjacency=not args.no_adjacency_pruning,
                                  isolated_cycle=not args.no_cycle_pruning)
        cert = solve(g, prunings)
    _write_output(io.dumps(io.certificate_to_dict(cert is not None, cert)), args.output)
    return EXIT_YES if cert is not None else EXIT_NO


def _cmd_verify(args: argparse.Namespace) -> int:
    g = io.load_instance(args.instance)
    cert = io.load_certificate(args.certificate)
    result = verify(g, cert)
    if result.ok:
        sys.stdout.write("valid\n")
        return EXIT_YES
    sys.stdout.write(f"invalid: {result.reason}\n")
    return EXIT_NO


def _trivial_instance(answer: bool) -> Multigraph:
    if answer:  # two-vertex tree: a "yes" instance
        return Multigraph(frozenset(), frozenset({0, 1}), ((0, 1),),
                          {0: ((0, 0),), 1: ((0, 1),)})
    # unbreakable triangle: a "no" instance
    return Multigraph(frozenset(), frozenset({0, 1, 2}),
                      ((0, 1), (1, 2), (2, 0)),
                      {0: ((0, 0), (2, 1)), 1: ((0, 1), (1, 0)), 2: ((1, 1), (2, 0))})


def _cmd_reduce(args: argparse.Namespace) -> int:
    if args.reduction == "ham-to-trvb":
        d = io.load_directed(args.instance)
        outcome = preprocess_to_degree2(d)
        if outcome.decided is not None:
            sys.stderr.write(f"input decided during preprocessing: "
                             f"{'yes' if outcome.decided else 'no'}; emitting an "
                             f"equivalent trivial instance\n")
            out = _trivial_instance(outcome.decided)
        else:
            out = hamiltonicity_to_trvb(outcome.reduced, args.k)
        _write_output(io.dumps(io.instance_to_dict(out)), args.output)
        return EXIT_YES
    g = io.load_instance(args.instance)
    if args.reduction == "insert-deg2":
        out = insert_unbreakable_deg2(g, args.per_edge)
    else:
        out = contract_unbreakable_adjacent(g)
    _write_output(io.dumps(io.instance_to_dict(out)), args.output)
    return EXIT_YES


def _cmd_convert(args: argparse.Namespace) -> int:
    if args.conversion == "trvb-to-hst":
        g = io.load_instance(args.instance)
        result = trvb_to_hst(g)
        if isinstance(result, TrivialNo):
            sys.stderr.write(f"instance is a trivial no ({result.reason}); emitting "
                             f"a canonical no hypergraph\n")
            result = Hypergraph(frozenset({0, 1}), ())
        _write_output(io.dumps(io.hypergraph_to_dict(result)), args.output)
        return EXIT_YES
    h = io.load_hypergraph(args.instance)
    _write_output(io.dumps(io.instance_to_dict(hst_to_trvb(h))), args.output)
    return EXIT_YES


def _cmd_classify(args: argparse.Namespace) -> int:
    spec = VariantSpec(DegreeSet.parse(args.B), DegreeSet.parse(args.U),
                       planar=args.planar, simple=args.simple)
    result = classify_spec(spec)
    sys.stdout.write(f"{result.complexity.value}\n")
    sys.stdout.write(f"citation: {result.citation}\n")
    return EXIT_YES


def _cmd_gadget(args: argparse.Namespace) -> int:
    if args.action == "list":
        for name in sorted(CATALOG):
            entry = CATALOG[name]
            params = f" ({', '.join(entry.params)})" if entry.params else ""
            flag = " [reconstructed]" if entry.reconstructed else ""
            sys.stdout.write(f"{name}{params}: {entry.description}{flag}\n")
        return EXIT_YES
    gd = builtin(args.name, k=args.k, a=args.a)
    beh = behavior(gd)
    ok = equivalent_to_unbreakable(gd, len(gd.ports)) if gd.target_kind == "unbreakable" else False
    sys.stdout.write(f"gadget: {gd.name}\n")
    sys.stdout.write(f"ports: {len(gd.ports)}\n")
    sys.stdout.write(f"planar rotation: {'yes' if gd.planar else 'no'}\n")
    sys.stdout.write(f"admissible partitions: {len(beh.admissible)}\n")
    total = sum(beh.solution_counts.values())
    sys.stdout.write(f"realizing break-sets: {total}\n")
    verdict = (f"certified: behaves like an {gd.target_kind} degree-{gd.target_degree} vertex"
               if ok else "NOT equivalent to the target vertex")
    sys.stdout.write(verdict + "\n")
    return EXIT_YES if ok else EXIT_NO


def _cmd_score(args: argparse.Namespace) -> int:
    g = io.load_instance(args.instance)
    if g.rotation is None:
        sys.stderr.write("error: scoring needs a rotation system\n")
        return EXIT_ERROR
    if not rotation_is_planar(g):
        sys.stderr.write("warning: rotation fails the Euler planarity check; "
                         "scores are computable but not planarity-meaningful\n")
    total = 0
    for v in sorted(g.vertices):
        bs = bundles_at(g, v)
        if bs:
            sizes = [b.size for b in bs]
            vertex_score = sum(b.score for b in bs)
            total += vertex_score
            sys.stdout.write(f"vertex {v}: bundle sizes {sizes}, score {vertex_score}\n")
    sys.stdout.write(f"total score: {graph_score(g)}\n")
    return EXIT_YES


def _cmd_export_dot(args: argparse.Namespace) -> int:
    g = io.load_instance(args.instance)
    _write_output(io.export_dot(g), args.output)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trvb",
        description="Tree-residue vertex-breaking: solve, verify, reduce, convert, "
                    "classify, certify gadgets, score, and export instances.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance; exit 0 yes, 1 no")
    p.add_argument("instance")
    p.add_argument("-o", "--output", help="also write the certificate JSON here")
    p.add_argument("--oracle", action="store_true",
                   help="unpruned subset enumeration, for differential testing")
    p.add_argument("--no-budget-pruning", action="store_true")
    p.add_argument("--no-adjacency-pruning", action="store_true")
    p.add_argument("--no-cycle-pruning", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a certificate; exit 0 valid, 1 invalid")
    p.add_argument("instance")
    p.add_argument("certificate")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reduce", help="answer-preserving instance rewrites")
    p.add_argument("reduction", choices=["ham-to-trvb", "insert-deg2", "contract"])
    p.add_argument("instance")
    p.add_argument("-o", "--output")
    p.add_argument("--k", type=int, default=4,
                   help="breakable degree for ham-to-trvb (default 4)")
    p.add_argument("--per-edge", type=int, default=2,
                   help="subdivision vertices per edge for insert-deg2 (default 2)")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("convert", help="conversions to and from hypergraph spanning tree")
    p.add_argument("conversion", choices=["trvb-to-hst", "hst-to-trvb"])
    p.add_argument("instance")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("classify", help="complexity class of a variant")
    p.add_argument("--B", required=True,
                   help='allowed breakable degrees, e.g. "4,5", "6+", "all", "none"')
    p.add_argument("--U", required=True, help="allowed unbreakable degrees")
    p.add_argument("--planar", action="store_true")
    p.add_argument("--simple", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("gadget", help="list or certify builtin gadgets")
    p.add_argument("action", choices=["list", "verify"])
    p.add_argument("name", nargs="?")
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("score", help="per-vertex bundles and total score")
    p.add_argument("instance")
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("export-dot", help="Graphviz export")
    p.add_argument("instance")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gadget" and args.action == "verify" and not args.name:
        parser.error("gadget verify needs a gadget name")
    try:
        return args.func(args)
    except GuardExceeded as exc:
        sys.stderr.write(f"guard violation: {exc}\n")
        return EXIT_GUARD
    except (io.ParseError, InvalidGraph, FileNotFoundError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
