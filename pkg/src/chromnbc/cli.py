"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 capacity
error, 4 precondition violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import chromatic as ch
from . import matroid as mt
from .broken_circuits import (
    BrokenCircuitSet,
    Labeling,
    WeightAssignment,
    broken_circuits,
    kset_from_edge_sets,
)
from .corpus import DEFAULT_SEED
from .digraph import digraph_chromatic_sum
from .errors import CapacityError, MatroidAxiomError, ParseError, PreconditionError
from .formats import (
    detect_kind,
    parse_digraph,
    parse_graph,
    parse_kset,
    parse_labeling,
    parse_matroid,
    parse_matroid_kset,
    parse_matroid_labels,
    parse_weights,
)
from .symfunc import psum_specialize
from .verify import Check, RunReport, verify_corpus, verify_digraphs, verify_graphs, verify_matroids

EXIT_FAIL, EXIT_PARSE, EXIT_CAPACITY, EXIT_PRECONDITION = 1, 2, 3, 4


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _weights(kset: BrokenCircuitSet, path: str | None) -> WeightAssignment:
    if path is None:
        return WeightAssignment.constant(kset, 1)
    given = parse_weights(_read(path))
    want = set(range(1, len(kset) + 1))
    if set(given) != want:
        raise PreconditionError(
            f"weights file must give indices 1..{len(kset)} exactly, got {sorted(given)}"
        )
    return WeightAssignment(kset, tuple(given[i] for i in sorted(given)))


def _graph_inputs(args, g):
    labeling = parse_labeling(_read(args.labels), g) if args.labels else Labeling.by_position(g)
    if args.kset:
        kset = kset_from_edge_sets(g, labeling, parse_kset(_read(args.kset), g))
    else:
        kset = broken_circuits(g, labeling)
    return labeling, kset


def _print_poly(label: str, p) -> None:
    prefix = f"{label}: " if label else ""
    print(prefix + p.coefficient_string())
    print(prefix + str(p))


def cmd_chrompoly(args) -> int:
    g = parse_graph(_read(args.graph))
    if args.method == "subset":
        poly = ch.chromatic_polynomial_subset(g)
    else:
        labeling, kset = _graph_inputs(args, g)
        if args.method == "nbc":
            poly = ch.chromatic_polynomial_nbc(g, labeling)
        elif args.method == "kfree":
            poly = ch.chromatic_polynomial_kfree(g, labeling, kset)
        else:
            poly = ch.chromatic_polynomial_weighted(g, labeling, kset, _weights(kset, args.weights))
    _print_poly("", poly)
    if args.q is not None:
        print(f"value at q={args.q}: {poly(args.q)}")
    return 0


def cmd_csf(args) -> int:
    g = parse_graph(_read(args.graph))
    if args.method == "subset":
        vec = ch.csf_subset(g)
    else:
        labeling, kset = _graph_inputs(args, g)
        if args.method == "nbc":
            vec = ch.csf_nbc(g, labeling)
        elif args.method == "kfree":
            vec = ch.csf_kfree(g, labeling, kset)
        else:
            vec = ch.csf_weighted(g, labeling, kset, _weights(kset, args.weights))
    for line in vec.lines():
        print(line)
    if args.q is not None:
        print(f"value at q={args.q}: {psum_specialize(vec, args.q)}")
    return 0


def cmd_charpoly(args) -> int:
    path = Path(args.matroid)
    m = parse_matroid(_read(args.matroid), path.parent)
    chi, chi_t = mt.characteristic_polynomial(m)
    if args.method != "moebius":
        if args.method == "subset":
            chi_t = mt.charpol_subset(m)
        else:
            if args.labels:
                labels = parse_matroid_labels(_read(args.labels), m)
            else:
                labels = {e: i for i, e in enumerate(m.ground, 1)}
            if args.kset:
                kset = mt.matroid_kset(m, labels, parse_matroid_kset(_read(args.kset), m))
            else:
                kset = mt.matroid_broken_circuits(m, labels)
            if args.method == "nbc":
                chi_t = mt.charpol_nbc(m, labels)
            elif args.method == "whitney":
                chi_t = mt.charpol_whitney(m, labels)
            elif args.method == "kfree":
                chi_t = mt.charpol_kfree(m, labels, kset)
            else:
                chi_t = mt.charpol_weighted(m, labels, kset, _weights(kset, args.weights))
    _print_poly("chi", chi)
    _print_poly("chi_tilde", chi_t)
    if args.q is not None:
        print(f"chi at q={args.q}: {chi(args.q)}")
        print(f"chi_tilde at q={args.q}: {chi_t(args.q)}")
    return 0


def cmd_digraph(args) -> int:
    d = parse_digraph(_read(args.digraph))
    poly = digraph_chromatic_sum(d)
    _print_poly("", poly)
    if args.q is not None:
        print(f"value at q={args.q}: {poly(args.q)}")
    return 0


def cmd_verify(args) -> int:
    report = RunReport(args.seed)
    if args.target is None or args.builtin_corpus:
        report = verify_corpus(args.seed)
    else:
        text = _read(args.target)
        kind = detect_kind(text)
        name = Path(args.target).name
        if kind == "graph":
            verify_graphs(report, [(name, parse_graph(text))])
        elif kind == "digraph":
            verify_digraphs(report, [(name, parse_digraph(text))])
        else:
            try:
                m = parse_matroid(text, Path(args.target).parent)
            except MatroidAxiomError as exc:
                report.checks.append(Check("matroid.axioms", name, False, str(exc)))
            else:
                verify_matroids(report, [(name, m)])
    for line in report.lines():
        print(line)
    return 0 if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="chromnbc",
        description="Chromatic polynomials, chromatic symmetric functions and matroid "
        "characteristic polynomials via broken-circuit subset sums.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def graph_opts(sp, methods):
        sp.add_argument("--method", choices=methods, default=methods[0])
        sp.add_argument("--labels", metavar="FILE", help="labeling file (default: 1, 2, ... in edge order)")
        sp.add_argument("--kset", metavar="FILE", help="broken circuits, one per line (default: all)")
        sp.add_argument("--weights", metavar="FILE", help="'K-index: integer' lines (default: all 1)")
        sp.add_argument("--q", type=int, metavar="N", help="also evaluate at N")

    sp = sub.add_parser("chrompoly", help="chromatic polynomial of a graph")
    sp.add_argument("graph")
    graph_opts(sp, ["subset", "nbc", "kfree", "weighted"])
    sp.set_defaults(func=cmd_chrompoly)

    sp = sub.add_parser("csf", help="chromatic symmetric function in the power-sum basis")
    sp.add_argument("graph")
    graph_opts(sp, ["subset", "nbc", "kfree", "weighted"])
    sp.set_defaults(func=cmd_csf)

    sp = sub.add_parser("charpoly", help="characteristic polynomial of a matroid")
    sp.add_argument("matroid")
    graph_opts(sp, ["moebius", "subset", "nbc", "kfree", "weighted", "whitney"])
    sp.set_defaults(func=cmd_charpoly)

    sp = sub.add_parser("digraph", help="2-path-free sum of a transitive loopless digraph")
    sp.add_argument("digraph")
    sp.add_argument("--q", type=int, metavar="N", help="also evaluate at N")
    sp.set_defaults(func=cmd_digraph)

    sp = sub.add_parser("verify", help="run the identity-verification suite")
    sp.add_argument("target", nargs="?", help="graph, digraph or matroid file")
    sp.add_argument("--builtin-corpus", action="store_true")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
