"""The ten acceptance criteria, each exact over integers.

Every test appends one ``PASS``/``FAIL`` line to the acceptance summary that
pytest prints after the run. Run ``python tests/test_acceptance.py`` for the
same lines without pytest.
"""

from __future__ import annotations

import contextlib
import io
import random
import sys
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from conftest import ACCEPTANCE_LINES, DATA  # noqa: E402

from chromnbc import chromatic as ch  # noqa: E402
from chromnbc import matroid as mt  # noqa: E402
from chromnbc import verify as vf  # noqa: E402
from chromnbc.broken_circuits import Labeling, broken_circuits  # noqa: E402
from chromnbc.cli import main  # noqa: E402
from chromnbc.corpus import (  # noqa: E402
    DEFAULT_SEED,
    digraph_corpus,
    graph_corpus,
    loop_matroids,
    matroid_corpus,
    random_labels,
    random_subkset,
    weight_assignments,
)
from chromnbc.digraph import chain_digraph, digraph_chromatic_sum, underlying_graph  # noqa: E402
from chromnbc.graph import Graph, complete_graph, conn  # noqa: E402
from chromnbc.symfunc import IntPolynomial, PowerSumVector, X, psum_expand_truncated, psum_specialize  # noqa: E402

GRAPHS = graph_corpus()
MATROIDS = matroid_corpus()


def _record(number: int, title: str, failures: list[str], instances: int) -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"{status} criterion {number}: {title} ({instances - len(failures)}/{instances})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    for f in failures[:5]:
        print("    " + f)
    assert not failures, failures[:5]


def _brute_colorings(g: Graph, q: int) -> int:
    idx = {v: i for i, v in enumerate(g.vertices)}
    return sum(
        all(f[idx[u]] != f[idx[v]] for u, v in g.edges)
        for f in product(range(q), repeat=g.num_vertices)
    )


def test_criterion_01_coloring_oracle():
    k4_edges = complete_graph(4).edges
    failures, n = [], 0
    for mask in range(1 << 6):
        g = Graph("1234", [e for i, e in enumerate(k4_edges) if mask >> i & 1])
        chi = ch.chromatic_polynomial_subset(g)
        for q in range(5):
            n += 1
            if chi(q) != ch.count_proper_colorings(g, q) or chi(q) != _brute_colorings(g, q):
                failures.append(f"mask {mask}, q={q}")
    assert n == 320
    _record(1, "subset chromatic polynomial matches coloring counts on all K4 subgraphs", failures, n)


def _labelings(g: Graph, rng: random.Random) -> list[Labeling]:
    return [Labeling(g, random_labels(g.num_edges, rng, k)) for k in ("injective", "ties", "signed")]


def test_criterion_02_four_chromatic_formulas():
    failures, n = [], 0
    for name, g in GRAPHS:
        rng = random.Random(f"{DEFAULT_SEED}:chrom:{name}")
        want = ch.chromatic_polynomial_subset(g)
        for lab in _labelings(g, rng):
            full = broken_circuits(g, lab)
            for kset in (full, random_subkset(full, rng)):
                n += 1
                got = [ch.chromatic_polynomial_kfree(g, lab, kset), ch.chromatic_polynomial_nbc(g, lab)]
                got += [ch.chromatic_polynomial_weighted(g, lab, kset, w) for w in weight_assignments(kset, rng)]
                if len(got) != 14 or any(p != want for p in got):
                    failures.append(f"{name} labels {lab.labels}")
    _record(2, "subset = K-free = NBC = weighted chromatic polynomial", failures, n)


def test_criterion_03_csf_identities():
    failures, n = [], 0
    for name, g in GRAPHS:
        rng = random.Random(f"{DEFAULT_SEED}:csf:{name}")
        want = ch.csf_subset(g)
        n += 1
        for lab in _labelings(g, rng):
            full = broken_circuits(g, lab)
            kset = random_subkset(full, rng)
            others = [ch.csf_nbc(g, lab), ch.csf_kfree(g, lab, full), ch.csf_kfree(g, lab, kset)]
            others += [ch.csf_weighted(g, lab, kset, w) for w in weight_assignments(kset, rng)]
            if any(v != want for v in others):
                failures.append(f"{name}: formulas disagree under labels {lab.labels}")
        if g.num_vertices <= 4 and psum_expand_truncated(want, 3) != ch.csf_oracle_truncated(g, 3):
            failures.append(f"{name}: truncated expansion differs from the coloring oracle")
        for q in range(5):
            if q**g.num_vertices <= 10**5 and psum_specialize(want, q) != ch.count_proper_colorings(g, q):
                failures.append(f"{name}: specialization at q={q}")
    _record(3, "chromatic symmetric function identities", failures, n)


def test_criterion_04_triangle():
    g = complete_graph(3)
    lab = Labeling.by_position(g)
    kset = broken_circuits(g, lab)
    chi = X**3 - 3 * X**2 + 2 * X
    csf = PowerSumVector({(1, 1, 1): 1, (2, 1): -3, (3,): 2})
    polys = [
        ch.chromatic_polynomial_subset(g),
        ch.chromatic_polynomial_nbc(g, lab),
        ch.chromatic_polynomial_whitney(g, lab),
        ch.chromatic_polynomial_kfree(g, lab, kset),
        *(ch.chromatic_polynomial_weighted(g, lab, kset, w) for w in weight_assignments(kset, random.Random(3))),
        digraph_chromatic_sum(chain_digraph(3)),
        mt.characteristic_polynomial(mt.graphical_matroid(g))[0] * X,
    ]
    vecs = [ch.csf_subset(g), ch.csf_nbc(g, lab), ch.csf_kfree(g, lab, kset)]
    vecs += [ch.csf_weighted(g, lab, kset, w) for w in weight_assignments(kset, random.Random(4))]
    failures = [f"polynomial route {i}: {p}" for i, p in enumerate(polys) if p != chi]
    failures += [f"CSF route {i}" for i, v in enumerate(vecs) if v != csf]
    assert chi == IntPolynomial([0, 2, -3, 1])
    _record(4, "triangle ground truth by every method", failures, len(polys) + len(vecs))


def test_criterion_05_digraph_two_path_free_sum():
    digraphs = digraph_corpus(DEFAULT_SEED, 20)
    assert len(digraphs) == 21 and digraphs[0][0] == "chain3"
    failures = []
    for name, d in digraphs:
        if digraph_chromatic_sum(d) != ch.chromatic_polynomial_subset(underlying_graph(d)):
            failures.append(name)
    _record(5, "2-path-free arc sum equals chromatic polynomial", failures, len(digraphs))


def test_criterion_06_matroid_formulas():
    failures = []
    for name, m in MATROIDS:
        rng = random.Random(f"{DEFAULT_SEED}:charpol:{name}")
        _, chi_t = mt.characteristic_polynomial(m)
        inj = dict(zip(m.ground, random_labels(m.size, rng, "injective")))
        ties = dict(zip(m.ground, random_labels(m.size, rng, "ties")))
        got = [mt.charpol_subset(m), mt.charpol_whitney(m, inj)]
        for labels in (inj, ties):
            full = mt.matroid_broken_circuits(m, labels)
            sub = random_subkset(full, rng)
            got += [mt.charpol_nbc(m, labels), mt.charpol_kfree(m, labels, full), mt.charpol_kfree(m, labels, sub)]
            got += [mt.charpol_weighted(m, labels, sub, w) for w in weight_assignments(sub, rng)]
        if any(p != chi_t for p in got):
            failures.append(name)
    for name, m in loop_matroids().items():
        if mt.characteristic_polynomial(m)[1] != 0:
            failures.append(f"{name}: chi_tilde is not zero")
    _record(6, "five characteristic-polynomial routes agree with the Möbius definition", failures, len(MATROIDS) + 2)


def test_criterion_07_graphical_bridge():
    failures = []
    for name, g in GRAPHS:
        chi_m, _ = mt.characteristic_polynomial(mt.graphical_matroid(g))
        if chi_m * X ** conn(g) != ch.chromatic_polynomial_subset(g):
            failures.append(name)
    _record(7, "x^conn times graphical characteristic polynomial equals chromatic polynomial", failures, len(GRAPHS))


def _independent_moebius(order: list[frozenset]) -> dict:
    """mu from the recursion over an explicit poset of frozensets."""
    mu = {}
    for x in order:
        for y in sorted((y for y in order if x <= y), key=len):
            mu[x, y] = 1 if x == y else -sum(mu[x, z] for z in order if x <= z < y)
    return mu


def test_criterion_08_moebius_identities():
    failures = []
    for name, m in MATROIDS:
        lat = mt.flats(m)
        fl = lat.flats()
        mu = _independent_moebius(fl)
        table = mt.moebius_table(lat)
        if any(table[m.mask(x), m.mask(y)] != v for (x, y), v in mu.items()):
            failures.append(f"{name}: library table differs from the recursion")
            continue
        for x, y in mu:
            between = [z for z in fl if x <= z <= y]
            want = int(x == y)
            if sum(mu[x, z] for z in between) != want or sum(mu[z, y] for z in between) != want:
                failures.append(f"{name}: double sum on [{set(x)}, {set(y)}]")
        rng = random.Random(f"{DEFAULT_SEED}:moebius:{name}")
        for _ in range(5):
            beta = {f: rng.randint(-50, 50) for f in fl}
            up = {h: sum(beta[f] for f in fl if f <= h) for h in fl}
            if any(sum(mu[h, g] * up[h] for h in fl if h <= g) != beta[g] for g in fl):
                failures.append(f"{name}: inversion round-trip")
    _record(8, "Möbius double sums and inversion on every flat lattice", failures, len(MATROIDS))


STRUCTURAL_CHECKS = {
    "graph": [
        ("coloring.proper_iff_no_monochromatic_edge", vf.coloring_proper_iff_no_monochromatic_edge),
        ("coloring.circuit_never_one_edge_short", vf.coloring_circuit_never_one_edge_short),
        ("coloring.monochromatic_count", vf.coloring_monochromatic_count),
        ("bc.cancellation", vf.bc_cancellation),
        ("bc.nonempty", vf.bc_nonempty),
        ("graph.forest_rank", vf.graph_forest_rank),
    ],
    "matroid": [
        ("matroid.flat_cancellation", vf.matroid_flat_cancellation),
        ("matroid.rank", vf.matroid_rank),
        ("matroid.circuit_containment", vf.matroid_circuit_containment),
        ("matroid.basis_extension", vf.matroid_basis_extension),
        ("matroid.closure_props", vf.matroid_closure_props),
    ],
}


def test_criterion_09_structural_identities():
    report = vf.RunReport(DEFAULT_SEED)
    vf._run(report, STRUCTURAL_CHECKS["graph"], GRAPHS)
    vf._run(report, STRUCTURAL_CHECKS["matroid"], MATROIDS)
    # Independent spot check: monochromatic-edge counts equal q^conn.
    k3 = complete_graph(3)
    extra = []
    for mask in range(8):
        for q in range(4):
            got = ch.count_colorings_containing(k3, k3.from_mask(mask), q)
            if got != q ** vf.mask_conn(k3, mask):
                extra.append(f"K3 mask {mask} q={q}")
    failures = [f"{c.name} {c.instance}: {c.witness}" for c in report.failures] + extra
    skipped = [c for c in report.checks if c.skipped]
    assert not skipped, "every corpus instance should run exhaustively"
    _record(9, "coloring, broken-circuit, rank, closure and extension identities", failures, len(report.checks) + 32)


CLI_GOLDEN = [
    (["chrompoly", "triangle.graph"], 0, "0 2 -3 1\n2*x - 3*x^2 + x^3\n"),
    (["chrompoly", "edgeless3.graph"], 0, "0 0 0 1\nx^3\n"),
    (["chrompoly", "triangle.graph", "--method", "nbc", "--labels", "triangle.labels"], 0,
     "0 2 -3 1\n2*x - 3*x^2 + x^3\n"),
    (["csf", "edge.graph"], 0, "[1,1]: 1\n[2]: -1\n"),
    (["csf", "edgeless2.graph"], 0, "[1,1]: 1\n"),
    (["csf", "triangle.graph"], 0, "[1,1,1]: 1\n[2,1]: -3\n[3]: 2\n"),
    (["charpoly", "u12.matroid"], 0, "chi: -1 1\nchi: -1 + x\nchi_tilde: -1 1\nchi_tilde: -1 + x\n"),
    (["charpoly", "loop.matroid"], 0, "chi: 1\nchi: 1\nchi_tilde: 0\nchi_tilde: 0\n"),
    (["charpoly", "graphic_triangle.matroid"], 0,
     "chi: 2 -3 1\nchi: 2 - 3*x + x^2\nchi_tilde: 2 -3 1\nchi_tilde: 2 - 3*x + x^2\n"),
    (["digraph", "chain3.digraph"], 0, "0 2 -3 1\n2*x - 3*x^2 + x^3\n"),
    (["digraph", "noarc2.digraph"], 0, "0 0 1\nx^2\n"),
    (["digraph", "nontransitive.digraph"], 4, ""),
    (["verify", "corrupt.matroid"], 1, None),
    (["verify", "k7.graph"], 3, ""),
    (["chrompoly", "bad.graph"], 2, ""),
    (["chrompoly", "missing.graph"], 2, ""),
    (["chrompoly", "triangle.graph", "--method", "kfree", "--kset", "not_broken.kset",
      "--labels", "triangle.labels"], 4, ""),
]


def run_cli(argv: list[str]) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def _resolve(argv: list[str]) -> list[str]:
    return [str(DATA / a) if "." in a and not a.startswith("-") else a for a in argv]


def test_criterion_10_cli_golden():
    failures = []
    for argv, code, stdout in CLI_GOLDEN:
        got_code, got_out, got_err = run_cli(_resolve(argv))
        if got_code != code:
            failures.append(f"{argv}: exit {got_code}, expected {code}")
        elif stdout is not None and got_out != stdout:
            failures.append(f"{argv}: output {got_out!r}")
        elif code in (2, 3, 4) and not got_err.strip():
            failures.append(f"{argv}: no error message")
    code, out, _ = run_cli(["verify", str(DATA / "corrupt.matroid")])
    if "FAIL matroid.axioms" not in out or "{b}" not in out:
        failures.append(f"corrupt matroid witness missing: {out!r}")
    code, out, _ = run_cli(["verify", "--builtin-corpus"])
    if code != 0 or not out.rstrip().endswith(f"0 failed, seed {DEFAULT_SEED}"):
        failures.append("builtin corpus verification did not pass")
    _record(10, "CLI golden outputs and exit codes", failures, len(CLI_GOLDEN) + 2)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
