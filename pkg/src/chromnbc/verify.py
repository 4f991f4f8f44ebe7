"""Identity-verification catalog run by ``chromnbc verify``.

Each check takes one instance plus a private RNG and returns ``None`` on
success or a witness string on failure. The RNG is seeded from
``(seed, check name, instance name)`` so results do not depend on run order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Optional

from . import chromatic as ch
from .broken_circuits import (
    Labeling,
    WeightAssignment,
    alternating_weighted_sum,
    broken_circuits,
    cancellation_sum,
    eqs_edge_set,
)
from .corpus import (
    DEFAULT_SEED,
    LABEL_KINDS,
    digraph_corpus,
    graph_corpus,
    graph_labelings,
    matroid_corpus,
    random_labels,
    random_subkset,
    weight_assignments,
)
from .digraph import (
    Digraph,
    _mask_two_path_free,
    arc_to_edge_mask,
    digraph_chromatic_sum,
    two_path_kset,
    underlying_graph,
)
from .errors import MAX_COLORINGS, MAX_GROUND, MatroidAxiomError
from .graph import (
    Graph,
    circuit_masks,
    conn,
    lambda_partition,
    mask_conn,
    mask_is_forest,
)
from .matroid import (
    Matroid,
    charpol_kfree,
    charpol_nbc,
    charpol_subset,
    charpol_weighted,
    charpol_whitney,
    characteristic_polynomial,
    flats,
    graphical_matroid,
    matroid_broken_circuits,
    moebius_table,
    validate_matroid,
)
from .symfunc import X, psum_expand_truncated, psum_specialize

Witness = Optional[str]
EXHAUSTIVE_EDGES = 12
COLORING_BUDGET = 10**5


class Skip(Exception):
    """Raised by a check that does not apply to an instance."""


@dataclass
class Check:
    name: str
    instance: str
    passed: bool
    witness: str = ""
    skipped: bool = False


@dataclass
class RunReport:
    seed: int
    checks: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = []
        names = list(dict.fromkeys(c.name for c in self.checks))
        for name in names:
            group = [c for c in self.checks if c.name == name]
            ran = [c for c in group if not c.skipped]
            bad = [c for c in ran if not c.passed]
            status = "FAIL" if bad else "PASS"
            note = f"{len(ran) - len(bad)}/{len(ran)} instances"
            if len(ran) != len(group):
                note += f", {len(group) - len(ran)} skipped"
            out.append(f"{status} {name} ({note})")
            out.extend(f"  {c.instance}: {c.witness}" for c in bad)
        total_bad = len(self.failures)
        out.append(
            f"summary: {len(self.checks)} checks, {total_bad} failed, seed {self.seed}"
        )
        return out


def _colorings(g: Graph, q: int):
    if q**g.num_vertices > COLORING_BUDGET:
        raise Skip
    for f in product(range(q), repeat=g.num_vertices):
        yield dict(zip(g.vertices, f))


def _show(g: Graph, mask: int) -> str:
    return "{" + ", ".join(f"{u}-{v}" for u, v in g.mask_edges(mask)) + "}"


# graph checks


def graph_partition_consistency(g: Graph, rng) -> Witness:
    lam = lambda_partition(g)
    if sum(lam) != g.num_vertices or len(lam) != conn(g):
        return f"lambda={lam}, conn={conn(g)}"
    return None


def graph_circuit_validity(g: Graph, rng) -> Witness:
    for c in circuit_masks(g):
        deg: dict[str, int] = {}
        for u, v in g.mask_edges(c):
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if any(d != 2 for d in deg.values()):
            return f"circuit {_show(g, c)} has a vertex of degree != 2"
        if mask_conn(g, c) != g.num_vertices - len(deg) + 1:
            return f"circuit {_show(g, c)} is not connected"
    return None


def graph_forest_rank(g: Graph, rng) -> Witness:
    if g.num_edges > EXHAUSTIVE_EDGES:
        raise Skip
    circuits = circuit_masks(g)
    n = g.num_vertices
    for f in range(1 << g.num_edges):
        free = all(c & ~f for c in circuits)
        if free != mask_is_forest(g, f):
            return f"circuit-free test disagrees on {_show(g, f)}"
        if free and mask_conn(g, f) != n - f.bit_count():
            return f"conn != |V|-|F| for forest {_show(g, f)}"
    return None


def graph_conn_monotone(g: Graph, rng) -> Witness:
    if g.num_edges > EXHAUSTIVE_EDGES:
        raise Skip
    for f in range(1 << g.num_edges):
        c = mask_conn(g, f)
        for i in range(g.num_edges):
            if not f >> i & 1 and mask_conn(g, f | 1 << i) > c:
                return f"adding {g.edges[i]} to {_show(g, f)} increased conn"
    return None


def chromatic_oracle_agreement(g: Graph, rng) -> Witness:
    chi = ch.chromatic_polynomial_subset(g)
    n = g.num_vertices
    for q in (q for q in range(n + 1) if q**n <= MAX_COLORINGS):
        want = ch.count_proper_colorings(g, q)
        if chi(q) != want:
            return f"chi({q}) = {chi(q)} but {want} proper colorings"
    return None


def _regime(g: Graph, rng):
    """Labelings with their full and random broken-circuit sets and weights."""
    for lab in graph_labelings(g, rng):
        full = broken_circuits(g, lab)
        sub = random_subkset(full, rng)
        yield lab, full, sub, weight_assignments(sub, rng)


def chromatic_four_way(g: Graph, rng) -> Witness:
    base = ch.chromatic_polynomial_subset(g)
    for lab, full, sub, weights in _regime(g, rng):
        tag = f"labels={list(lab.labels)}"
        for kset in (full, sub):
            if ch.chromatic_polynomial_kfree(g, lab, kset) != base:
                return f"K-free sum differs ({tag}, K={kset.members()})"
        if ch.chromatic_polynomial_nbc(g, lab) != base:
            return f"NBC sum differs ({tag})"
        for w in weights:
            if ch.chromatic_polynomial_weighted(g, lab, sub, w) != base:
                return f"weighted sum differs ({tag}, a={list(w.values)})"
    return None


def csf_four_way(g: Graph, rng) -> Witness:
    base = ch.csf_subset(g)
    for lab, full, sub, weights in _regime(g, rng):
        tag = f"labels={list(lab.labels)}"
        for kset in (full, sub):
            if ch.csf_kfree(g, lab, kset) != base:
                return f"K-free CSF differs ({tag})"
        if ch.csf_nbc(g, lab) != base:
            return f"NBC CSF differs ({tag})"
        for w in weights:
            if ch.csf_weighted(g, lab, sub, w) != base:
                return f"weighted CSF differs ({tag}, a={list(w.values)})"
    return None


def csf_truncated_oracle(g: Graph, rng) -> Witness:
    if g.num_vertices > 5:
        raise Skip
    x = ch.csf_subset(g)
    for n in (1, 2, 3):
        if psum_expand_truncated(x, n) != ch.csf_oracle_truncated(g, n):
            return f"monomial expansion differs in {n} variables"
    return None


def csf_specialization(g: Graph, rng) -> Witness:
    x = ch.csf_subset(g)
    n = g.num_vertices
    for q in (q for q in range(min(n, 4) + 1) if q**n <= MAX_COLORINGS):
        if psum_specialize(x, q) != ch.count_proper_colorings(g, q):
            return f"specialization at q={q} differs from the coloring count"
    return None


def coloring_proper_iff_no_monochromatic_edge(g: Graph, rng) -> Witness:
    for f in _colorings(g, 3):
        proper = all(f[u] != f[v] for u, v in g.edges)
        if proper != (eqs_edge_set(g, f).mask == 0):
            return f"coloring {f}"
    return None


def coloring_circuit_never_one_edge_short(g: Graph, rng) -> Witness:
    circuits = circuit_masks(g)
    colors = 4 if 4**g.num_vertices <= COLORING_BUDGET else 3
    for f in _colorings(g, colors):
        eqs = eqs_edge_set(g, f).mask
        for c in circuits:
            missing = c & ~eqs
            if missing and missing.bit_count() == 1:
                return f"coloring {f}, circuit {_show(g, c)}"
    return None


def coloring_monochromatic_count(g: Graph, rng) -> Witness:
    full = 1 << g.num_edges
    if g.num_edges <= 6:
        subsets = range(full)
    else:
        subsets = sorted({rng.randrange(full) for _ in range(16)})
    for b in subsets:
        k = mask_conn(g, b)
        for q in range(4):
            if q**g.num_vertices > COLORING_BUDGET:
                raise Skip
            got = ch.count_colorings_containing(g, g.from_mask(b), q)
            if got != q**k:
                return f"B={_show(g, b)}, q={q}: {got} != {q}^{k}"
    return None


def bc_cancellation(g: Graph, rng) -> Witness:
    for lab in graph_labelings(g, rng):
        full = broken_circuits(g, lab)
        for kset in (full, random_subkset(full, rng)):
            weights = [WeightAssignment.random(kset, rng) for _ in range(10)]
            seen: set[int] = set()
            for f in _colorings(g, 3):
                eqs = eqs_edge_set(g, f).mask
                if eqs in seen:
                    continue
                seen.add(eqs)
                for w in weights:
                    if cancellation_sum(g, kset, w, f) != (1 if eqs == 0 else 0):
                        return f"coloring {f}, a={list(w.values)}"
    return None


def bc_nonempty(g: Graph, rng) -> Witness:
    for lab in graph_labelings(g, rng):
        if 0 in broken_circuits(g, lab).masks:
            return f"empty broken circuit under labels {list(lab.labels)}"
    return None


def bc_nbc_forest(g: Graph, rng) -> Witness:
    lab = Labeling(g, random_labels(g.num_edges, rng, "injective"))
    for f in ch.nbc_masks(g, lab):
        if not mask_is_forest(g, f):
            return f"NBC set {_show(g, f)} has a circuit"
    return None


def graphical_bridge(g: Graph, rng) -> Witness:
    if g.num_edges > MAX_GROUND:
        raise Skip
    chi_m, _ = characteristic_polynomial(graphical_matroid(g))
    lhs = chi_m * X ** conn(g)
    if lhs != ch.chromatic_polynomial_subset(g):
        return f"x^conn * chi_M = {lhs}"
    return None


GRAPH_CHECKS: list[tuple[str, Callable]] = [
    ("graph.partition_consistency", graph_partition_consistency),
    ("graph.circuit_validity", graph_circuit_validity),
    ("graph.forest_rank", graph_forest_rank),
    ("graph.conn_monotone", graph_conn_monotone),
    ("chromatic.oracle_agreement", chromatic_oracle_agreement),
    ("chromatic.four_way", chromatic_four_way),
    ("csf.four_way", csf_four_way),
    ("csf.truncated_oracle", csf_truncated_oracle),
    ("csf.specialization", csf_specialization),
    ("coloring.proper_iff_no_monochromatic_edge", coloring_proper_iff_no_monochromatic_edge),
    ("coloring.circuit_never_one_edge_short", coloring_circuit_never_one_edge_short),
    ("coloring.monochromatic_count", coloring_monochromatic_count),
    ("bc.cancellation", bc_cancellation),
    ("bc.nonempty", bc_nonempty),
    ("bc.nbc_forest", bc_nbc_forest),
    ("matroid.graphical_bridge", graphical_bridge),
]


# matroid checks


def matroid_axioms(m: Matroid, rng) -> Witness:
    try:
        validate_matroid(m.ground, [m.unmask(s) for s in m.independent_masks()])
    except MatroidAxiomError as exc:
        return str(exc)
    return None


def matroid_rank(m: Matroid, rng) -> Witness:
    if m.rank_mask(0) != 0:
        return "rank of the empty set is not 0"
    for s in range(1 << m.size):
        if m.is_independent_mask(s) and m.rank_mask(s) != s.bit_count():
            return f"independent {set(m.unmask(s))} has rank {m.rank_mask(s)}"
        for i in range(m.size):
            if m.rank_mask(s | 1 << i) < m.rank_mask(s):
                return "rank is not weakly increasing"
    return None


def matroid_circuit_containment(m: Matroid, rng) -> Witness:
    cs = m.circuit_masks
    for s in range(1 << m.size):
        if not m.is_independent_mask(s) and not any(not c & ~s for c in cs):
            return f"dependent {set(m.unmask(s))} contains no circuit"
    return None


def matroid_basis_extension(m: Matroid, rng) -> Witness:
    indep = m.independent_masks()
    for t in range(1 << m.size):
        r = m.rank_mask(t)
        inside = [s for s in indep if not s & ~t]
        tops = [s for s in inside if s.bit_count() == r]
        for s in inside:
            if not any(not s & ~b for b in tops):
                return f"{set(m.unmask(s))} does not extend inside {set(m.unmask(t))}"
    return None


def matroid_flat_criteria(m: Matroid, rng) -> Witness:
    for t in range(1 << m.size):
        if m.is_flat_mask(t) != m.is_flat_by_rank_mask(t):
            return f"flat criteria disagree on {set(m.unmask(t))}"
    return None


def matroid_closure_props(m: Matroid, rng) -> Witness:
    cl = [m.closure_mask(t) for t in range(1 << m.size)]
    flat_set = set(m.flat_masks)
    for t, c in enumerate(cl):
        if t & ~c:
            return f"closure of {set(m.unmask(t))} does not contain it"
        if c not in flat_set or cl[c] != c:
            return f"closure of {set(m.unmask(t))} is not a fixed flat"
        if t in flat_set and c != t:
            return f"flat {set(m.unmask(t))} is not its own closure"
        if m.rank_mask(c) != m.rank_mask(t):
            return f"closure changes the rank of {set(m.unmask(t))}"
        for i in range(m.size):
            if cl[t] & ~cl[t | 1 << i]:
                return "closure is not monotone"
    if m.is_loopless() and cl[0] != 0:
        return "loopless matroid with nonempty closure of the empty set"
    return None


def matroid_lattice(m: Matroid, rng) -> Witness:
    lat = flats(m)
    fs = set(lat.masks)
    if lat.bottom != m.closure_mask(0) or lat.top != m.full_mask:
        return "bottom/top are not cl(empty)/ground"
    for a in lat.masks:
        if lat.bottom & ~a:
            return "bottom is not below every flat"
        for b in lat.masks:
            if a & b not in fs:
                return f"intersection of flats {set(m.unmask(a))}, {set(m.unmask(b))} is not a flat"
            j = lat.join(a, b)
            uppers = [u for u in lat.masks if not (a | b) & ~u]
            if j not in fs or any(j & ~u for u in uppers):
                return "closure of a union is not the least upper bound"
    return None


def matroid_moebius(m: Matroid, rng) -> Witness:
    lat = flats(m)
    mu = moebius_table(lat)
    fl = lat.masks
    for f in fl:
        if mu[(f, f)] != 1:
            return "mu(F,F) != 1"
        for g in fl:
            if f & ~g:
                continue
            between = [h for h in fl if not f & ~h and not h & ~g]
            want = 1 if f == g else 0
            if sum(mu[(f, h)] for h in between) != want:
                return f"left double sum fails on [{set(m.unmask(f))}, {set(m.unmask(g))}]"
            if sum(mu[(h, g)] for h in between) != want:
                return f"right double sum fails on [{set(m.unmask(f))}, {set(m.unmask(g))}]"
    for _ in range(5):
        beta = {f: rng.randint(-20, 20) for f in fl}
        partial = {h: sum(beta[f] for f in fl if not f & ~h) for h in fl}
        for g in fl:
            back = sum(mu[(h, g)] * partial[h] for h in fl if not h & ~g)
            if back != beta[g]:
                return f"Möbius inversion fails at {set(m.unmask(g))}"
    return None


def _matroid_regime(m: Matroid, rng):
    for kind in LABEL_KINDS:
        labels = dict(zip(m.ground, random_labels(m.size, rng, kind)))
        full = matroid_broken_circuits(m, labels)
        sub = random_subkset(full, rng)
        yield kind, labels, full, sub, weight_assignments(sub, rng)


def matroid_flat_cancellation(m: Matroid, rng) -> Witness:
    for kind, labels, full, sub, weights in _matroid_regime(m, rng):
        for kset, ws in ((sub, weights), (full, weight_assignments(full, rng))):
            for w in ws:
                for f in m.flat_masks:
                    if alternating_weighted_sum(f, w.pairs()) != (1 if f == 0 else 0):
                        return f"flat {set(m.unmask(f))}, a={list(w.values)}"
    return None


def matroid_formula_agreement(m: Matroid, rng) -> Witness:
    _, chi_t = characteristic_polynomial(m)
    if charpol_subset(m) != chi_t:
        return f"subset formula {charpol_subset(m)} != {chi_t}"
    for kind, labels, full, sub, weights in _matroid_regime(m, rng):
        for kset in (full, sub):
            if charpol_kfree(m, labels, kset) != chi_t:
                return f"K-free formula differs ({kind})"
        if charpol_nbc(m, labels) != chi_t:
            return f"NBC formula differs ({kind})"
        if kind == "injective" and charpol_whitney(m, labels) != chi_t:
            return "Whitney form differs"
        for w in weights:
            if charpol_weighted(m, labels, sub, w) != chi_t:
                return f"weighted formula differs ({kind}, a={list(w.values)})"
    return None


MATROID_CHECKS: list[tuple[str, Callable]] = [
    ("matroid.axioms", matroid_axioms),
    ("matroid.rank", matroid_rank),
    ("matroid.circuit_containment", matroid_circuit_containment),
    ("matroid.basis_extension", matroid_basis_extension),
    ("matroid.flat_criteria", matroid_flat_criteria),
    ("matroid.closure_props", matroid_closure_props),
    ("matroid.lattice", matroid_lattice),
    ("matroid.moebius", matroid_moebius),
    ("matroid.flat_cancellation", matroid_flat_cancellation),
    ("matroid.formula_agreement", matroid_formula_agreement),
]


# digraph checks


def digraph_two_path_free_sum(d: Digraph, rng) -> Witness:
    got = digraph_chromatic_sum(d)
    want = ch.chromatic_polynomial_subset(underlying_graph(d))
    if got != want:
        return f"2-path-free sum {got} != {want}"
    return None


def digraph_kset_bridge(d: Digraph, rng) -> Witness:
    g = underlying_graph(d)
    kset = two_path_kset(d)
    free_edges = {f for f in range(1 << g.num_edges) if all(k & ~f for k in kset.masks)}
    image = {
        arc_to_edge_mask(d, g, f) for f in range(1 << d.num_arcs) if _mask_two_path_free(d, f)
    }
    if free_edges != image:
        return "2-path-free arc sets do not map onto the K-free edge sets"
    return None


def digraph_arc_bijection(d: Digraph, rng) -> Witness:
    g = underlying_graph(d)
    if g.num_edges != d.num_arcs:
        return f"{d.num_arcs} arcs but {g.num_edges} edges"
    return None


DIGRAPH_CHECKS: list[tuple[str, Callable]] = [
    ("digraph.two_path_free_sum", digraph_two_path_free_sum),
    ("digraph.kset_bridge", digraph_kset_bridge),
    ("digraph.arc_bijection", digraph_arc_bijection),
]


def _run(report: RunReport, checks, instances) -> None:
    for name, fn in checks:
        for inst_name, inst in instances:
            rng = random.Random(f"{report.seed}:{name}:{inst_name}")
            try:
                witness = fn(inst, rng)
            except Skip:
                report.checks.append(Check(name, inst_name, True, skipped=True))
                continue
            report.checks.append(Check(name, inst_name, witness is None, witness or ""))


def verify_graphs(report: RunReport, graphs) -> None:
    _run(report, GRAPH_CHECKS, graphs)


def verify_matroids(report: RunReport, matroids) -> None:
    _run(report, MATROID_CHECKS, matroids)


def verify_digraphs(report: RunReport, digraphs) -> None:
    _run(report, DIGRAPH_CHECKS, digraphs)


def verify_corpus(seed: int = DEFAULT_SEED) -> RunReport:
    report = RunReport(seed)
    verify_graphs(report, graph_corpus())
    verify_matroids(report, matroid_corpus())
    verify_digraphs(report, digraph_corpus(seed))
    return report
