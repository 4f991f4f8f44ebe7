"""Chromatic polynomial and chromatic symmetric function of a graph.

Every formula here is a signed sum over edge subsets F of the graph, evaluated
exactly. The brute-force coloring counts at the top are the ground truth the
subset formulas are checked against.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .broken_circuits import BrokenCircuitSet, Labeling, WeightAssignment, broken_circuits
from .errors import (
    MAX_COLORINGS,
    MAX_SUBSET_EDGES,
    CapacityError,
    PreconditionError,
    check_capacity,
)
from .graph import EdgeSubset, Graph, mask_conn, mask_is_forest, mask_partition
from .symfunc import IntPolynomial, PowerSumVector, TruncatedPoly

MAX_ORACLE_VARS = 4
MAX_ORACLE_COLORINGS = 10**6


def _coloring_guard(g: Graph, q: int, limit: int = MAX_COLORINGS) -> None:
    if q < 0:
        raise ValueError("q must be nonnegative")
    if q ** g.num_vertices > limit:
        raise CapacityError(f"{q}^{g.num_vertices} colorings exceed the limit of {limit}")


def count_proper_colorings(g: Graph, q: int) -> int:
    """Number of maps V -> {1..q} giving distinct colors to adjacent vertices."""
    _coloring_guard(g, q)
    ends = g._ends
    return sum(
        1
        for f in product(range(q), repeat=g.num_vertices)
        if all(f[i] != f[j] for i, j in ends)
    )


def count_colorings_containing(g: Graph, b: EdgeSubset, q: int) -> int:
    """Number of maps V -> {1..q} under which every edge of ``b`` is monochromatic."""
    _coloring_guard(g, q)
    ends = [g._ends[i] for i in range(g.num_edges) if b.mask >> i & 1]
    return sum(
        1
        for f in product(range(q), repeat=g.num_vertices)
        if all(f[i] == f[j] for i, j in ends)
    )


def _validate_kset(g: Graph, labeling: Labeling, kset: BrokenCircuitSet) -> None:
    if labeling.graph != g:
        raise PreconditionError("labeling belongs to a different graph")
    if kset.elements != g.edges:
        raise PreconditionError("broken-circuit set belongs to a different graph")
    allowed = set(broken_circuits(g, labeling).masks)
    bad = [m for m in kset.masks if m not in allowed]
    if bad:
        raise PreconditionError(
            f"not broken circuits under this labeling: {[g.mask_edges(m) for m in bad]}"
        )


def _signed_terms(
    g: Graph,
    forbidden: Sequence[int] = (),
    weights: Sequence[tuple[int, int]] = (),
) -> Iterator[tuple[int, int]]:
    """Yield ``(F, (-1)^|F| * prod a_K)`` for every F avoiding ``forbidden``."""
    check_capacity("edge count", g.num_edges, MAX_SUBSET_EDGES)
    weights = [(k, a) for k, a in weights]
    for f in range(1 << g.num_edges):
        if forbidden and not all(k & ~f for k in forbidden):
            continue
        w = 1
        for k, a in weights:
            if not k & ~f:
                w *= a
                if not w:
                    break
        if w:
            yield f, -w if f.bit_count() & 1 else w


def _poly(g: Graph, terms: Iterator[tuple[int, int]]) -> IntPolynomial:
    counts: dict[int, int] = {}
    for f, w in terms:
        k = mask_conn(g, f)
        counts[k] = counts.get(k, 0) + w
    return IntPolynomial.from_exponent_counts(counts)


def _csf(g: Graph, terms: Iterator[tuple[int, int]]) -> PowerSumVector:
    counts: dict[tuple[int, ...], int] = {}
    for f, w in terms:
        lam = mask_partition(g, f)
        counts[lam] = counts.get(lam, 0) + w
    return PowerSumVector.from_counts(counts)


def chromatic_polynomial_subset(g: Graph) -> IntPolynomial:
    """Sum over all F ⊆ E of (-1)^|F| x^conn(V,F)."""
    return _poly(g, _signed_terms(g))


def chromatic_polynomial_weighted(
    g: Graph, labeling: Labeling, kset: BrokenCircuitSet, weights: WeightAssignment
) -> IntPolynomial:
    _validate_kset(g, labeling, kset)
    if weights.kset != kset:
        raise PreconditionError("weights belong to a different broken-circuit set")
    return _poly(g, _signed_terms(g, weights=weights.pairs()))


def chromatic_polynomial_kfree(g: Graph, labeling: Labeling, kset: BrokenCircuitSet) -> IntPolynomial:
    _validate_kset(g, labeling, kset)
    return _poly(g, _signed_terms(g, forbidden=kset.masks))


def nbc_masks(g: Graph, labeling: Labeling) -> list[int]:
    """Edge subsets containing no broken circuit."""
    forbidden = broken_circuits(g, labeling).masks
    return [f for f, _ in _signed_terms(g, forbidden=forbidden)]


def chromatic_polynomial_whitney(g: Graph, labeling: Labeling) -> IntPolynomial:
    """Sum over NBC sets F of (-1)^|F| x^(|V|-|F|); valid for injective labelings."""
    if not labeling.is_injective():
        raise PreconditionError("the rank-free NBC form needs an injective labeling")
    counts: dict[int, int] = {}
    n = g.num_vertices
    for f in nbc_masks(g, labeling):
        s = f.bit_count()
        counts[n - s] = counts.get(n - s, 0) + (-1) ** s
    return IntPolynomial.from_exponent_counts(counts)


def chromatic_polynomial_nbc(g: Graph, labeling: Labeling) -> IntPolynomial:
    """Sum over subsets containing no broken circuit of (-1)^|F| x^conn(V,F).

    With an injective labeling every NBC set is a forest; this is checked
    and the result is compared against :func:`chromatic_polynomial_whitney`.
    """
    kset = broken_circuits(g, labeling)
    result = _poly(g, _signed_terms(g, forbidden=kset.masks))
    if labeling.is_injective():
        n = g.num_vertices
        for f in nbc_masks(g, labeling):
            if not mask_is_forest(g, f) or mask_conn(g, f) != n - f.bit_count():
                raise AssertionError(f"NBC set {g.mask_edges(f)} is not a forest")
        if result != chromatic_polynomial_whitney(g, labeling):
            raise AssertionError("NBC sum disagrees with the Whitney form")
    return result


def nbc_counts_by_size(g: Graph, labeling: Labeling) -> list[int]:
    counts = [0] * (g.num_edges + 1)
    for f in nbc_masks(g, labeling):
        counts[f.bit_count()] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def csf_subset(g: Graph) -> PowerSumVector:
    """Sum over all F ⊆ E of (-1)^|F| p_lambda(V,F)."""
    return _csf(g, _signed_terms(g))


def csf_weighted(
    g: Graph, labeling: Labeling, kset: BrokenCircuitSet, weights: WeightAssignment
) -> PowerSumVector:
    _validate_kset(g, labeling, kset)
    if weights.kset != kset:
        raise PreconditionError("weights belong to a different broken-circuit set")
    return _csf(g, _signed_terms(g, weights=weights.pairs()))


def csf_kfree(g: Graph, labeling: Labeling, kset: BrokenCircuitSet) -> PowerSumVector:
    _validate_kset(g, labeling, kset)
    return _csf(g, _signed_terms(g, forbidden=kset.masks))


def csf_nbc(g: Graph, labeling: Labeling) -> PowerSumVector:
    kset = broken_circuits(g, labeling)
    return _csf(g, _signed_terms(g, forbidden=kset.masks))


def csf_oracle_truncated(g: Graph, n: int) -> TruncatedPoly:
    """Chromatic symmetric function with x_{n+1}, x_{n+2}, ... set to 0.

    Sums the monomial prod_v x_{f(v)} over proper colorings f: V -> {1..n}.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ORACLE_VARS:
        raise CapacityError(f"{n} variables, above the limit of {MAX_ORACLE_VARS}")
    _coloring_guard(g, n, MAX_ORACLE_COLORINGS)
    ends = g._ends
    terms: dict[tuple[int, ...], int] = {}
    for f in product(range(n), repeat=g.num_vertices):
        if all(f[i] != f[j] for i, j in ends):
            exps = [0] * n
            for c in f:
                exps[c] += 1
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + 1
    return TruncatedPoly(n, terms)
