"""Edge labelings, broken circuits, K-free tests and monochromatic edge sets."""

from __future__ import annotations

from random import Random
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import MAX_SUBSET_EDGES, PreconditionError, check_capacity
from .graph import EdgeSubset, Graph, circuit_masks


@dataclass(frozen=True)
class Labeling:
    """Integer label for every edge of ``graph``; ``labels[i]`` labels ``graph.edges[i]``."""

    graph: Graph
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.graph.num_edges:
            raise ValueError("labeling must cover every edge exactly once")

    @classmethod
    def from_mapping(cls, graph: Graph, mapping: Mapping) -> Labeling:
        labels: list[int | None] = [None] * graph.num_edges
        for (u, v), lab in mapping.items():
            i = graph._eindex.get(graph.edge(u, v))
            if i is None:
                raise ValueError(f"{u}-{v} is not an edge")
            if labels[i] is not None:
                raise ValueError(f"edge {u}-{v} labeled twice")
            labels[i] = int(lab)
        missing = [graph.edges[i] for i, lab in enumerate(labels) if lab is None]
        if missing:
            raise ValueError(f"edges without a label: {missing}")
        return cls(graph, tuple(labels))  # type: ignore[arg-type]

    @classmethod
    def by_position(cls, graph: Graph) -> Labeling:
        """Injective labeling 1, 2, ... in sorted edge order."""
        return cls(graph, tuple(range(1, graph.num_edges + 1)))

    def __getitem__(self, edge) -> int:
        return self.labels[self.graph.edge_index(*edge)]

    def is_injective(self) -> bool:
        return len(set(self.labels)) == len(self.labels)


@dataclass(frozen=True)
class BrokenCircuitSet:
    """A set of broken circuits over an ordered universe (edges or matroid elements).

    Members are bitmasks over ``elements``; ``masks`` is sorted and duplicate-free.
    """

    elements: tuple
    masks: tuple[int, ...]

    @classmethod
    def of(cls, elements: Sequence, masks: Iterable[int]) -> BrokenCircuitSet:
        return cls(tuple(elements), tuple(sorted(set(masks), key=lambda m: (m.bit_count(), m))))

    def members(self) -> list[frozenset]:
        return [frozenset(e for i, e in enumerate(self.elements) if m >> i & 1) for m in self.masks]

    def __len__(self):
        return len(self.masks)

    def __iter__(self):
        return iter(self.masks)

    def __contains__(self, mask) -> bool:
        return mask in self.masks

    def subset(self, masks: Iterable[int]) -> BrokenCircuitSet:
        """Sub-collection; every mask must already be a member."""
        masks = list(masks)
        bad = [m for m in masks if m not in self.masks]
        if bad:
            raise PreconditionError(f"not broken circuits: {[self._show(m) for m in bad]}")
        return BrokenCircuitSet.of(self.elements, masks)

    def _show(self, mask: int) -> list:
        return [e for i, e in enumerate(self.elements) if mask >> i & 1]


@dataclass(frozen=True)
class WeightAssignment:
    """Integer weight ``a_K`` for each member ``K`` of a broken-circuit set."""

    kset: BrokenCircuitSet
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.kset.masks):
            raise ValueError("weights must be given for exactly the members of the set")

    @classmethod
    def constant(cls, kset: BrokenCircuitSet, value: int) -> WeightAssignment:
        return cls(kset, (value,) * len(kset))

    @classmethod
    def random(
        cls, kset: BrokenCircuitSet, rng: Random, lo: int = -9, hi: int = 9
    ) -> WeightAssignment:
        return cls(kset, tuple(rng.randint(lo, hi) for _ in kset.masks))

    @classmethod
    def from_mapping(cls, kset: BrokenCircuitSet, mapping: Mapping[int, int]) -> WeightAssignment:
        if set(mapping) != set(kset.masks):
            raise ValueError("weight domain differs from the broken-circuit set")
        return cls(kset, tuple(int(mapping[m]) for m in kset.masks))

    def __getitem__(self, mask: int) -> int:
        return self.values[self.kset.masks.index(mask)]

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.kset.masks, self.values))


def broken_circuit_masks(circuits: Iterable[int], labels: Sequence[int]) -> set[int]:
    """Remove the unique max-label element from each circuit; skip tied maxima."""
    out = set()
    for c in circuits:
        best, top, ties = -1, None, 0
        m = c
        while m:
            low = m & -m
            i = low.bit_length() - 1
            lab = labels[i]
            if top is None or lab > top:
                best, top, ties = i, lab, 1
            elif lab == top:
                ties += 1
            m ^= low
        if ties == 1:
            out.add(c & ~(1 << best))
    return out


def broken_circuits(g: Graph, labeling: Labeling) -> BrokenCircuitSet:
    if labeling.graph != g:
        raise ValueError("labeling belongs to a different graph")
    check_capacity("edge count", g.num_edges, MAX_SUBSET_EDGES)
    return BrokenCircuitSet.of(g.edges, broken_circuit_masks(circuit_masks(g), labeling.labels))


def kset_from_edge_sets(g: Graph, labeling: Labeling, sets: Iterable[Iterable]) -> BrokenCircuitSet:
    """Validated broken-circuit set from collections of vertex pairs."""
    allowed = broken_circuits(g, labeling)
    return allowed.subset(g.subset(s).mask for s in sets)


def _mask(f) -> int:
    return f.mask if isinstance(f, EdgeSubset) else int(f)


def is_kfree(f: EdgeSubset | int, kset: BrokenCircuitSet) -> bool:
    """True iff no member of ``kset`` is contained in ``f``."""
    m = _mask(f)
    return all(k & ~m for k in kset.masks)


def kfree_weight_product(f: EdgeSubset | int, kset: BrokenCircuitSet, weights: WeightAssignment) -> int:
    if weights.kset != kset:
        raise ValueError("weights belong to a different broken-circuit set")
    m = _mask(f)
    prod = 1
    for k, a in weights.pairs():
        if not k & ~m:
            prod *= a
    return prod


def eqs_edge_set(g: Graph, coloring: Mapping[str, Hashable]) -> EdgeSubset:
    """Edges whose two endpoints receive the same color."""
    col = [coloring[v] for v in g.vertices]
    mask = 0
    for k, (i, j) in enumerate(g._ends):
        if col[i] == col[j]:
            mask |= 1 << k
    return EdgeSubset(g, mask)


def alternating_weighted_sum(support: int, pairs: Sequence[tuple[int, int]]) -> int:
    """Sum over B ⊆ support of (-1)^|B| times the product of a_K over K ⊆ B."""
    relevant = [(k, a) for k, a in pairs if not k & ~support]
    total = 0
    b = support
    while True:
        prod = 1
        for k, a in relevant:
            if not k & ~b:
                prod *= a
        total += -prod if b.bit_count() & 1 else prod
        if b == 0:
            return total
        b = (b - 1) & support


def cancellation_sum(
    g: Graph, kset: BrokenCircuitSet, weights: WeightAssignment, coloring: Mapping[str, Hashable]
) -> int:
    """Alternating weighted sum over subsets of the monochromatic edges of ``coloring``."""
    if kset.elements != g.edges:
        raise ValueError("broken-circuit set belongs to a different graph")
    eqs = eqs_edge_set(g, coloring).mask
    check_capacity("monochromatic edge count", eqs.bit_count(), MAX_SUBSET_EDGES)
    return alternating_weighted_sum(eqs, weights.pairs())
