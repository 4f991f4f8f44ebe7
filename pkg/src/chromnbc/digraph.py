"""Transitive loopless digraphs and their 2-path-free chromatic sum."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .broken_circuits import BrokenCircuitSet, Labeling, broken_circuits
from .errors import MAX_SUBSET_EDGES, PreconditionError, check_capacity
from .graph import Graph, _token, mask_conn, vertex_key
from .symfunc import IntPolynomial

Arc = tuple[str, str]


class Digraph:
    """An immutable finite digraph; arcs are sorted by (source, target)."""

    def __init__(self, vertices: Iterable, arcs: Iterable = ()):
        vs = {_token(v) for v in vertices}
        self.vertices: tuple[str, ...] = tuple(sorted(vs, key=vertex_key))
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        aset = set()
        for a in arcs:
            u, v = (_token(x) for x in a)
            for x in (u, v):
                if x not in self._vindex:
                    raise ValueError(f"arc endpoint {x!r} is not a vertex")
            aset.add((u, v))
        self.arcs: tuple[Arc, ...] = tuple(
            sorted(aset, key=lambda a: (vertex_key(a[0]), vertex_key(a[1])))
        )
        self._aindex = {a: i for i, a in enumerate(self.arcs)}
        self._ends = tuple((self._vindex[u], self._vindex[v]) for u, v in self.arcs)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def is_loopless(self) -> bool:
        return all(u != v for u, v in self.arcs)

    def subset(self, arcs: Iterable = ()) -> ArcSubset:
        mask = 0
        for a in arcs:
            a = (str(a[0]), str(a[1]))
            if a not in self._aindex:
                raise ValueError(f"{a} is not an arc")
            mask |= 1 << self._aindex[a]
        return ArcSubset(self, mask)

    def mask_arcs(self, mask: int) -> tuple[Arc, ...]:
        return tuple(a for i, a in enumerate(self.arcs) if mask >> i & 1)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.vertices, self.arcs) == (other.vertices, other.arcs)

    def __hash__(self):
        return hash((self.vertices, self.arcs))

    def __repr__(self):
        return f"Digraph(vertices={list(self.vertices)}, arcs={list(self.arcs)})"


@dataclass(frozen=True)
class ArcSubset:
    digraph: Digraph
    mask: int

    @property
    def members(self) -> frozenset[Arc]:
        return frozenset(self.digraph.mask_arcs(self.mask))

    def __len__(self):
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.digraph.mask_arcs(self.mask))


def is_transitive(d: Digraph) -> bool:
    arcs = set(d.arcs)
    out: dict[str, list[str]] = {}
    for u, v in d.arcs:
        out.setdefault(u, []).append(v)
    return all((u, w) in arcs for u, v in d.arcs for w in out.get(v, ()))


def _mask_two_path_free(d: Digraph, mask: int) -> bool:
    sources = targets = 0
    ends = d._ends
    while mask:
        low = mask & -mask
        i, j = ends[low.bit_length() - 1]
        sources |= 1 << i
        targets |= 1 << j
        mask ^= low
    return not sources & targets


def is_two_path_free(d: Digraph, f: ArcSubset) -> bool:
    """True iff no vertex is the target of one arc of ``f`` and the source of another."""
    if f.digraph != d:
        raise ValueError("arc subset belongs to a different digraph")
    return _mask_two_path_free(d, f.mask)


def underlying_graph(d: Digraph) -> Graph:
    if not d.is_loopless():
        raise PreconditionError("digraph has a loop")
    return Graph(d.vertices, d.arcs)


def _require_poset(d: Digraph) -> None:
    if not d.is_loopless():
        raise PreconditionError("digraph has a loop")
    if not is_transitive(d):
        raise PreconditionError("digraph is not transitive")


def interval_sizes(d: Digraph) -> dict[Arc, int]:
    """For each arc (i, j), the size of the closed interval {k : i <= k <= j}."""
    _require_poset(d)
    arcs = set(d.arcs)
    return {
        (i, j): 2 + sum(1 for k in d.vertices if (i, k) in arcs and (k, j) in arcs)
        for i, j in d.arcs
    }


def interval_labeling(d: Digraph) -> Labeling:
    """Label each edge of the underlying graph by the interval size of its arc."""
    g = underlying_graph(d)
    sizes = interval_sizes(d)
    return Labeling.from_mapping(g, sizes)


def two_path_kset(d: Digraph) -> BrokenCircuitSet:
    """The sets {{i,k},{k,j}} for arcs (i,k), (k,j); broken circuits under the interval labeling."""
    _require_poset(d)
    g = underlying_graph(d)
    out: dict[str, list[str]] = {}
    for u, v in d.arcs:
        out.setdefault(u, []).append(v)
    masks = set()
    for i, k in d.arcs:
        for j in out.get(k, ()):
            masks.add(1 << g.edge_index(i, k) | 1 << g.edge_index(k, j))
    kset = BrokenCircuitSet.of(g.edges, masks)
    allowed = set(broken_circuits(g, interval_labeling(d)).masks)
    if not allowed.issuperset(kset.masks):
        raise AssertionError("a two-arc path failed to be a broken circuit")
    return kset


def arc_to_edge_mask(d: Digraph, g: Graph, mask: int) -> int:
    """Image of an arc subset under the arc -> edge bijection."""
    out = 0
    for u, v in d.mask_arcs(mask):
        out |= 1 << g.edge_index(u, v)
    return out


def digraph_chromatic_sum(d: Digraph) -> IntPolynomial:
    """Sum over 2-path-free F ⊆ A of (-1)^|F| x^conn(V, set F)."""
    _require_poset(d)
    check_capacity("arc count", d.num_arcs, MAX_SUBSET_EDGES)
    g = underlying_graph(d)
    edge_bit = [1 << g.edge_index(u, v) for u, v in d.arcs]
    counts: dict[int, int] = {}
    for f in range(1 << d.num_arcs):
        if not _mask_two_path_free(d, f):
            continue
        e = 0
        for i, bit in enumerate(edge_bit):
            if f >> i & 1:
                e |= bit
        k = mask_conn(g, e)
        counts[k] = counts.get(k, 0) + (-1 if f.bit_count() & 1 else 1)
    return IntPolynomial.from_exponent_counts(counts)


def random_comparability_digraph(n: int, rng: random.Random, p: float = 0.4) -> Digraph:
    """Transitive closure of a random DAG on vertices 1..n (random topological order)."""
    order = [str(i) for i in range(1, n + 1)]
    rng.shuffle(order)
    reach: dict[str, set[str]] = {v: set() for v in order}
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                reach[order[a]].add(order[b])
    for k in order:
        for i in order:
            if k in reach[i]:
                reach[i] |= reach[k]
    return Digraph(order, [(u, v) for u in order for v in reach[u]])


def chain_digraph(n: int) -> Digraph:
    vs = [str(i) for i in range(1, n + 1)]
    return Digraph(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])
