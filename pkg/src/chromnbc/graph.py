"""Finite simple graphs, spanning subgraphs, components and circuits.

Vertices are text tokens. Edges are stored as ordered pairs ``(u, v)`` with
``u`` before ``v`` in the global vertex order, and the edge tuple of a graph is
sorted lexicographically. An :class:`EdgeSubset` is an integer bitmask whose
bit ``i`` stands for ``graph.edges[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import MAX_SUBSET_EDGES, check_capacity

Vertex = str
Edge = tuple[str, str]
Partition = tuple[int, ...]


def vertex_key(v: str) -> tuple:
    """Sort key for vertex tokens: decimal tokens numerically, then the rest."""
    if v.isdigit():
        return (0, int(v), v)
    return (1, 0, v)


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonical form of a list of part sizes (weakly decreasing, no zeros)."""
    out = []
    for p in parts:
        if p < 0:
            raise ValueError(f"negative part {p}")
        if p:
            out.append(int(p))
    out.sort(reverse=True)
    return tuple(out)


def _token(v) -> str:
    s = str(v)
    if not s or any(c.isspace() for c in s):
        raise ValueError(f"invalid vertex name {v!r}")
    return s


class Graph:
    """An immutable finite loopless simple graph."""

    def __init__(self, vertices: Iterable, edges: Iterable = ()):
        vs = {_token(v) for v in vertices}
        self.vertices: tuple[Vertex, ...] = tuple(sorted(vs, key=vertex_key))
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        es = set()
        for e in edges:
            u, v = (_token(x) for x in e)
            if u == v:
                raise ValueError(f"loop at vertex {u!r}")
            for x in (u, v):
                if x not in self._vindex:
                    raise ValueError(f"edge endpoint {x!r} is not a vertex")
            es.add(self.edge(u, v))
        self.edges: tuple[Edge, ...] = tuple(
            sorted(es, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))
        )
        self._eindex = {e: i for i, e in enumerate(self.edges)}
        self._ends = tuple((self._vindex[u], self._vindex[v]) for u, v in self.edges)

    def edge(self, u, v) -> Edge:
        """Normalize an unordered vertex pair to this graph's edge form."""
        u, v = str(u), str(v)
        if vertex_key(v) < vertex_key(u):
            u, v = v, u
        return (u, v)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_index(self, u, v) -> int:
        return self._eindex[self.edge(u, v)]

    def subset(self, edges: Iterable = ()) -> EdgeSubset:
        """Build an :class:`EdgeSubset` from vertex pairs."""
        mask = 0
        for u, v in edges:
            e = self.edge(u, v)
            if e not in self._eindex:
                raise ValueError(f"{e} is not an edge of the graph")
            mask |= 1 << self._eindex[e]
        return EdgeSubset(self, mask)

    def full(self) -> EdgeSubset:
        return EdgeSubset(self, (1 << len(self.edges)) - 1)

    def empty(self) -> EdgeSubset:
        return EdgeSubset(self, 0)

    def from_mask(self, mask: int) -> EdgeSubset:
        if mask < 0 or mask >> len(self.edges):
            raise ValueError(f"mask {mask:#x} out of range")
        return EdgeSubset(self, mask)

    def mask_edges(self, mask: int) -> tuple[Edge, ...]:
        return tuple(e for i, e in enumerate(self.edges) if mask >> i & 1)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex index, the ``(neighbor index, edge index)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in self.vertices]
        for k, (i, j) in enumerate(self._ends):
            adj[i].append((j, k))
            adj[j].append((i, k))
        return tuple(tuple(a) for a in adj)

    def _key(self):
        return (self.vertices, self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        es = ", ".join(f"{u}-{v}" for u, v in self.edges)
        return f"Graph(vertices={list(self.vertices)}, edges=[{es}])"


@dataclass(frozen=True)
class EdgeSubset:
    """A subset of ``graph.edges`` encoded as a bitmask."""

    graph: Graph
    mask: int

    @property
    def members(self) -> frozenset[Edge]:
        return frozenset(self.graph.mask_edges(self.mask))

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.graph.mask_edges(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, e) -> bool:
        i = self.graph._eindex.get(self.graph.edge(*e))
        return i is not None and bool(self.mask >> i & 1)

    def issubset(self, other: EdgeSubset) -> bool:
        return self.mask & ~other.mask == 0

    def __repr__(self):
        return "EdgeSubset({" + ", ".join(f"{u}-{v}" for u, v in self) + "})"


def _require_parent(g: Graph, f: EdgeSubset) -> None:
    if f.graph is not g and f.graph != g:
        raise ValueError("edge subset belongs to a different graph")


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def mask_conn(g: Graph, mask: int) -> int:
    """Number of components of the spanning subgraph ``(V, mask)``."""
    parent = list(range(len(g.vertices)))
    count = len(parent)
    ends = g._ends
    while mask:
        low = mask & -mask
        i, j = ends[low.bit_length() - 1]
        ri, rj = _find(parent, i), _find(parent, j)
        if ri != rj:
            parent[ri] = rj
            count -= 1
        mask ^= low
    return count


def mask_partition(g: Graph, mask: int) -> Partition:
    """Component-size partition of the spanning subgraph ``(V, mask)``."""
    n = len(g.vertices)
    parent = list(range(n))
    ends = g._ends
    while mask:
        low = mask & -mask
        i, j = ends[low.bit_length() - 1]
        ri, rj = _find(parent, i), _find(parent, j)
        if ri != rj:
            parent[ri] = rj
        mask ^= low
    sizes: dict[int, int] = {}
    for x in range(n):
        r = _find(parent, x)
        sizes[r] = sizes.get(r, 0) + 1
    return tuple(sorted(sizes.values(), reverse=True))


def connected_components(g: Graph) -> list[frozenset[Vertex]]:
    """Blocks of the walk-connectivity relation, ordered by least vertex."""
    seen = [False] * len(g.vertices)
    blocks = []
    for start in range(len(g.vertices)):
        if seen[start]:
            continue
        seen[start] = True
        stack, block = [start], []
        while stack:
            x = stack.pop()
            block.append(g.vertices[x])
            for y, _ in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        blocks.append(frozenset(block))
    return blocks


def conn(g: Graph) -> int:
    return len(connected_components(g))


def lambda_partition(g: Graph) -> Partition:
    """Sizes of the connected components, weakly decreasing."""
    return as_partition(len(b) for b in connected_components(g))


def spanning_subgraph(g: Graph, f: EdgeSubset) -> Graph:
    _require_parent(g, f)
    return Graph(g.vertices, g.mask_edges(f.mask))


def circuit_masks(g: Graph) -> tuple[int, ...]:
    """Bitmasks of all circuits of ``g``, sorted by (size, mask).

    Each cycle is found by a DFS rooted at its least vertex index that only
    walks through larger vertices; both traversal directions land on the
    same mask.
    """
    check_capacity("edge count", len(g.edges), MAX_SUBSET_EDGES)
    adj = g.adjacency
    found: set[int] = set()
    for s in range(len(g.vertices)):
        # stack items: (vertex, visited vertex bits, path edge mask, path length)
        stack = [(s, 1 << s, 0, 0)]
        while stack:
            x, visited, path, length = stack.pop()
            for y, k in adj[x]:
                if y == s:
                    if length >= 2:
                        found.add(path | 1 << k)
                elif y > s and not visited >> y & 1:
                    stack.append((y, visited | 1 << y, path | 1 << k, length + 1))
    return tuple(sorted(found, key=lambda m: (m.bit_count(), m)))


def enumerate_circuits(g: Graph) -> tuple[EdgeSubset, ...]:
    """All circuits (edge sets of cycles) of ``g``, each exactly once."""
    return tuple(EdgeSubset(g, m) for m in circuit_masks(g))


def mask_is_forest(g: Graph, mask: int) -> bool:
    parent = list(range(len(g.vertices)))
    ends = g._ends
    while mask:
        low = mask & -mask
        i, j = ends[low.bit_length() - 1]
        ri, rj = _find(parent, i), _find(parent, j)
        if ri == rj:
            return False
        parent[ri] = rj
        mask ^= low
    return True


def is_circuit_free(g: Graph, f: EdgeSubset) -> bool:
    _require_parent(g, f)
    return mask_is_forest(g, f.mask)


def complete_graph(n: int, names: Iterable | None = None) -> Graph:
    vs = list(names) if names is not None else [str(i) for i in range(1, n + 1)]
    return Graph(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])
