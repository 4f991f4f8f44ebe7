"""Text formats for graphs, digraphs, labelings, K-sets, weights and matroids.

Every format is line based: ``key: tokens``. Blank lines and anything after
``#`` are ignored. Malformed input raises :class:`ParseError` with the line
number.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterator

from .broken_circuits import Labeling
from .digraph import Digraph
from .errors import ParseError
from .graph import Graph, complete_graph, cycle_graph, path_graph
from .matroid import Matroid, graphical_matroid, uniform_matroid, validate_matroid


def _lines(text: str) -> Iterator[tuple[int, str, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {no}: expected 'key: values', got {raw.strip()!r}")
        yield no, key.strip(), rest.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {no}: {tok!r} is not an integer") from None


def _vertices_and_pairs(text: str, pair_key: str) -> tuple[list[str], list[tuple[str, str]]]:
    vertices: list[str] = []
    declared: set[str] = set()
    pairs: list[tuple[str, str]] = []
    seen: set = set()
    for no, key, toks in _lines(text):
        if key == "vertices":
            for v in toks:
                if v in declared:
                    raise ParseError(f"line {no}: vertex {v!r} declared twice")
                declared.add(v)
                vertices.append(v)
        elif key == pair_key:
            if len(toks) != 2:
                raise ParseError(f"line {no}: {pair_key} needs exactly two vertices")
            for v in toks:
                if v not in declared:
                    raise ParseError(f"line {no}: vertex {v!r} is not declared")
            u, v = toks
            ident = frozenset(toks) if pair_key == "edge" else (u, v)
            if pair_key == "edge" and u == v:
                raise ParseError(f"line {no}: loop at {u!r}")
            if ident in seen:
                raise ParseError(f"line {no}: duplicate {pair_key} {u} {v}")
            seen.add(ident)
            pairs.append((u, v))
        else:
            raise ParseError(f"line {no}: unknown key {key!r}")
    return vertices, pairs


def parse_graph(text: str) -> Graph:
    vertices, edges = _vertices_and_pairs(text, "edge")
    return Graph(vertices, edges)


def parse_digraph(text: str) -> Digraph:
    vertices, arcs = _vertices_and_pairs(text, "arc")
    return Digraph(vertices, arcs)


def _edge_of(g: Graph, u: str, v: str, no: int):
    e = g.edge(u, v)
    if e not in g._eindex:
        raise ParseError(f"line {no}: {u} {v} is not an edge")
    return e


def parse_labeling(text: str, g: Graph) -> Labeling:
    """``label: a b <integer>`` per edge; every edge exactly once."""
    mapping = {}
    for no, key, toks in _lines(text):
        if key != "label" or len(toks) != 3:
            raise ParseError(f"line {no}: expected 'label: u v <integer>'")
        e = _edge_of(g, toks[0], toks[1], no)
        if e in mapping:
            raise ParseError(f"line {no}: edge {e[0]} {e[1]} labeled twice")
        mapping[e] = _int(toks[2], no)
    missing = [e for e in g.edges if e not in mapping]
    if missing:
        raise ParseError(f"edges without a label: {' '.join(f'{u}-{v}' for u, v in missing)}")
    return Labeling.from_mapping(g, mapping)


def parse_kset(text: str, g: Graph) -> list[list[tuple[str, str]]]:
    """One edge set per line, written as space-separated vertex pairs."""
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        if len(toks) % 2:
            raise ParseError(f"line {no}: odd number of vertices in an edge list")
        out.append([_edge_of(g, toks[i], toks[i + 1], no) for i in range(0, len(toks), 2)])
    return out


def parse_weights(text: str) -> dict[int, int]:
    """``<K-index>: <integer>`` lines; indices count K-set lines from 1."""
    out: dict[int, int] = {}
    for no, key, toks in _lines(text):
        idx = _int(key, no)
        if len(toks) != 1:
            raise ParseError(f"line {no}: expected '<index>: <integer>'")
        if idx in out:
            raise ParseError(f"line {no}: index {idx} given twice")
        out[idx] = _int(toks[0], no)
    return out


def _element(m: Matroid, toks: list[str], no: int):
    if len(toks) == 1 and toks[0] in m._index:
        return toks[0]
    if len(toks) == 2:
        for e in ((toks[0], toks[1]), (toks[1], toks[0])):
            if e in m._index:
                return e
    raise ParseError(f"line {no}: {' '.join(toks)!r} is not a ground element")


def _element_list(m: Matroid, toks: list[str], no: int) -> list:
    """Plain tokens, or vertex pairs when the ground set consists of edges."""
    if m.ground and isinstance(m.ground[0], tuple):
        if len(toks) % 2:
            raise ParseError(f"line {no}: odd number of vertices in an edge list")
        return [_element(m, toks[i : i + 2], no) for i in range(0, len(toks), 2)]
    return [_element(m, [t], no) for t in toks]


def parse_matroid_labels(text: str, m: Matroid) -> dict:
    """``label: <element> <integer>``; graphic elements are written ``u v``."""
    out = {}
    for no, key, toks in _lines(text):
        if key != "label" or len(toks) < 2:
            raise ParseError(f"line {no}: expected 'label: <element> <integer>'")
        e = _element(m, toks[:-1], no)
        if e in out:
            raise ParseError(f"line {no}: element labeled twice")
        out[e] = _int(toks[-1], no)
    missing = [e for e in m.ground if e not in out]
    if missing:
        raise ParseError(f"elements without a label: {missing}")
    return out


def parse_matroid_kset(text: str, m: Matroid) -> list[list]:
    """One element set per line; ``{}`` stands for the empty set (a loop's broken circuit)."""
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        out.append([] if toks == ["{}"] else _element_list(m, toks, no))
    return out


def parse_matroid(text: str, base_dir: Path | str = ".") -> Matroid:
    """``ground:`` plus ``independent:`` lines, or a ``graphic:``/``uniform:`` constructor.

    Axiom violations raise :class:`~chromnbc.errors.MatroidAxiomError`.
    """
    ground: list[str] | None = None
    independents: list[list[str]] = [[]]
    ctor: tuple[str, list[str], int] | None = None
    for no, key, toks in _lines(text):
        if key == "ground":
            if ground is not None:
                raise ParseError(f"line {no}: ground set given twice")
            if len(set(toks)) != len(toks):
                raise ParseError(f"line {no}: repeated ground element")
            ground = toks
        elif key == "independent":
            if ground is None:
                raise ParseError(f"line {no}: 'independent' before 'ground'")
            for t in toks:
                if t not in ground:
                    raise ParseError(f"line {no}: {t!r} is not a ground element")
            independents.append(toks)
        elif key in ("graphic", "uniform"):
            if ctor is not None:
                raise ParseError(f"line {no}: more than one constructor line")
            ctor = (key, toks, no)
        else:
            raise ParseError(f"line {no}: unknown key {key!r}")
    if ctor is None:
        if ground is None:
            raise ParseError("missing 'ground:' line")
        return validate_matroid(ground, independents)
    key, toks, no = ctor
    if len(independents) > 1:
        raise ParseError(f"line {no}: constructor lines cannot be mixed with 'independent' lines")
    if key == "uniform":
        if len(toks) != 2:
            raise ParseError(f"line {no}: expected 'uniform: k n'")
        k, n = _int(toks[0], no), _int(toks[1], no)
        if not 0 <= k <= n:
            raise ParseError(f"line {no}: need 0 <= k <= n")
        if ground is not None and len(ground) != n:
            raise ParseError(f"line {no}: ground set has {len(ground)} elements, expected {n}")
        return uniform_matroid(k, n, ground)
    if len(toks) != 1:
        raise ParseError(f"line {no}: expected 'graphic: <graph-file>'")
    if ground is not None:
        raise ParseError(f"line {no}: a graphic matroid takes its ground set from the graph")
    path = Path(base_dir) / toks[0]
    if not path.exists():
        g = builtin_graph(toks[0])
        if g is not None:
            return graphical_matroid(g)
    try:
        gtext = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"line {no}: cannot read {path}: {exc.strerror}") from None
    return graphical_matroid(parse_graph(gtext))


def builtin_graph(name: str) -> Graph | None:
    """``triangle``, ``K<n>``, ``C<n>``, ``P<n>`` or a named corpus graph."""
    from .corpus import named_graphs

    if name == "triangle":
        return complete_graph(3)
    m = re.fullmatch(r"([KCP])(\d+)", name)
    if m:
        n = int(m.group(2))
        make = {"K": complete_graph, "C": cycle_graph, "P": path_graph}[m.group(1)]
        if m.group(1) != "C" or n >= 3:
            return make(n)
    return named_graphs().get(name)


def detect_kind(text: str) -> str:
    """``graph``, ``digraph`` or ``matroid`` from the keys used in a file."""
    keys = set()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if ":" in line:
            keys.add(line.split(":", 1)[0].strip())
    if keys & {"ground", "independent", "graphic", "uniform"}:
        return "matroid"
    if "arc" in keys:
        return "digraph"
    return "graph"
