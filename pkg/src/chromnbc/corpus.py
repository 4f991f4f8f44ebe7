"""Built-in test corpus: small graphs, matroids and comparability digraphs."""

from __future__ import annotations

import random
from itertools import combinations

from .broken_circuits import BrokenCircuitSet, Labeling, WeightAssignment
from .digraph import Digraph, chain_digraph, random_comparability_digraph
from .graph import Graph, complete_graph, cycle_graph, path_graph
from .matroid import Matroid, graphical_matroid, uniform_matroid

DEFAULT_SEED = 20240601
NUM_RANDOM_WEIGHTS = 10


def labeled_graphs(n: int) -> list[Graph]:
    """All 2^C(n,2) graphs on the vertex set 1..n."""
    vs = [str(i) for i in range(1, n + 1)]
    pairs = list(combinations(vs, 2))
    return [
        Graph(vs, [p for i, p in enumerate(pairs) if mask >> i & 1])
        for mask in range(1 << len(pairs))
    ]


def named_graphs() -> dict[str, Graph]:
    w4 = Graph(
        "12345",
        [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")] + [(v, "5") for v in "1234"],
    )
    house = Graph("12345", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1"), ("3", "5"), ("4", "5")])
    bowtie = Graph("12345", [("1", "2"), ("2", "3"), ("1", "3"), ("3", "4"), ("4", "5"), ("3", "5")])
    k23 = Graph("12345", [(a, b) for a in "12" for b in "345"])
    star = Graph("12345", [("1", b) for b in "2345"])
    return {
        "K5": complete_graph(5),
        "C5": cycle_graph(5),
        "W4": w4,
        "house": house,
        "bowtie": bowtie,
        "K2,3": k23,
        "P5": path_graph(5),
        "star5": star,
    }


def graph_corpus() -> list[tuple[str, Graph]]:
    out = []
    for n in range(5):
        for i, g in enumerate(labeled_graphs(n)):
            out.append((f"n{n}#{i}", g))
    out.extend(named_graphs().items())
    return out


def loop_matroids() -> dict[str, Matroid]:
    return {
        "loop": Matroid(["e"], [[]]),
        "U1,2+loop": Matroid(["a", "b", "c"], [[], ["a"], ["b"]]),
    }


def matroid_corpus() -> list[tuple[str, Matroid]]:
    out = []
    for n in range(6):
        for k in range(n + 1):
            out.append((f"U{k},{n}", uniform_matroid(k, n)))
    for name, g in graph_corpus():
        out.append((f"M({name})", graphical_matroid(g)))
    out.extend(loop_matroids().items())
    return out


def digraph_corpus(seed: int = DEFAULT_SEED, count: int = 20) -> list[tuple[str, Digraph]]:
    rng = random.Random(seed)
    out = [("chain3", chain_digraph(3))]
    for i in range(count):
        n = rng.randint(1, 6)
        out.append((f"poset#{i}(n={n})", random_comparability_digraph(n, rng, p=rng.uniform(0.2, 0.7))))
    return out


def random_labels(count: int, rng: random.Random, kind: str) -> tuple[int, ...]:
    """``injective`` (a shuffled 1..count), ``ties`` (values 1..2) or ``signed`` (-3..3)."""
    if kind == "injective":
        labels = list(range(1, count + 1))
        rng.shuffle(labels)
        return tuple(labels)
    if kind == "ties":
        return tuple(rng.randint(1, 2) for _ in range(count))
    if kind == "signed":
        return tuple(rng.randint(-3, 3) for _ in range(count))
    raise ValueError(f"unknown labeling kind {kind!r}")


LABEL_KINDS = ("injective", "ties", "signed")


def graph_labelings(g: Graph, rng: random.Random) -> list[Labeling]:
    return [Labeling(g, random_labels(g.num_edges, rng, k)) for k in LABEL_KINDS]


def random_subkset(kset: BrokenCircuitSet, rng: random.Random) -> BrokenCircuitSet:
    return BrokenCircuitSet.of(kset.elements, [m for m in kset.masks if rng.random() < 0.5])


def weight_assignments(kset: BrokenCircuitSet, rng: random.Random) -> list[WeightAssignment]:
    """All-zero, all-one, then seeded random integer weights."""
    out = [WeightAssignment.constant(kset, 0), WeightAssignment.constant(kset, 1)]
    out.extend(WeightAssignment.random(kset, rng) for _ in range(NUM_RANDOM_WEIGHTS))
    return out
