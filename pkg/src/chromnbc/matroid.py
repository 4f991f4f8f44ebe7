"""Matroids given by an explicit independence family.

Subsets of the ground set are bitmasks over ``Matroid.ground`` (bit ``i`` is
``ground[i]``). The constructor tabulates the rank of all 2^n subsets, so the
ground set is capped at :data:`~chromnbc.errors.MAX_GROUND` elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

from .broken_circuits import (
    BrokenCircuitSet,
    WeightAssignment,
    alternating_weighted_sum,
    broken_circuit_masks,
)
from .errors import MAX_GROUND, MatroidAxiomError, PreconditionError, check_capacity
from .graph import Graph, mask_is_forest
from .symfunc import IntPolynomial


class Matroid:
    """A matroid ``(ground, independents)``; validated on construction."""

    def __init__(self, ground: Sequence[Hashable], independents: Iterable[Iterable], validate: bool = True):
        self.ground = tuple(dict.fromkeys(ground))
        check_capacity("ground set size", len(self.ground), MAX_GROUND)
        self._index = {e: i for i, e in enumerate(self.ground)}
        masks = set()
        for s in independents:
            masks.add(self.mask(s))
        self._init(masks, validate)

    @classmethod
    def from_masks(cls, ground: Sequence[Hashable], masks: Iterable[int], validate: bool = True) -> Matroid:
        m = cls.__new__(cls)
        m.ground = tuple(dict.fromkeys(ground))
        check_capacity("ground set size", len(m.ground), MAX_GROUND)
        m._index = {e: i for i, e in enumerate(m.ground)}
        m._init(set(masks), validate)
        return m

    def _init(self, masks: set[int], validate: bool) -> None:
        n = len(self.ground)
        full = (1 << n) - 1
        if any(s & ~full for s in masks):
            raise ValueError("independent set outside the ground set")
        self._indep = bytearray(1 << n)
        for s in masks:
            self._indep[s] = 1
        # Rank by DP: a dependent set's largest independent subset misses some element.
        rank = [0] * (1 << n)
        for s in range(1, 1 << n):
            if self._indep[s]:
                rank[s] = s.bit_count()
            else:
                best, t = 0, s
                while t:
                    low = t & -t
                    r = rank[s ^ low]
                    if r > best:
                        best = r
                    t ^= low
                rank[s] = best
        self._rank = rank
        if validate:
            _check_axioms(self, sorted(masks))

    @property
    def size(self) -> int:
        return len(self.ground)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.ground)) - 1

    def mask(self, s: Iterable) -> int:
        out = 0
        for e in s:
            if e not in self._index:
                raise ValueError(f"{e!r} is not in the ground set")
            out |= 1 << self._index[e]
        return out

    def unmask(self, mask: int) -> frozenset:
        return frozenset(e for i, e in enumerate(self.ground) if mask >> i & 1)

    def is_independent_mask(self, s: int) -> bool:
        return bool(self._indep[s])

    def independent_masks(self) -> list[int]:
        return [s for s in range(len(self._indep)) if self._indep[s]]

    def rank_mask(self, s: int) -> int:
        return self._rank[s]

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        out = []
        for s in range(1 << len(self.ground)):
            if self._indep[s]:
                continue
            t, minimal = s, True
            while t:
                low = t & -t
                if not self._indep[s ^ low]:
                    minimal = False
                    break
                t ^= low
            if minimal:
                out.append(s)
        return tuple(sorted(out, key=lambda m: (m.bit_count(), m)))

    def is_flat_mask(self, t: int) -> bool:
        """Circuit-completion test: no circuit has exactly one element outside ``t``."""
        return all((c & ~t).bit_count() != 1 for c in self.circuit_masks)

    def is_flat_by_rank_mask(self, t: int) -> bool:
        """Maximality test: every one-element extension raises the rank."""
        r = self._rank[t]
        rest = self.full_mask & ~t
        while rest:
            low = rest & -rest
            if self._rank[t | low] == r:
                return False
            rest ^= low
        return True

    @cached_property
    def flat_masks(self) -> tuple[int, ...]:
        """All flats in a linear extension of inclusion (by size, then mask)."""
        flats = [t for t in range(1 << len(self.ground)) if self.is_flat_mask(t)]
        return tuple(sorted(flats, key=lambda m: (m.bit_count(), m)))

    def closure_mask(self, t: int) -> int:
        out = self.full_mask
        for f in self.flat_masks:
            if not t & ~f:
                out &= f
        return out

    def is_loopless(self) -> bool:
        return all(self._indep[1 << i] for i in range(len(self.ground)))

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and self._indep == other._indep

    def __hash__(self):
        return hash((self.ground, bytes(self._indep)))

    def __repr__(self):
        return f"Matroid(ground={list(self.ground)}, rank={self._rank[self.full_mask]})"


def _check_axioms(m: Matroid, indep: list[int]) -> None:
    show = m.unmask
    if not m._indep[0]:
        raise MatroidAxiomError(1, (), "axiom 1 violated: the empty set is not independent")
    for y in indep:
        t = y
        while t:
            low = t & -t
            if not m._indep[y ^ low]:
                # smallest missing subset of y, for a readable witness
                z = next(s for s in range(y + 1) if not s & ~y and not m._indep[s])
                raise MatroidAxiomError(
                    2,
                    (show(z), show(y)),
                    f"axiom 2 violated: {_fmt(show(z))} ⊆ {_fmt(show(y))} is not independent",
                )
            t ^= low
    # With axioms 1-2 in force, exchange fails iff some independent Y is maximal
    # inside T = Y ∪ {x : Y+x dependent} while rank(T) > |Y|.
    full = m.full_mask
    for y in indep:
        ext = 0
        rest = full & ~y
        while rest:
            low = rest & -rest
            if m._indep[y | low]:
                ext |= low
            rest ^= low
        t = full & ~ext
        if m._rank[t] > y.bit_count():
            z = next(
                s for s in indep if not s & ~t and s.bit_count() == m._rank[t]
            )
            raise MatroidAxiomError(
                3,
                (show(y), show(z)),
                f"axiom 3 violated: no element of {_fmt(show(z))} extends {_fmt(show(y))}",
            )


def _fmt(s: frozenset) -> str:
    return "{" + ", ".join(sorted(map(str, s))) + "}"


def validate_matroid(ground: Sequence[Hashable], independents: Iterable[Iterable]) -> Matroid:
    """Build a matroid, raising :class:`MatroidAxiomError` with a witness on failure."""
    ground = tuple(ground)
    check_capacity("ground set size", len(ground), MAX_GROUND)
    return Matroid(ground, independents, validate=True)


def rank(m: Matroid, s: Iterable) -> int:
    return m.rank_mask(m.mask(s))


def circuits(m: Matroid) -> list[frozenset]:
    """Minimal dependent sets."""
    return [m.unmask(c) for c in m.circuit_masks]


def is_flat(m: Matroid, t: Iterable) -> bool:
    return m.is_flat_mask(m.mask(t))


def closure(m: Matroid, t: Iterable) -> frozenset:
    """Intersection of all flats containing ``t``."""
    return m.unmask(m.closure_mask(m.mask(t)))


@dataclass(frozen=True)
class FlatLattice:
    """Flats of a matroid ordered by inclusion."""

    matroid: Matroid
    masks: tuple[int, ...]

    @property
    def bottom(self) -> int:
        return self.masks[0]

    @property
    def top(self) -> int:
        return self.masks[-1]

    def flats(self) -> list[frozenset]:
        return [self.matroid.unmask(f) for f in self.masks]

    def __len__(self):
        return len(self.masks)

    def __contains__(self, mask: int) -> bool:
        return mask in self.masks

    def meet(self, a: int, b: int) -> int:
        return a & b

    def join(self, a: int, b: int) -> int:
        return self.matroid.closure_mask(a | b)

    def above(self, a: int) -> list[int]:
        return [g for g in self.masks if not a & ~g]


def flats(m: Matroid) -> FlatLattice:
    return FlatLattice(m, m.flat_masks)


class MoebiusTable:
    """Möbius function values ``mu(F, G)`` for flats ``F ⊆ G``, keyed by mask pairs."""

    def __init__(self, values: dict[tuple[int, int], int]):
        self.values = values

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return self.values[pair]

    def __contains__(self, pair) -> bool:
        return pair in self.values

    def __len__(self):
        return len(self.values)

    def items(self):
        return self.values.items()


def moebius_row(lattice: FlatLattice, low: int) -> dict[int, int]:
    """``{G: mu(low, G)}`` for all flats G ⊇ low, from the defining recursion."""
    row: dict[int, int] = {}
    # masks is a linear extension, so every H below G is finished before G.
    for g in lattice.masks:
        if low & ~g:
            continue
        if g == low:
            row[g] = 1
        else:
            row[g] = -sum(v for h, v in row.items() if not h & ~g and h != g)
    return row


def moebius_table(lattice: FlatLattice) -> MoebiusTable:
    values = {}
    for f in lattice.masks:
        for g, v in moebius_row(lattice, f).items():
            values[(f, g)] = v
    return MoebiusTable(values)


def characteristic_polynomial(m: Matroid) -> tuple[IntPolynomial, IntPolynomial]:
    """``(chi, chi_tilde)`` from the Möbius function of the lattice of flats."""
    lat = flats(m)
    top_rank = m.rank_mask(m.full_mask)
    counts: dict[int, int] = {}
    for f, mu in moebius_row(lat, lat.bottom).items():
        k = top_rank - m.rank_mask(f)
        counts[k] = counts.get(k, 0) + mu
    chi = IntPolynomial.from_exponent_counts(counts)
    chi_tilde = chi if lat.bottom == 0 else IntPolynomial()
    return chi, chi_tilde


def _labels(m: Matroid, labels: Mapping) -> tuple[int, ...]:
    missing = [e for e in m.ground if e not in labels]
    if missing:
        raise ValueError(f"elements without a label: {missing}")
    return tuple(int(labels[e]) for e in m.ground)


def matroid_broken_circuits(m: Matroid, labels: Mapping) -> BrokenCircuitSet:
    """Circuits minus their unique max-label element; a loop yields the empty set."""
    return BrokenCircuitSet.of(m.ground, broken_circuit_masks(m.circuit_masks, _labels(m, labels)))


def matroid_kset(m: Matroid, labels: Mapping, sets: Iterable[Iterable]) -> BrokenCircuitSet:
    return matroid_broken_circuits(m, labels).subset(m.mask(s) for s in sets)


def _validate_kset(m: Matroid, labels: Mapping, kset: BrokenCircuitSet) -> None:
    if kset.elements != m.ground:
        raise PreconditionError("broken-circuit set belongs to a different matroid")
    allowed = set(matroid_broken_circuits(m, labels).masks)
    bad = [k for k in kset.masks if k not in allowed]
    if bad:
        raise PreconditionError(f"not broken circuits: {[sorted(map(str, m.unmask(k))) for k in bad]}")


def _charpol_sum(m: Matroid, forbidden=(), weights=(), rank_free: bool = False) -> IntPolynomial:
    top = m.rank_mask(m.full_mask)
    counts: dict[int, int] = {}
    for f in range(1 << m.size):
        if forbidden and not all(k & ~f for k in forbidden):
            continue
        w = 1
        for k, a in weights:
            if not k & ~f:
                w *= a
        if not w:
            continue
        deg = top - (f.bit_count() if rank_free else m.rank_mask(f))
        counts[deg] = counts.get(deg, 0) + (-w if f.bit_count() & 1 else w)
    return IntPolynomial.from_exponent_counts(counts)


def charpol_subset(m: Matroid) -> IntPolynomial:
    """Sum over F ⊆ E of (-1)^|F| x^(r(E) - r(F))."""
    return _charpol_sum(m)


def charpol_weighted(m: Matroid, labels: Mapping, kset: BrokenCircuitSet, weights: WeightAssignment) -> IntPolynomial:
    _validate_kset(m, labels, kset)
    if weights.kset != kset:
        raise PreconditionError("weights belong to a different broken-circuit set")
    return _charpol_sum(m, weights=weights.pairs())


def charpol_kfree(m: Matroid, labels: Mapping, kset: BrokenCircuitSet) -> IntPolynomial:
    _validate_kset(m, labels, kset)
    return _charpol_sum(m, forbidden=kset.masks)


def charpol_nbc(m: Matroid, labels: Mapping) -> IntPolynomial:
    return _charpol_sum(m, forbidden=matroid_broken_circuits(m, labels).masks)


def charpol_whitney(m: Matroid, labels: Mapping) -> IntPolynomial:
    """NBC sum with x^(r(E) - |F|); needs an injective labeling."""
    lab = _labels(m, labels)
    if len(set(lab)) != len(lab):
        raise PreconditionError("the rank-free NBC form needs an injective labeling")
    return _charpol_sum(m, forbidden=matroid_broken_circuits(m, labels).masks, rank_free=True)


def flat_cancellation_sum(m: Matroid, flat: int, weights: WeightAssignment) -> int:
    """Sum over B ⊆ flat of (-1)^|B| prod_{K ⊆ B} a_K."""
    return alternating_weighted_sum(flat, weights.pairs())


def graphical_matroid(g: Graph) -> Matroid:
    """Cycle matroid: ground set is the edges, independents are the forests."""
    check_capacity("edge count", g.num_edges, MAX_GROUND)
    forests = [s for s in range(1 << g.num_edges) if mask_is_forest(g, s)]
    return Matroid.from_masks(g.edges, forests, validate=False)


def uniform_matroid(k: int, n: int, names: Sequence[Hashable] | None = None) -> Matroid:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    check_capacity("ground set size", n, MAX_GROUND)
    ground = list(names) if names is not None else [str(i) for i in range(1, n + 1)]
    if len(ground) != n:
        raise ValueError("wrong number of element names")
    return Matroid.from_masks(ground, [s for s in range(1 << n) if s.bit_count() <= k], validate=False)
