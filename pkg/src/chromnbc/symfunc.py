"""Integer polynomials, the power-sum basis, and a truncated monomial oracle.

All coefficients are Python ints, so every identity checked with these types
is exact.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import CapacityError
from .graph import Partition, as_partition

MAX_TRUNCATED_VARS = 6
MAX_TRUNCATED_LENGTH = 8


class IntPolynomial:
    """Dense univariate polynomial; ``coeffs[i]`` is the coefficient of x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_exponent_counts(cls, counts: Mapping[int, int]) -> IntPolynomial:
        if not counts:
            return cls()
        cs = [0] * (max(counts) + 1)
        for k, c in counts.items():
            cs[k] += c
        return cls(cs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    evaluate = __call__

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def coefficient_string(self) -> str:
        """Ascending coefficients separated by spaces, ``0`` for zero."""
        return " ".join(map(str, self.coeffs)) if self.coeffs else "0"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


X = IntPolynomial([0, 1])


class PowerSumVector:
    """An element of the symmetric functions written in the p-basis.

    Stored as a mapping from canonical partitions to nonzero integers.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        acc: dict[Partition, int] = {}
        for lam, c in (terms or {}).items():
            key = as_partition(lam)
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def from_counts(cls, counts: dict[Partition, int]) -> PowerSumVector:
        """Trusted constructor for already-canonical partitions."""
        v = cls.__new__(cls)
        v._terms = {k: c for k, c in counts.items() if c}
        return v

    @property
    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Partition, int]]:
        """Terms in ascending lexicographic order of partitions."""
        return sorted(self._terms.items())

    def coefficient(self, lam: Iterable[int]) -> int:
        return self._terms.get(as_partition(lam), 0)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        if not isinstance(other, PowerSumVector):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return PowerSumVector.from_counts(acc)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, PowerSumVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c: int) -> PowerSumVector:
        return PowerSumVector.from_counts({k: v * c for k, v in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, PowerSumVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self.items()))

    def lines(self) -> list[str]:
        return [f"[{','.join(map(str, lam))}]: {c}" for lam, c in self.items()]

    def __str__(self):
        return "\n".join(self.lines())

    def __repr__(self):
        return f"PowerSumVector({dict(self.items())})"


class TruncatedPoly:
    """Polynomial in x_1..x_n with integer coefficients, keyed by exponent tuples."""

    __slots__ = ("num_vars", "_terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        self.num_vars = num_vars
        acc: dict[tuple[int, ...], int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != num_vars:
                raise ValueError(f"exponent tuple {exps} has wrong length")
            acc[exps] = acc.get(exps, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def one(cls, n: int) -> TruncatedPoly:
        return cls(n, {(0,) * n: 1})

    @classmethod
    def power_sum(cls, n: int, k: int) -> TruncatedPoly:
        """x_1^k + ... + x_n^k."""
        terms = {}
        for i in range(n):
            e = [0] * n
            e[i] = k
            terms[tuple(e)] = terms.get(tuple(e), 0) + 1
        return cls(n, terms)

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._terms.items())

    def _check(self, other: TruncatedPoly) -> None:
        if other.num_vars != self.num_vars:
            raise ValueError("variable counts differ")

    def __add__(self, other):
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        self._check(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return TruncatedPoly(self.num_vars, acc)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedPoly(self.num_vars, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        self._check(other)
        acc: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return TruncatedPoly(self.num_vars, acc)

    __rmul__ = __mul__

    def evaluate(self, point: Iterable[int]) -> int:
        pt = tuple(point)
        if len(pt) != self.num_vars:
            raise ValueError("point has wrong dimension")
        total = 0
        for exps, c in self._terms.items():
            term = c
            for x, e in zip(pt, exps):
                term *= x**e
            total += term
        return total

    def __eq__(self, other):
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self):
        return hash((self.num_vars, tuple(self.items())))

    def __repr__(self):
        return f"TruncatedPoly({self.num_vars}, {dict(self.items())})"


def psum_from_partition(lam: Iterable[int]) -> PowerSumVector:
    return PowerSumVector({as_partition(lam): 1})


def psum_add(v: PowerSumVector, w: PowerSumVector) -> PowerSumVector:
    return v + w


def psum_scale(v: PowerSumVector, c: int) -> PowerSumVector:
    return v.scale(c)


def psum_specialize(v: PowerSumVector, q: int) -> int:
    """Value at x_1 = ... = x_q = 1 and all other variables 0.

    Under this substitution each p_n becomes q, so p_lambda becomes
    q ** len(lambda) (and p of the empty partition stays 1).
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    return sum(c * q ** len(lam) for lam, c in v.items())


def psum_expand_truncated(v: PowerSumVector, n: int) -> TruncatedPoly:
    """Expand ``v`` in the monomials of x_1..x_n (other variables set to 0)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_TRUNCATED_VARS:
        raise CapacityError(f"{n} variables, above the limit of {MAX_TRUNCATED_VARS}")
    for lam, _ in v.items():
        if len(lam) > MAX_TRUNCATED_LENGTH:
            raise CapacityError(
                f"partition {lam} has length {len(lam)}, above the limit of {MAX_TRUNCATED_LENGTH}"
            )
    cache: dict[int, TruncatedPoly] = {}
    total = TruncatedPoly(n)
    for lam, c in v.items():
        term = TruncatedPoly.one(n)
        for part in lam:
            if part not in cache:
                cache[part] = TruncatedPoly.power_sum(n, part)
            term = term * cache[part]
        total = total + term * c
    return total
