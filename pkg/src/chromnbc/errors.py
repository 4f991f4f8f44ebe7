"""Exception types shared across the package."""

from __future__ import annotations

# Enumeration limits; every 2^n loop is guarded by one of these.
MAX_SUBSET_EDGES = 20
MAX_GROUND = 12
MAX_COLORINGS = 10**7


class ChromnbcError(Exception):
    """Base class for all library errors."""


class ParseError(ChromnbcError, ValueError):
    """Malformed input file."""


class CapacityError(ChromnbcError, ValueError):
    """Input exceeds an enumeration size guard."""


class PreconditionError(ChromnbcError, ValueError):
    """Input violates an operation's hypotheses."""


class MatroidAxiomError(PreconditionError):
    """An independence family fails one of the three matroid axioms.

    ``witness`` holds the offending sets: ``()`` for axiom 1, ``(Z, Y)`` with
    ``Z ⊆ Y`` for axiom 2 and ``(Y, Z)`` with ``|Y| < |Z|`` for axiom 3.
    """

    def __init__(self, axiom: int, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


def check_capacity(what: str, size: int, limit: int) -> None:
    if size > limit:
        raise CapacityError(f"{what} is {size}, above the limit of {limit}")
