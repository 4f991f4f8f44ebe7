"""Exact chromatic and characteristic polynomials through broken-circuit subset sums."""

from .broken_circuits import BrokenCircuitSet, Labeling, WeightAssignment, broken_circuits
from .chromatic import (
    chromatic_polynomial_kfree,
    chromatic_polynomial_nbc,
    chromatic_polynomial_subset,
    chromatic_polynomial_weighted,
    chromatic_polynomial_whitney,
    count_proper_colorings,
    csf_kfree,
    csf_nbc,
    csf_subset,
    csf_weighted,
)
from .digraph import Digraph, digraph_chromatic_sum
from .errors import CapacityError, ChromnbcError, MatroidAxiomError, ParseError, PreconditionError
from .graph import EdgeSubset, Graph
from .matroid import Matroid, characteristic_polynomial, graphical_matroid, uniform_matroid
from .symfunc import IntPolynomial, PowerSumVector

__all__ = [
    "BrokenCircuitSet", "CapacityError", "ChromnbcError", "Digraph", "EdgeSubset", "Graph",
    "IntPolynomial", "Labeling", "Matroid", "MatroidAxiomError", "ParseError", "PowerSumVector",
    "PreconditionError", "WeightAssignment", "broken_circuits", "characteristic_polynomial",
    "chromatic_polynomial_kfree", "chromatic_polynomial_nbc", "chromatic_polynomial_subset",
    "chromatic_polynomial_weighted", "chromatic_polynomial_whitney", "count_proper_colorings",
    "csf_kfree", "csf_nbc", "csf_subset", "csf_weighted", "digraph_chromatic_sum",
    "graphical_matroid", "uniform_matroid",
]
