"""Exact inverse Kostka matrix entries, three ways, with cross-validation.

The package computes the coefficients that expand monomial symmetric
functions over Schur functions: two independent recurrences and a signed
brute-force enumeration, closed forms for structured shapes, the chain
models whose signed counts reproduce the entries, and the mod-p coefficient
rows of Steenrod operations on Chern and Stiefel-Whitney classes.
All arithmetic is exact.
"""

from .closedforms import (
    FormulaDomainError,
    corollary3,
    corollary4,
    corollary5,
    g_polynomial,
    h_coefficient_check,
    h_polynomial,
    h_polynomial_matrix,
    lemma5,
    lemma6,
)
from .inverse import (
    ChainS,
    ChainT,
    SolutionPair,
    cancellation_zero,
    enumerate_chains_S,
    enumerate_chains_T,
    f_polynomial,
    inv_kostka_bruteforce,
    inv_kostka_duan,
    inv_kostka_er,
    inverse_kostka_matrix,
    kostka_matrix,
    monomial_to_schur,
    solution_pairs,
    tail_reduction,
    verify_corollary1,
)
from .partitions import (
    Partition,
    PartitionParseError,
    WeightMismatchError,
    enumerate_partitions,
    er_reduction,
    last_nonzero_compare,
    remove_part,
    vertical_strip_predecessors,
    vertical_strip_successors,
)
from .steenrod import (
    EPolynomial,
    ModPExpansion,
    epoly_to_polynomial,
    epoly_to_schur,
    expansion_mod,
    giambelli_hook2,
    integral_wu_lift,
    steenrod_P,
    steenrod_Sq,
    wu_rhs,
)
from .symfunc import (
    SchurExpansion,
    SparsePolynomial,
    alternant,
    elementary_symmetric,
    eliminate_last,
    expansion_to_polynomial,
    kostka_number,
    monomial_symmetric,
    pieri_multiply,
    schur,
    staircase,
)
from .unipoly import UniPolynomial
from .verify import VerifyReport, exact_integer_inverse, verify_suite

__version__ = "0.1.0"

__all__ = [
    "ChainS",
    "ChainT",
    "EPolynomial",
    "FormulaDomainError",
    "ModPExpansion",
    "Partition",
    "PartitionParseError",
    "SchurExpansion",
    "SolutionPair",
    "SparsePolynomial",
    "UniPolynomial",
    "VerifyReport",
    "WeightMismatchError",
    "alternant",
    "cancellation_zero",
    "corollary3",
    "corollary4",
    "corollary5",
    "elementary_symmetric",
    "eliminate_last",
    "enumerate_chains_S",
    "enumerate_chains_T",
    "enumerate_partitions",
    "epoly_to_polynomial",
    "epoly_to_schur",
    "er_reduction",
    "exact_integer_inverse",
    "expansion_mod",
    "expansion_to_polynomial",
    "f_polynomial",
    "g_polynomial",
    "giambelli_hook2",
    "h_coefficient_check",
    "h_polynomial",
    "h_polynomial_matrix",
    "integral_wu_lift",
    "inv_kostka_bruteforce",
    "inv_kostka_duan",
    "inv_kostka_er",
    "inverse_kostka_matrix",
    "kostka_matrix",
    "kostka_number",
    "last_nonzero_compare",
    "lemma5",
    "lemma6",
    "monomial_symmetric",
    "monomial_to_schur",
    "pieri_multiply",
    "remove_part",
    "schur",
    "solution_pairs",
    "staircase",
    "steenrod_P",
    "steenrod_Sq",
    "tail_reduction",
    "verify_corollary1",
    "verify_suite",
    "vertical_strip_predecessors",
    "vertical_strip_successors",
    "wu_rhs",
]
