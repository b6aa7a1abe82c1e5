"""Exact invariants of central hyperplane arrangements over Q.

The package computes intersection lattices, characteristic polynomials,
inductive freeness certificates, the bivariate polynomial built from the
graded modules of higher derivations, and a degreewise linear-algebra
oracle that checks everything independently.
"""

from .arrangement import (Arrangement, builtin, canonical_form,
                          format_arrangement, parse_arrangement)
from .errors import (ArrinvError, DimensionTooSmall, DuplicateHyperplane,
                     InconsistentInput, IndexOutOfRange, MalformedInput,
                     NotAFlat, UnknownName, UnsupportedField, ZeroForm)
from .freeness import (FREE, NOT_FREE, UNKNOWN, FreenessCertificate,
                       certify_inductively_free, factorization_test)
from .lattice import Flat, FlatLattice, char_poly_as_factors
from .oracle import (HilbertTable, bseq_exactness_check, default_cutoff,
                     dim_Dp, dim_Dp_basis, euler_exactness_check,
                     fr_predicted_hilbert, hilbert_table,
                     promote_to_polynomial, psi_truncated_from_table,
                     terao_B_membership_check, wedge_degrees)
from .polyring import BivariatePolynomial, TruncatedSeries
from .stengine import (ConjectureReport, PsiResult, chi_from_psi,
                       conjecture_checks, phi_from_psi, psi_addition,
                       psi_auto, psi_deletion, psi_free, psi_generic,
                       reduced_free)

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "builtin", "canonical_form", "format_arrangement",
    "parse_arrangement",
    "ArrinvError", "DimensionTooSmall", "DuplicateHyperplane",
    "InconsistentInput", "IndexOutOfRange", "MalformedInput", "NotAFlat",
    "UnknownName", "UnsupportedField", "ZeroForm",
    "FREE", "NOT_FREE", "UNKNOWN", "FreenessCertificate",
    "certify_inductively_free", "factorization_test",
    "Flat", "FlatLattice", "char_poly_as_factors",
    "HilbertTable", "bseq_exactness_check", "default_cutoff", "dim_Dp",
    "dim_Dp_basis", "euler_exactness_check", "fr_predicted_hilbert",
    "hilbert_table", "promote_to_polynomial", "psi_truncated_from_table",
    "terao_B_membership_check", "wedge_degrees",
    "BivariatePolynomial", "TruncatedSeries",
    "ConjectureReport", "PsiResult", "chi_from_psi", "conjecture_checks",
    "phi_from_psi", "psi_addition", "psi_auto", "psi_deletion", "psi_free",
    "psi_generic", "reduced_free",
]
