"""Radial Toeplitz and anti-Wick operators on the Segal-Bargmann space.

Radial symbols act diagonally on the occupation basis; this package computes
their eigenvalue sequences (closed form and independent quadrature), decides
symbol-class membership, applies the operators by genuine Bargmann projection,
and settles composition questions for the Gaussian symbol family.
"""

from .composition import (
    CLOSED_IN_P,
    NOT_TOEPLITZ_IN_P,
    UNRECOGNIZED,
    CompositionVerdict,
    compose_gaussian,
    compose_radial,
    compose_sequences,
    moyal_gaussian,
    moyal_partial_sum,
    recognize_gaussian,
)
from .errors import (
    DivergentMoment,
    DomainViolation,
    DomainWarning,
    EnvelopeViolation,
    NonConvergent,
)
from .operators import (
    DiagonalOperator,
    EquivalenceReport,
    anti_wick_matrix_element,
    diagonal_apply,
    equivalence_report,
    extension_apply,
    in_natural_domain,
    toeplitz_apply,
)
from .spaces import (
    FockPolynomial,
    L2Sequence,
    basis_polynomial,
    coherent_overlap,
    fock_inner,
    fock_inner_quadrature,
    from_sequence,
    reproduce_at,
    resolution_identity_matrix,
    to_sequence,
)
from .spectra import (
    EigenSequence,
    GeometricTail,
    QuadratureSpec,
    eigen_sequence,
    laguerre_nodes,
    quadrature_eigen,
)
from .symbols import (
    ClassificationReport,
    EnvelopedSymbol,
    GaussianRadialSymbol,
    PolynomialRadialSymbol,
    RadialSymbol,
    Trivalent,
    classify,
    eval_symbol,
    gamma,
    maxwell_boltzmann,
    symbol_from_json,
    symbol_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "CLOSED_IN_P",
    "NOT_TOEPLITZ_IN_P",
    "UNRECOGNIZED",
    "ClassificationReport",
    "CompositionVerdict",
    "DiagonalOperator",
    "DivergentMoment",
    "DomainViolation",
    "DomainWarning",
    "EigenSequence",
    "EnvelopeViolation",
    "EnvelopedSymbol",
    "EquivalenceReport",
    "FockPolynomial",
    "GaussianRadialSymbol",
    "GeometricTail",
    "L2Sequence",
    "NonConvergent",
    "PolynomialRadialSymbol",
    "QuadratureSpec",
    "RadialSymbol",
    "Trivalent",
    "anti_wick_matrix_element",
    "basis_polynomial",
    "classify",
    "coherent_overlap",
    "compose_gaussian",
    "compose_radial",
    "compose_sequences",
    "diagonal_apply",
    "eigen_sequence",
    "equivalence_report",
    "eval_symbol",
    "extension_apply",
    "fock_inner",
    "fock_inner_quadrature",
    "from_sequence",
    "gamma",
    "in_natural_domain",
    "laguerre_nodes",
    "maxwell_boltzmann",
    "moyal_gaussian",
    "moyal_partial_sum",
    "quadrature_eigen",
    "recognize_gaussian",
    "reproduce_at",
    "resolution_identity_matrix",
    "symbol_from_json",
    "symbol_to_json",
    "to_sequence",
    "toeplitz_apply",
]
