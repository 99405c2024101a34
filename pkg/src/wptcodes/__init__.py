"""Generalized toric codes on subgroups of weighted projective tori.

Construct evaluation codes over a prime field GF(q) from a weight vector
(w_0, ..., w_n), compute their length, dimension and minimum distance via
closed formulas, and verify every formula independently through evaluation
matrices and exhaustive codeword search.
"""

from .code import (
    CodeSummary,
    GeneratorMatrix,
    Monomial,
    generator_matrix,
    matrix_from_json,
    matrix_from_text,
    matrix_to_json,
    matrix_to_text,
    min_distance_exhaustive,
    rank,
    standard_monomials,
    weight_distribution,
)
from .formulas import (
    DistanceResult,
    P11aContext,
    PlaneContext,
    code_length,
    dimension_nested_sum,
    dimension_p11a,
    distance_bounds_plane,
    distance_p11a,
    envelope_u,
    p11a_context,
    plane_context,
    singleton_defect,
)
from .gf import PrimeField, make_field
from .hilbert import (
    a_invariant,
    a_invariant_full_torus,
    hilbert_function,
    in_regularity,
)
from .ideal import (
    Binomial,
    is_dominating,
    is_mixed,
    lattice_basis,
    vanishing_ideal_generators,
    verify_vanishing,
)
from .torus import PointSet, PointSetKind, enumerate_degenerate_torus, enumerate_full_torus
from .wps import WeightedSpace, dim_S_alpha, frobenius_number, make_space, semigroup_contains

__version__ = "0.1.0"

__all__ = [
    "Binomial",
    "CodeSummary",
    "DistanceResult",
    "GeneratorMatrix",
    "Monomial",
    "P11aContext",
    "PlaneContext",
    "PointSet",
    "PointSetKind",
    "PrimeField",
    "WeightedSpace",
    "a_invariant",
    "a_invariant_full_torus",
    "code_length",
    "dim_S_alpha",
    "dimension_nested_sum",
    "dimension_p11a",
    "distance_bounds_plane",
    "distance_p11a",
    "enumerate_degenerate_torus",
    "enumerate_full_torus",
    "envelope_u",
    "frobenius_number",
    "generator_matrix",
    "hilbert_function",
    "in_regularity",
    "is_dominating",
    "is_mixed",
    "lattice_basis",
    "make_field",
    "make_space",
    "matrix_from_json",
    "matrix_from_text",
    "matrix_to_json",
    "matrix_to_text",
    "min_distance_exhaustive",
    "p11a_context",
    "plane_context",
    "rank",
    "semigroup_contains",
    "singleton_defect",
    "standard_monomials",
    "vanishing_ideal_generators",
    "verify_vanishing",
    "weight_distribution",
]
