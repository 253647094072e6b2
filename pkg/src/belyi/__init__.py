"""Genus-0 single-cycle dynamical Belyi maps, exactly.

Construction of the normalized maps of the polynomial family (d; d-k, k+1, d)
and the symmetric family (d; d-k, 2k+1, d-k) with certified ramification,
their reduction modulo primes with good/bad and (in)separability
classification, the monomial-reduction criterion, and the rational
preperiodic dynamics that follows from it.  All arithmetic is exact
(arbitrary-precision integers and rationals); nothing is floating point.
"""

from .combinatorics import (
    CombinatorialType,
    Family,
    TypeClass,
    classify_type,
    count_closed_form,
    count_nonpolynomial,
    count_polynomial,
    enumerate_types,
    validate,
)
from .construct import (
    BelyiMap,
    Certificate,
    build,
    build_polynomial,
    build_symmetric,
    conjugate,
    normalize_integer_model,
    verify,
)
from .dynamics import (
    AllowedPeriods,
    CycleData,
    FiberSignReport,
    FunctionalGraph,
    PreperReport,
    allowed_periods,
    cycle_multiplier,
    fiber_sign_analysis,
    functional_graph,
    monomial_hypotheses,
    preperiodic_set,
    rational_fixed_points,
    rational_preimages,
)
from .errors import (
    BadReductionError,
    BelyiError,
    ConstructionError,
    ExactDivisionError,
    FactorizationError,
    HypothesisError,
    InternalConsistencyError,
    InvalidTypeError,
    NotBelyiNormalizedError,
    UnsupportedTypeError,
)
from .fields import GF, QQ, ZZ, multiplicative_order
from .polys import (
    Poly,
    content,
    derivative,
    ord_at,
    poly_gcd,
    primitive_part,
    wronskian,
)
from .projline import INF, ProjPoint, RationalMap, compose, eval_map
from .reduction import (
    FrobeniusDecomposition,
    GeneralizedRamification,
    ReductionReport,
    ReductionType,
    census,
    frobenius_decompose,
    generalized_ramification,
    in_S_Cp,
    is_separable,
    monomial_map,
    predict_monomial,
    reduce_mod_p,
)
from .roots import rational_roots

__version__ = "0.1.0"

__all__ = [
    "AllowedPeriods",
    "BadReductionError",
    "BelyiError",
    "BelyiMap",
    "Certificate",
    "CombinatorialType",
    "ConstructionError",
    "CycleData",
    "ExactDivisionError",
    "FactorizationError",
    "Family",
    "FiberSignReport",
    "FrobeniusDecomposition",
    "FunctionalGraph",
    "GF",
    "GeneralizedRamification",
    "HypothesisError",
    "INF",
    "InternalConsistencyError",
    "InvalidTypeError",
    "NotBelyiNormalizedError",
    "Poly",
    "PreperReport",
    "ProjPoint",
    "QQ",
    "RationalMap",
    "ReductionReport",
    "ReductionType",
    "TypeClass",
    "UnsupportedTypeError",
    "ZZ",
    "allowed_periods",
    "build",
    "build_polynomial",
    "build_symmetric",
    "census",
    "classify_type",
    "compose",
    "conjugate",
    "content",
    "count_closed_form",
    "count_nonpolynomial",
    "count_polynomial",
    "cycle_multiplier",
    "derivative",
    "enumerate_types",
    "eval_map",
    "fiber_sign_analysis",
    "frobenius_decompose",
    "functional_graph",
    "generalized_ramification",
    "in_S_Cp",
    "is_separable",
    "monomial_hypotheses",
    "monomial_map",
    "multiplicative_order",
    "normalize_integer_model",
    "ord_at",
    "poly_gcd",
    "predict_monomial",
    "preperiodic_set",
    "primitive_part",
    "rational_fixed_points",
    "rational_preimages",
    "rational_roots",
    "reduce_mod_p",
    "validate",
    "verify",
    "wronskian",
]
