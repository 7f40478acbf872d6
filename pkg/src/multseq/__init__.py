"""Multiplicity sequences and Newton-polyhedron invariants of monomial ideals."""

from .errors import (
    DegenerateSimplexError,
    DimensionMismatchError,
    ExponentOverflowError,
    GridCapExceededError,
    ImproperIdealError,
    InconclusiveError,
    InvalidFitError,
    MultSeqError,
    NotMPrimaryError,
    ParseError,
    RingMismatchError,
    ResourceCapError,
    SingularSystemError,
)
from .hilbert import (
    BivariatePolynomial,
    LambdaTable,
    MultiplicitySequence,
    extract_coefficients,
    fit_bivariate,
    j_multiplicity,
    lambda_cell,
    lambda_table,
    multiplicity_sequence,
    sum_transform,
)
from .monomial import (
    MonomialIdeal,
    RingSpec,
    contains_monomial,
    dim_quotient,
    equals,
    is_m_primary,
    maximal_ideal_power_times,
    minimalize,
    power,
    product,
    sum_ideals,
)
from .newton import (
    Halfspace,
    NewtonPolyhedron,
    integral_closure,
    mon_analytic_spread,
    mon_j_mult,
    mon_reduction,
    newton_polyhedron,
    normalized_covolume,
    point_in_polyhedron,
)
from .parsing import parse_ideal, render_ideal

__version__ = "0.1.0"
