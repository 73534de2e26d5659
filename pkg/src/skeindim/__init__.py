"""Exact Verlinde dimension polynomials, solid-torus skein algebra
identities, and lower-bound certificates for the skein module of a
surface times a circle.  All arithmetic is exact rational or cyclotomic;
floating point appears only in optional numeric embeddings.
"""

from .bernoulli import (
    BernoulliTable,
    FaulhaberInconsistency,
    bernoulli_half_value,
    bernoulli_number,
    bernoulli_numbers,
    bernoulli_polynomial,
    faulhaber_poly,
)
from .certify import (
    Certificate,
    CheckResult,
    build_certificate,
    lower_bound,
    phi_rank,
)
from .cyclotomic import (
    CyclotomicElement,
    CyclotomicField,
    LaurentPolynomial,
    cyclotomic_field,
    quantum_integer_laurent,
)
from .exact import (
    BivariatePolynomial,
    RationalMatrix,
    TruncatedSeries,
    UnivariatePolynomial,
    binomial,
    binomial_poly_in_c,
    substitute_half,
)
from .skein import (
    AnnulusSkein,
    VanishingDenominator,
    bracket_e,
    d_squared,
    e_product,
    eval_nonseparating_curve,
    flat_curve_check,
    omega_coefficients,
    quantum_integer,
    recoloring_check,
)
from .verlinde import (
    CrosscheckReport,
    FusionTable,
    IntegralityError,
    ParityViolation,
    StructureViolation,
    VerlindeDecomposition,
    decompose,
    dimension,
    fusion_dimension,
    fusion_table,
    leading_term_check,
    odd_color_polynomial,
    oracle_crosscheck,
    parity_checks,
    verlinde_polynomial,
)

__version__ = "0.1.0"
