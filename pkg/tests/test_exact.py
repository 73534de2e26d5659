"""Exact-arithmetic kernel tests.

Derived expected values are computed by independent means stated inline
(hand expansion, brute-force minors, integer binomials) and frozen here.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skeindim.exact import (
    NEG_INFINITY,
    BivariatePolynomial,
    RationalMatrix,
    TruncatedSeries,
    UnivariatePolynomial,
    binomial,
    binomial_poly_in_c,
    substitute_half,
)

PC = ("p", "c")

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=6)


def bipoly(terms, variables=PC):
    return BivariatePolynomial(terms, variables)


def sinh_over_t_series(order):
    """s(t) = sinh(t)/t = sum t^(2k)/(2k+1)!."""
    import math

    def term(k):
        if k % 2 == 0:
            return BivariatePolynomial.constant(Fraction(1, math.factorial(k + 1)), PC)
        return BivariatePolynomial.zero(PC)

    return TruncatedSeries.build(order, PC, term)


# ---------------------------------------------------------------- binomial


def test_binomial_small_pascal_entry():
    assert binomial(4, 2) == 6


@pytest.mark.parametrize("n", [0, 1, 5, 17])
def test_binomial_identity_case(n):
    assert binomial(n, 0) == 1


def test_binomial_k_larger_than_n_is_zero():
    assert binomial(5, 7) == 0


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 0)


# ----------------------------------------------------- binomial_poly_in_c


def test_binomial_poly_genus_one_is_constant_one():
    assert binomial_poly_in_c(1) == BivariatePolynomial.constant(1, PC)


def test_binomial_poly_genus_two_hand_expansion():
    # binom(c+1, 2) = c(c+1)/2 by hand
    expected = bipoly({(0, 2): Fraction(1, 2), (0, 1): Fraction(1, 2)})
    assert binomial_poly_in_c(2) == expected


def test_binomial_poly_genus_three_numeric_spot_check():
    # at c = 2 the value must match the integer binomial binom(4, 4) = 1
    assert binomial_poly_in_c(3)(0, 2) == 1


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5])
def test_binomial_poly_matches_integer_binomials(g):
    import math

    for c in range(0, 12):
        assert binomial_poly_in_c(g)(0, c) == math.comb(c + g - 1, 2 * g - 2)


# ---------------------------------------------------------- polynomials


def test_univariate_zero_degree_sentinel():
    zero = UnivariatePolynomial.zero()
    assert zero.degree == NEG_INFINITY
    assert not zero.degree == -1
    assert zero.leading_coefficient == 0


def test_univariate_strips_trailing_zeros():
    poly = UnivariatePolynomial([1, 2, 0, 0])
    assert poly.degree == 1
    assert poly.coefficients == (Fraction(1), Fraction(2))


def test_univariate_compose():
    # (x^2 + 1) at (N + 1) = N^2 + 2N + 2
    poly = UnivariatePolynomial([1, 0, 1])
    shifted = poly(UnivariatePolynomial([1, 1]))
    assert shifted == UnivariatePolynomial([2, 2, 1])


def test_bivariate_total_degree_and_parts():
    poly = bipoly({(1, 0): Fraction(1, 2), (0, 1): -1, (0, 0): Fraction(-1, 2)})
    assert poly.total_degree == 1
    assert poly.homogeneous_part(1) == bipoly({(1, 0): Fraction(1, 2), (0, 1): -1})
    assert poly.homogeneous_part(5) == BivariatePolynomial.zero(PC)


def test_homogeneous_parts_partition():
    poly = bipoly({(2, 1): 3, (1, 1): Fraction(1, 3), (0, 0): -2, (0, 3): 1})
    total = BivariatePolynomial.zero(PC)
    for n in range(0, 4):
        total = total + poly.homogeneous_part(n)
    assert total == poly


def test_split_by_first():
    poly = bipoly({(1, 0): Fraction(1, 2), (0, 1): -1, (0, 0): Fraction(-1, 2)})
    parts = poly.split_by_first()
    assert parts[0] == UnivariatePolynomial([Fraction(-1, 2), -1])
    assert parts[1] == UnivariatePolynomial([Fraction(1, 2)])


def test_divide_by_first_power():
    poly = bipoly({(2, 1): 1, (3, 0): -2})
    assert poly.divide_by_first_power(2) == bipoly({(0, 1): 1, (1, 0): -2})
    with pytest.raises(ValueError):
        bipoly({(1, 1): 1}).divide_by_first_power(2)


def test_variable_mismatch_rejected():
    with pytest.raises(ValueError):
        bipoly({(0, 0): 1}, ("p", "c")) + bipoly({(0, 0): 1}, ("p", "s"))


# ------------------------------------------------------------- rendering


def test_render_genus_one_golden():
    poly = bipoly({(0, 0): Fraction(-1, 2), (1, 0): Fraction(1, 2), (0, 1): -1})
    assert poly.render() == "-1/2 + 1/2*p - c"


def test_render_zero():
    assert BivariatePolynomial.zero(PC).render() == "0"


def test_render_higher_powers():
    poly = bipoly({(2, 1): Fraction(3, 4), (0, 2): -1})
    assert poly.render() == "-c^2 + 3/4*p^2*c"


def test_render_univariate():
    poly = UnivariatePolynomial([Fraction(-1, 2), -1])
    assert poly.render("c") == "-1/2 - c"
    assert UnivariatePolynomial([0, 1]).render("s") == "s"


# ---------------------------------------------------------------- series


def test_series_inverse_of_one_is_one():
    one = TruncatedSeries.one(4, PC)
    assert one.inverse() == one


def test_series_inverse_of_sinh_over_t_through_order_two():
    # inverting 1 + t^2/6 by hand through order 2 gives 1 - t^2/6
    inv = sinh_over_t_series(2).inverse()
    assert inv.coefficient(0) == BivariatePolynomial.constant(1, PC)
    assert inv.coefficient(1) == BivariatePolynomial.zero(PC)
    assert inv.coefficient(2) == BivariatePolynomial.constant(Fraction(-1, 6), PC)


def test_series_times_inverse_is_one():
    s = sinh_over_t_series(12)
    assert s * s.inverse() == TruncatedSeries.one(12, PC)


def test_series_inverse_rejects_bad_constant_term():
    series = TruncatedSeries.build(
        2, PC, lambda k: BivariatePolynomial.constant(2 if k == 0 else 0, PC)
    )
    with pytest.raises(ValueError):
        series.inverse()


def test_series_mul_identity():
    s = sinh_over_t_series(6)
    assert s * TruncatedSeries.one(6, PC) == s


def test_series_square_one_plus_t():
    one_plus_t = TruncatedSeries.build(
        2, PC, lambda k: BivariatePolynomial.constant(1 if k <= 1 else 0, PC)
    )
    squared = one_plus_t * one_plus_t
    assert squared.coefficient(0) == 1
    assert squared.coefficient(1) == 2
    assert squared.coefficient(2) == 1


def test_series_pow_square_of_sinh_over_t():
    # (1 + t^2/6 + ...)^2 has t^2 coefficient 1/3 by hand expansion
    squared = sinh_over_t_series(2) ** 2
    assert squared.coefficient(2) == BivariatePolynomial.constant(Fraction(1, 3), PC)


def test_series_order_mismatch_rejected():
    with pytest.raises(ValueError):
        TruncatedSeries.one(3, PC) * TruncatedSeries.one(4, PC)


def test_coefficient_beyond_order_rejected():
    with pytest.raises(ValueError):
        TruncatedSeries.one(3, PC).coefficient(4)


def test_coefficient_of_sinh_over_t():
    s = sinh_over_t_series(4)
    assert s.coefficient(0) == 1
    assert s.coefficient(2) == BivariatePolynomial.constant(Fraction(1, 6), PC)


def test_exponential_kernel_linear_coefficient():
    # 2pt/(e^{2pt}-1) is the inverse of sum_k (2p)^k t^k/(k+1)!; its t^1
    # coefficient is -p (the generating-function value B_1 * 2p / 1!).
    import math

    forward = TruncatedSeries.build(
        3,
        PC,
        lambda k: BivariatePolynomial(
            {(k, 0): Fraction(2**k, math.factorial(k + 1))}, PC
        ),
    )
    kernel = forward.inverse()
    assert kernel.coefficient(1) == bipoly({(1, 0): -1})


@st.composite
def unit_constant_series(draw):
    order = draw(st.integers(min_value=0, max_value=12))
    coeffs = [BivariatePolynomial.constant(1, PC)]
    for _ in range(order):
        terms = {}
        for _ in range(draw(st.integers(min_value=0, max_value=2))):
            i = draw(st.integers(min_value=0, max_value=2))
            j = draw(st.integers(min_value=0, max_value=2))
            terms[(i, j)] = draw(rationals)
        coeffs.append(BivariatePolynomial(terms, PC))
    return TruncatedSeries(order, coeffs)


@settings(max_examples=25, deadline=None)
@given(unit_constant_series())
def test_series_inverse_round_trip(series):
    assert series * series.inverse() == TruncatedSeries.one(series.order, PC)


# ------------------------------------------------------- substitute_half


def test_substitute_half_examples():
    two_c_plus_one = bipoly({(0, 1): 2, (0, 0): 1})
    assert substitute_half(two_c_plus_one) == bipoly({(1, 0): 1, (0, 1): -2}, ("p", "s"))

    p_only = bipoly({(1, 0): 1})
    assert substitute_half(p_only) == bipoly({(1, 0): 1}, ("p", "s"))

    genus_one = bipoly({(1, 0): Fraction(1, 2), (0, 1): -1, (0, 0): Fraction(-1, 2)})
    assert substitute_half(genus_one) == bipoly({(0, 1): 1}, ("p", "s"))


@st.composite
def small_bipolys(draw):
    terms = {}
    for _ in range(draw(st.integers(min_value=0, max_value=4))):
        i = draw(st.integers(min_value=0, max_value=3))
        j = draw(st.integers(min_value=0, max_value=3))
        terms[(i, j)] = draw(rationals)
    return BivariatePolynomial(terms, PC)


@settings(max_examples=60, deadline=None)
@given(small_bipolys(), small_bipolys())
def test_substitute_half_is_ring_homomorphism(a, b):
    assert substitute_half(a * b) == substitute_half(a) * substitute_half(b)
    assert substitute_half(a + b) == substitute_half(a) + substitute_half(b)


# ------------------------------------------------------------ field axioms


@settings(max_examples=100, deadline=None)
@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    if a != 0:
        assert a * (Fraction(1) / a) == 1


# ---------------------------------------------------------------- matrices


def test_rank_identity():
    assert RationalMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).rank() == 3


def test_rank_proportional_rows():
    assert RationalMatrix([[1, 2], [2, 4]]).rank() == 1


def test_rank_genus_one_value_matrix():
    # 2x2 value matrix with determinant 1/2 (hand computation), so rank 2
    matrix = RationalMatrix(
        [[Fraction(-1, 2), Fraction(-3, 2)], [Fraction(1, 2), Fraction(1, 2)]]
    )
    assert matrix.rank() == 2


def test_rank_rectangular():
    assert RationalMatrix([[1, 2, 3], [2, 4, 6]]).rank() == 1
    assert RationalMatrix([[0, 1], [1, 0], [1, 1]]).rank() == 2


def _minor_rank(rows):
    """Brute-force rank: largest k with a nonzero k x k minor determinant."""

    def det(sub):
        n = len(sub)
        total = Fraction(0)
        for perm in itertools.permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        sign = -sign
            prod = Fraction(1)
            for i in range(n):
                prod *= sub[i][perm[i]]
            total += sign * prod
        return total

    n_rows, n_cols = len(rows), len(rows[0])
    for k in range(min(n_rows, n_cols), 0, -1):
        for rs in itertools.combinations(range(n_rows), k):
            for cs in itertools.combinations(range(n_cols), k):
                sub = [[rows[r][c] for c in cs] for r in rs]
                if det(sub) != 0:
                    return k
    return 0


@settings(max_examples=80, deadline=None)
@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=4),
    st.data(),
)
def test_rank_matches_minor_rank(n_rows, n_cols, data):
    rows = [
        [data.draw(rationals) for _ in range(n_cols)] for _ in range(n_rows)
    ]
    assert RationalMatrix(rows).rank() == _minor_rank(rows)
