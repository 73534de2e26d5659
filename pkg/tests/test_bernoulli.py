"""Bernoulli machinery tests.

Brute-force power sums and hand-expanded polynomials serve as the
independent oracles for the closed forms.
"""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from skeindim.bernoulli import (
    FaulhaberInconsistency,
    bernoulli_half_value,
    bernoulli_number,
    bernoulli_numbers,
    bernoulli_polynomial,
    faulhaber_poly,
)
from skeindim.exact import BivariatePolynomial, TruncatedSeries, UnivariatePolynomial


def test_first_values():
    table = bernoulli_numbers(4)
    assert table[0] == 1
    assert table[1] == Fraction(-1, 2)
    assert table[2] == Fraction(1, 6)
    assert table[3] == 0
    assert table[4] == Fraction(-1, 30)


def test_convention_is_minus_one_half():
    # the +1/2 convention would break every identity below; pin it down
    assert bernoulli_number(1) == Fraction(-1, 2)


def test_odd_values_vanish_and_even_do_not():
    table = bernoulli_numbers(41)
    for k in range(3, 42, 2):
        assert table[k] == 0
    for k in range(0, 42, 2):
        assert table[k] != 0


def test_polynomial_small_degrees():
    assert bernoulli_polynomial(0) == UnivariatePolynomial([1])
    assert bernoulli_polynomial(1) == UnivariatePolynomial([Fraction(-1, 2), 1])
    assert bernoulli_polynomial(2) == UnivariatePolynomial([Fraction(1, 6), -1, 1])


@pytest.mark.parametrize("m", range(0, 13))
def test_polynomial_is_monic(m):
    assert bernoulli_polynomial(m).leading_coefficient == 1


def test_half_values():
    assert bernoulli_half_value(0) == 1
    assert bernoulli_half_value(1) == 0
    assert bernoulli_half_value(2) == Fraction(-1, 12)


def test_half_value_identity_up_to_40():
    table = bernoulli_numbers(40)
    for m in range(41):
        assert bernoulli_half_value(m) == (Fraction(2) ** (1 - m) - 1) * table[m]


def test_faulhaber_linear():
    # sum_{y<=N} y = N(N+1)/2
    assert faulhaber_poly(1) == UnivariatePolynomial([0, Fraction(1, 2), Fraction(1, 2)])


def test_faulhaber_point_values():
    assert faulhaber_poly(2)(3) == 14  # 1 + 4 + 9
    assert faulhaber_poly(3)(2) == 9  # 1 + 8


def test_faulhaber_against_brute_force():
    for m in range(1, 21):
        poly = faulhaber_poly(m)
        for n in range(1, 51):
            assert poly(n) == sum(y**m for y in range(1, n + 1))


def test_faulhaber_rejects_zero_exponent():
    with pytest.raises(ValueError):
        faulhaber_poly(0)


def test_faulhaber_inconsistency_is_raisable():
    assert issubclass(FaulhaberInconsistency, ArithmeticError)


def test_generating_function_of_polynomials():
    # coefficients of t e^{tx}/(e^t - 1) through t^12 must equal B_n(x)/n!
    order = 12
    variables = ("x", "y")

    exp_tx = TruncatedSeries.build(
        order,
        variables,
        lambda k: BivariatePolynomial({(k, 0): Fraction(1, math.factorial(k))}, variables),
    )
    forward = TruncatedSeries.build(
        order,
        variables,
        lambda k: BivariatePolynomial.constant(Fraction(1, math.factorial(k + 1)), variables),
    )
    series = forward.inverse() * exp_tx

    for n in range(order + 1):
        expected = BivariatePolynomial(
            {
                (k, 0): coeff / math.factorial(n)
                for k, coeff in enumerate(bernoulli_polynomial(n).coefficients)
            },
            variables,
        )
        assert series.coefficient(n) == expected


@pytest.mark.parametrize("beta", range(0, 9))
def test_half_shift_parity(beta):
    # B_{2b}((p+1)/2) contains only even powers of p, B_{2b+1}((p+1)/2)
    # only odd powers
    shift = UnivariatePolynomial([Fraction(1, 2), Fraction(1, 2)])  # (p+1)/2
    even_case = bernoulli_polynomial(2 * beta)(shift)
    odd_case = bernoulli_polynomial(2 * beta + 1)(shift)
    assert all(e % 2 == 0 for e in even_case.exponents())
    assert all(e % 2 == 1 for e in odd_case.exponents())
