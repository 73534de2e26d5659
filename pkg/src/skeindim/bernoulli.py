"""Bernoulli numbers, Bernoulli polynomials, and Faulhaber power sums.

Conventions are fixed by the generating function t/(e^t - 1):

    B_0 = 1,  B_1 = -1/2,  B_n = 0 for odd n >= 3,  B_{2n} != 0.

The alternative B_1 = +1/2 convention is deliberately not supported; the
sign shows up in every downstream identity (half-value identity, Faulhaber
sums, leading-term coefficients), so a convention slip would surface as a
cascade of exact-equality failures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import BivariatePolynomial, TruncatedSeries, UnivariatePolynomial, binomial


class FaulhaberInconsistency(ArithmeticError):
    """The two closed forms of the power-sum polynomial disagree.

    Both are built from the same Bernoulli table, so a mismatch signals a
    bug in that table rather than bad user input.
    """


@dataclass(frozen=True)
class BernoulliTable:
    """Exact Bernoulli numbers B_0..B_N, index equals subscript."""

    values: tuple[Fraction, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def bernoulli_numbers(max_index: int) -> BernoulliTable:
    """B_0..B_max_index by exact series inversion.

    (e^t - 1)/t has coefficient 1/(k+1)! at t^k and constant term 1, so its
    series inverse is t/(e^t - 1) = sum_k B_k t^k / k!.
    """
    if max_index < 0:
        raise ValueError("max_index must be nonnegative")
    variables = ("x", "y")
    forward = TruncatedSeries.build(
        max_index,
        variables,
        lambda k: BivariatePolynomial.constant(
            Fraction(1, math.factorial(k + 1)), variables
        ),
    )
    inverse = forward.inverse()
    values = tuple(
        inverse.coefficient(k).coefficient(0, 0) * math.factorial(k)
        for k in range(max_index + 1)
    )
    return BernoulliTable(values)


def bernoulli_number(k: int) -> Fraction:
    return bernoulli_numbers(k)[k]


def bernoulli_polynomial(m: int) -> UnivariatePolynomial:
    """B_m(x) = sum_l binom(m, l) x^(m-l) B_l; monic of degree m."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    table = bernoulli_numbers(m)
    coeffs = [Fraction(0)] * (m + 1)
    for ell in range(m + 1):
        coeffs[m - ell] = binomial(m, ell) * table[ell]
    return UnivariatePolynomial(coeffs)


def bernoulli_half_value(m: int) -> Fraction:
    """B_m evaluated at 1/2 via the explicit polynomial.

    Satisfies B_m(1/2) = (2^(1-m) - 1) B_m; the test suite pins this
    identity rather than this function assuming it.
    """
    value = bernoulli_polynomial(m)(Fraction(1, 2))
    assert isinstance(value, Fraction)
    return value


def _faulhaber_via_bernoulli_sum(m: int) -> UnivariatePolynomial:
    # N^m/2 + (1/(m+1)) * sum_j binom(m+1, 2j) B_{2j} N^(m+1-2j)
    table = bernoulli_numbers(m + 1)
    result = UnivariatePolynomial.monomial(m, Fraction(1, 2))
    for j in range(m // 2 + 1):
        coeff = binomial(m + 1, 2 * j) * table[2 * j] / (m + 1)
        result = result + UnivariatePolynomial.monomial(m + 1 - 2 * j, coeff)
    return result


def _faulhaber_via_polynomial_difference(m: int) -> UnivariatePolynomial:
    # (B_{m+1}(N+1) - B_{m+1}) / (m+1)
    b_poly = bernoulli_polynomial(m + 1)
    shifted = b_poly(UnivariatePolynomial((1, 1)))
    assert isinstance(shifted, UnivariatePolynomial)
    return (shifted - bernoulli_number(m + 1)) / (m + 1)


def faulhaber_poly(m: int) -> UnivariatePolynomial:
    """The polynomial in N equal to 1^m + 2^m + ... + N^m.

    Computed by two independent routes (even-Bernoulli sum and Bernoulli
    polynomial difference) which must agree exactly; disagreement raises
    FaulhaberInconsistency instead of returning either candidate.
    """
    if m < 1:
        raise ValueError("exponent must be at least 1")
    first = _faulhaber_via_bernoulli_sum(m)
    second = _faulhaber_via_polynomial_difference(m)
    if first != second:
        raise FaulhaberInconsistency(
            f"power-sum closed forms disagree at exponent {m}: "
            f"{first.render('N')} vs {second.render('N')}"
        )
    return first
