"""Verlinde dimensions of SO(3) TQFT spaces, exactly.

The dimension of the TQFT vector space of a genus-g surface with one point
colored 2c, at an odd level p >= 3, is a polynomial D_g(p, c) of total
degree 3g - 2.  It is computed here by residue extraction:

    D_g = ((-1)^g / 2) * ( 4^(1-g) (2c+1) p^(g-1) R(p, c)
                           - p^g binom(c+g-1, 2g-2) ),

where R(p, c) is the t^(2g-2) coefficient of the product

    [2pt/(e^(2pt)-1)] * s((2c+1) t) * s(t)^-(2g-1),      s(t) = sinh(t)/t.

All series are exact truncations; the division by p present in the naive
residue expression is eliminated algebraically above, so the whole
computation stays inside the polynomial ring.

Two completely independent routes to the same numbers exist and are cross
checked: the residue polynomial evaluated at integers, and the fusion-rule
recursion over the integer weights K[s][y] = (p - 2*max(s,y)) * min(s,y)
starting from the genus-one values D_1 = s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bernoulli import bernoulli_numbers
from .exact import (
    BivariatePolynomial,
    TruncatedSeries,
    UnivariatePolynomial,
    binomial_poly_in_c,
    substitute_half,
)

PC = ("p", "c")
PS = ("p", "s")


class StructureViolation(ValueError):
    """The p-power decomposition does not have the required support or
    exact degrees; points at a residue-formula bug."""


class ParityViolation(ValueError):
    """A parity constraint fails; carries the offending monomial."""


class IntegralityError(ArithmeticError):
    """A dimension evaluated to a non-integer or negative value; this is
    an internal-bug signal, not a user error."""


def _sinh_over_t(order: int) -> TruncatedSeries:
    def term(k: int) -> BivariatePolynomial:
        if k % 2 == 0:
            return BivariatePolynomial.constant(Fraction(1, math.factorial(k + 1)), PC)
        return BivariatePolynomial.zero(PC)

    return TruncatedSeries.build(order, PC, term)


def _exponential_kernel(order: int) -> TruncatedSeries:
    """2pt/(e^(2pt) - 1): series inverse of sum_k (2p)^k t^k/(k+1)!."""
    forward = TruncatedSeries.build(
        order,
        PC,
        lambda k: BivariatePolynomial({(k, 0): Fraction(2**k, math.factorial(k + 1))}, PC),
    )
    return forward.inverse()


def _odd_width_kernel(order: int) -> TruncatedSeries:
    """s((2c+1) t): even series with t^(2k) coefficient (2c+1)^(2k)/(2k+1)!."""
    two_c_plus_one = BivariatePolynomial({(0, 1): 2, (0, 0): 1}, PC)
    powers = [BivariatePolynomial.constant(1, PC)]
    while len(powers) <= order:
        powers.append(powers[-1] * two_c_plus_one)

    def term(k: int) -> BivariatePolynomial:
        if k % 2 == 0:
            return powers[k] / Fraction(math.factorial(k + 1))
        return BivariatePolynomial.zero(PC)

    return TruncatedSeries.build(order, PC, term)


def _residue_coefficient_at(g: int, order: int) -> BivariatePolynomial:
    product = (
        _exponential_kernel(order)
        * _odd_width_kernel(order)
        * (_sinh_over_t(order).inverse() ** (2 * g - 1))
    )
    return product.coefficient(2 * g - 2)


@lru_cache(maxsize=None)
def _residue_part(g: int) -> BivariatePolynomial:
    """R(p, c), the t^(2g-2) coefficient of the kernel product.

    Built at truncation order 2g-2 and rebuilt with one guard term; the
    guard must not change the extracted coefficient.
    """
    target_order = 2 * g - 2
    value = _residue_coefficient_at(g, target_order)
    guarded = _residue_coefficient_at(g, target_order + 1)
    if value != guarded:
        raise AssertionError("series truncation guard tripped in residue extraction")
    return value


def _formula_parts(g: int) -> tuple[BivariatePolynomial, BivariatePolynomial]:
    """(X, Y) with D_g = p^(g-1) X + p^g Y; X collects the residue term,
    Y the binomial term (Y carries no p)."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    half_sign = Fraction((-1) ** g, 2)
    two_c_plus_one = BivariatePolynomial({(0, 1): 2, (0, 0): 1}, PC)
    x_part = (Fraction(4) ** (1 - g) * half_sign) * two_c_plus_one * _residue_part(g)
    y_part = -half_sign * binomial_poly_in_c(g)
    return x_part, y_part


@lru_cache(maxsize=None)
def verlinde_polynomial(g: int) -> BivariatePolynomial:
    """D_g as an exact polynomial in (p, c); total degree exactly 3g - 2."""
    x_part, y_part = _formula_parts(g)
    p = BivariatePolynomial.first(PC)
    result = p ** (g - 1) * x_part + p**g * y_part
    if result.total_degree != 3 * g - 2:
        raise AssertionError(
            f"dimension polynomial has total degree {result.total_degree}, "
            f"expected {3 * g - 2}"
        )
    return result


@lru_cache(maxsize=None)
def odd_color_polynomial(g: int) -> BivariatePolynomial:
    """The odd-color dimension polynomial in (p, s), obtained from D_g by
    the exact substitution c = (p-1)/2 - s."""
    return substitute_half(verlinde_polynomial(g))


@dataclass(frozen=True)
class VerlindeDecomposition:
    """Grouping of a dimension polynomial by powers of p.

    parts[j] is the coefficient polynomial of p^j, in c for the even-color
    kind and in s for the odd-color kind.
    """

    genus: int
    kind: str  # "even" or "odd"
    parts: dict[int, UnivariatePolynomial]

    @property
    def support(self) -> set[int]:
        return set(self.parts)

    def part(self, j: int) -> UnivariatePolynomial:
        return self.parts.get(j, UnivariatePolynomial.zero())

    def reconstruct(self) -> BivariatePolynomial:
        variables = PC if self.kind == "even" else PS
        terms = {}
        for j, poly in self.parts.items():
            for k, coeff in enumerate(poly.coefficients):
                if coeff != 0:
                    terms[(j, k)] = coeff
        return BivariatePolynomial(terms, variables)


def exponent_support(g: int, kind: str) -> set[int]:
    """Expected p-exponents: {g-1, g+1, ..., 3g-3}, plus {g} for the
    even-color kind."""
    base = {g - 1 + 2 * j for j in range(g)}
    return base | {g} if kind == "even" else base


def decompose(g: int, kind: str) -> VerlindeDecomposition:
    """Split the dimension polynomial by powers of p and validate its
    structure: support exactly the expected exponent set, and the part at
    p^j of degree exactly 3g - 2 - j (hence nonzero leading coefficient).

    Any violation raises StructureViolation naming the offending exponent.
    """
    if g < 1:
        raise ValueError("genus must be at least 1")
    if kind not in ("even", "odd"):
        raise ValueError("kind must be 'even' or 'odd'")
    source = verlinde_polynomial(g) if kind == "even" else odd_color_polynomial(g)
    parts = source.split_by_first()
    expected = exponent_support(g, kind)
    for j in sorted(set(parts) - expected):
        raise StructureViolation(
            f"unexpected nonzero part at p^{j} (genus {g}, kind {kind})"
        )
    for j in sorted(expected - set(parts)):
        raise StructureViolation(
            f"missing part at p^{j} (genus {g}, kind {kind})"
        )
    for j, poly in parts.items():
        if poly.degree != 3 * g - 2 - j:
            raise StructureViolation(
                f"part at p^{j} has degree {poly.degree}, expected {3 * g - 2 - j} "
                f"(genus {g}, kind {kind})"
            )
    decomposition = VerlindeDecomposition(genus=g, kind=kind, parts=parts)
    if decomposition.reconstruct() != source:
        raise StructureViolation(
            f"decomposition does not reconstruct the source (genus {g}, kind {kind})"
        )
    return decomposition


@dataclass(frozen=True)
class LeadingTermCheck:
    """Outcome of comparing the top homogeneous part with its closed form."""

    genus: int
    passed: bool
    detail: str
    expected: BivariatePolynomial
    actual: BivariatePolynomial

    def __bool__(self) -> bool:
        return self.passed


def leading_term_closed_form(g: int) -> BivariatePolynomial:
    """(-1)^g p^(g-1) sum_k B_k / (k! (2g-1-k)!) c^(2g-1-k) p^k."""
    table = bernoulli_numbers(2 * g - 1)
    terms = {}
    for k in range(2 * g):
        coeff = (
            Fraction((-1) ** g)
            * table[k]
            / (math.factorial(k) * math.factorial(2 * g - 1 - k))
        )
        if coeff != 0:
            terms[(g - 1 + k, 2 * g - 1 - k)] = coeff
    return BivariatePolynomial(terms, PC)


def leading_term_check(g: int) -> LeadingTermCheck:
    """Compare the degree-(3g-2) homogeneous part of the dimension
    polynomial with its Bernoulli closed form, and confirm all higher
    homogeneous parts vanish.  Returns a result object, never raises."""
    poly = verlinde_polynomial(g)
    actual = poly.homogeneous_part(3 * g - 2)
    expected = leading_term_closed_form(g)
    if actual != expected:
        return LeadingTermCheck(
            g, False, "top homogeneous part mismatch", expected, actual
        )
    for n in range(3 * g - 1, 3 * g + 3):
        if poly.homogeneous_part(n):
            return LeadingTermCheck(
                g, False, f"nonzero homogeneous part at degree {n}", expected, actual
            )
    return LeadingTermCheck(g, True, "", expected, actual)


@dataclass(frozen=True)
class ParityReport:
    """Record of the parity facts verified for one genus."""

    genus: int
    statements: tuple[str, ...]


def parity_checks(g: int) -> ParityReport:
    """Verify the two parity constraints of the dimension polynomial:

    (a) D_g = p^(g-1) X + p^g Y with X (the residue component) even in p
        and Y (the binomial component) free of p;
    (b) the odd-color polynomial divided by p^(g-1) is a polynomial, even
        in p and odd in s.

    Raises ParityViolation with the offending monomial on failure.
    """
    x_part, y_part = _formula_parts(g)
    v1, v2 = PC
    for (i, j), coeff in x_part.terms():
        if i % 2 != 0:
            raise ParityViolation(
                f"residue component has odd power of p: {coeff}*{v1}^{i}*{v2}^{j}"
            )
    for (i, j), coeff in y_part.terms():
        if i != 0:
            raise ParityViolation(
                f"binomial component depends on p: {coeff}*{v1}^{i}*{v2}^{j}"
            )
    p = BivariatePolynomial.first(PC)
    if p ** (g - 1) * x_part + p**g * y_part != verlinde_polynomial(g):
        raise ParityViolation("p^(g-1) X + p^g Y does not reconstruct the polynomial")

    odd = odd_color_polynomial(g)
    try:
        reduced = odd.divide_by_first_power(g - 1)
    except ValueError as exc:
        raise ParityViolation(f"odd-color polynomial not divisible by p^{g-1}") from exc
    for (i, j), coeff in reduced.terms():
        if i % 2 != 0:
            raise ParityViolation(
                f"odd-color polynomial / p^{g-1} has odd power of p: "
                f"{coeff}*p^{i}*s^{j}"
            )
        if j % 2 != 1:
            raise ParityViolation(
                f"odd-color polynomial / p^{g-1} has even power of s: "
                f"{coeff}*p^{i}*s^{j}"
            )
    return ParityReport(
        genus=g,
        statements=(
            "residue component even in p",
            "binomial component free of p",
            f"odd-color polynomial divisible by p^{g-1}",
            "reduced odd-color polynomial even in p and odd in s",
        ),
    )


# ------------------------------------------------------------------ fusion


@dataclass(frozen=True)
class FusionTable:
    """Genus-one two-point dimensions K[s][y] for 1 <= s, y <= d."""

    p: int
    d: int
    entries: tuple[tuple[int, ...], ...]

    def value(self, s: int, y: int) -> int:
        return self.entries[s - 1][y - 1]


def _check_level(p: int) -> int:
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd integer >= 3")
    return (p - 1) // 2


@lru_cache(maxsize=None)
def fusion_table(p: int) -> FusionTable:
    """K[s][y] = (p - 2*max(s, y)) * min(s, y); symmetric, all entries >= 1."""
    d = _check_level(p)
    entries = tuple(
        tuple((p - 2 * max(s, y)) * min(s, y) for y in range(1, d + 1))
        for s in range(1, d + 1)
    )
    return FusionTable(p=p, d=d, entries=entries)


@lru_cache(maxsize=None)
def _fusion_vector(g: int, p: int) -> tuple[int, ...]:
    """Odd-color dimensions (D_g at s = 1..d) by the fusion recursion.

    Values grow beyond 64 bits quickly; Python integers keep this exact.
    The cache is filled on first use and only read afterwards, so shared
    concurrent use is safe.
    """
    d = _check_level(p)
    if g == 1:
        return tuple(range(1, d + 1))
    table = fusion_table(p)
    previous = _fusion_vector(g - 1, p)
    return tuple(
        sum(table.value(s, y) * previous[y - 1] for y in range(1, d + 1))
        for s in range(1, d + 1)
    )


def fusion_dimension(g: int, p: int, s: int) -> int:
    """Odd-color dimension at genus g by the fusion recursion; the
    independent integer route against the residue polynomial."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    d = _check_level(p)
    if not 1 <= s <= d:
        raise ValueError(f"s must lie in 1..{d}, got {s}")
    return _fusion_vector(g, p)[s - 1]


def dimension(g: int, p: int, m: int) -> int:
    """Dimension of the genus-g space with one point colored m, 0 <= m <= p-2.

    Even colors evaluate the dimension polynomial at c = m/2; odd colors
    are recolored to the even color p - m - 2 first.  The result must be a
    nonnegative integer; anything else raises IntegralityError.
    """
    if g < 1:
        raise ValueError("genus must be at least 1")
    _check_level(p)
    if not 0 <= m <= p - 2:
        raise ValueError(f"color must lie in 0..{p - 2}, got {m}")
    if m % 2 == 1:
        m = p - m - 2
    value = verlinde_polynomial(g)(p, Fraction(m, 2))
    if value.denominator != 1 or value < 0:
        raise IntegralityError(
            f"dimension at genus {g}, p={p}, color {m} evaluated to {value}"
        )
    return int(value)


@dataclass(frozen=True)
class CrosscheckReport:
    """Comparison of the residue polynomial against the fusion recursion."""

    checked: int
    mismatches: tuple[tuple[int, int, int, Fraction, int], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def oracle_crosscheck(g_max: int, p_max: int) -> CrosscheckReport:
    """Evaluate the odd-color polynomial at every (p, s) with odd
    3 <= p <= p_max, 1 <= s <= (p-1)/2, g <= g_max, and compare with the
    fusion recursion.  Mismatches are reported, not raised."""
    checked = 0
    mismatches = []
    for g in range(1, g_max + 1):
        poly = odd_color_polynomial(g)
        for p in range(3, p_max + 1, 2):
            for s in range(1, (p - 1) // 2 + 1):
                lhs = poly(p, s)
                rhs = fusion_dimension(g, p, s)
                checked += 1
                if lhs != rhs:
                    mismatches.append((g, p, s, lhs, rhs))
    return CrosscheckReport(checked=checked, mismatches=tuple(mismatches))
