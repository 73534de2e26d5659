"""Exact arithmetic in the cyclotomic field Q(zeta_2p) for odd p >= 3.

An element is a rational-coefficient residue modulo the 2p-th cyclotomic
polynomial, which is irreducible over Q, so every nonzero element is
invertible (by the extended Euclidean algorithm; no factoring needed).
The residue class of x, written A below, is a primitive 2p-th root of
unity: A^(2p) = 1 and A^p = -1.

Identities that should hold for all roots of unity at once are first
expressed as integer Laurent polynomials in A (LaurentPolynomial) and only
then specialized into a concrete field.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

from .exact import RationalLike, _q

_IntPoly = tuple[int, ...]  # ascending coefficients, no trailing zeros


def _int_poly_divide(num: Sequence[int], den: Sequence[int]) -> _IntPoly:
    """Exact division of integer polynomials with monic divisor."""
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    remainder = list(num)
    quotient = [0] * (len(num) - len(den) + 1)
    for k in range(len(quotient) - 1, -1, -1):
        coeff = remainder[k + len(den) - 1]
        quotient[k] = coeff
        if coeff:
            for i, d in enumerate(den):
                remainder[k + i] -= coeff * d
    if any(remainder):
        raise ValueError("division not exact")
    while quotient and quotient[-1] == 0:
        quotient.pop()
    return tuple(quotient)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@lru_cache(maxsize=None)
def cyclotomic_int_coeffs(n: int) -> _IntPoly:
    """Integer coefficients (ascending) of the n-th cyclotomic polynomial.

    Built by exact division: x^n - 1 divided by the cyclotomic polynomials
    of all proper divisors of n.
    """
    if n < 1:
        raise ValueError("index must be positive")
    if n == 1:
        return (-1, 1)
    poly: _IntPoly = tuple([-1] + [0] * (n - 1) + [1])
    for d in _divisors(n)[:-1]:
        poly = _int_poly_divide(poly, cyclotomic_int_coeffs(d))
    return poly


@lru_cache(maxsize=None)
def cyclotomic_field(p: int) -> CyclotomicField:
    """The field Q(zeta_2p) for odd p >= 3; instances are cached per p."""
    return CyclotomicField(p)


class CyclotomicField:
    """Q(zeta_2p), represented as Q[x] modulo the 2p-th cyclotomic polynomial."""

    __slots__ = ("p", "modulus", "degree", "_gen_powers")

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0:
            raise ValueError("p must be an odd integer >= 3")
        self.p = p
        self.modulus: _IntPoly = cyclotomic_int_coeffs(2 * p)
        self.degree: int = len(self.modulus) - 1
        self._gen_powers = self._build_gen_powers()
        # structural sanity of the residue class of x
        minus_one = tuple([Fraction(-1)] + [Fraction(0)] * (self.degree - 1))
        if self._gen_powers[p] != minus_one:
            raise AssertionError("residue class of x is not a primitive 2p-th root")

    def _reduce(self, coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
        out = list(coeffs)
        for k in range(len(out) - 1, self.degree - 1, -1):
            lead = out[k]
            if lead:
                offset = k - self.degree
                for i in range(self.degree):
                    out[offset + i] -= lead * self.modulus[i]
                out[k] = Fraction(0)
        out = out[: self.degree]
        out += [Fraction(0)] * (self.degree - len(out))
        return tuple(out)

    def _build_gen_powers(self) -> tuple[tuple[Fraction, ...], ...]:
        powers = []
        current = [Fraction(1)] + [Fraction(0)] * (self.degree - 1)
        for _ in range(2 * self.p):
            powers.append(tuple(current))
            current = list(self._reduce([Fraction(0)] + current))
        return tuple(powers)

    def element(self, coefficients: Sequence[RationalLike]) -> CyclotomicElement:
        reduced = self._reduce([_q(c) for c in coefficients])
        return CyclotomicElement(self, reduced)

    def zero(self) -> CyclotomicElement:
        return self.element(())

    def one(self) -> CyclotomicElement:
        return self.element((1,))

    def from_rational(self, value: RationalLike) -> CyclotomicElement:
        return self.element((value,))

    def gen(self) -> CyclotomicElement:
        """The residue class A of x, a primitive 2p-th root of unity."""
        return self.gen_power(1)

    def gen_power(self, k: int) -> CyclotomicElement:
        """A^k for any integer k (negative exponents use A^(2p) = 1)."""
        return CyclotomicElement(self, self._gen_powers[k % (2 * self.p)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclotomicField):
            return NotImplemented
        return self.p == other.p

    def __hash__(self) -> int:
        return hash(("CyclotomicField", self.p))

    def __repr__(self) -> str:
        return f"CyclotomicField(p={self.p}, degree={self.degree})"


def _poly_divmod(
    num: Sequence[Fraction], den: Sequence[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    num = list(num)
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead_inv = Fraction(1) / den[-1]
    for k in range(len(q) - 1, -1, -1):
        coeff = num[k + len(den) - 1] * lead_inv
        q[k] = coeff
        if coeff:
            for i, d in enumerate(den):
                num[k + i] -= coeff * d
    while num and num[-1] == 0:
        num.pop()
    return q, num


class CyclotomicElement:
    """An element of Q(zeta_2p), stored as a reduced coefficient tuple."""

    __slots__ = ("field", "coefficients")

    def __init__(self, field: CyclotomicField, coefficients: tuple[Fraction, ...]):
        self.field = field
        self.coefficients = coefficients

    def _coerce(self, other: object) -> CyclotomicElement | None:
        if isinstance(other, CyclotomicElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __bool__(self) -> bool:
        return any(c != 0 for c in self.coefficients)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CyclotomicElement) and other.field != self.field:
            return False
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.coefficients == coerced.coefficients

    def __hash__(self) -> int:
        return hash((self.field.p, self.coefficients))

    def __neg__(self) -> CyclotomicElement:
        return CyclotomicElement(self.field, tuple(-c for c in self.coefficients))

    def __add__(self, other: object) -> CyclotomicElement:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return CyclotomicElement(
            self.field,
            tuple(a + b for a, b in zip(self.coefficients, coerced.coefficients)),
        )

    __radd__ = __add__

    def __sub__(self, other: object) -> CyclotomicElement:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self + (-coerced)

    def __rsub__(self, other: object) -> CyclotomicElement:
        return (-self) + other

    def __mul__(self, other: object) -> CyclotomicElement:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        a, b = self.coefficients, coerced.coefficients
        out = [Fraction(0)] * (2 * self.field.degree - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y != 0:
                    out[i + j] += x * y
        return CyclotomicElement(self.field, self.field._reduce(out))

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicElement:
        """Multiplicative inverse by the extended Euclidean algorithm
        against the (irreducible) modulus."""
        if not self:
            raise ZeroDivisionError("zero has no inverse")
        # r0 = self, r1 = modulus; track u with u * self = r (mod modulus)
        r0 = list(self.coefficients)
        r1 = [Fraction(c) for c in self.field.modulus]
        u0: list[Fraction] = [Fraction(1)]
        u1: list[Fraction] = []
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            # u_next = u0 - q * u1
            u_next = list(u0)
            if q and u1:
                prod = [Fraction(0)] * (len(q) + len(u1) - 1)
                for i, x in enumerate(q):
                    if x == 0:
                        continue
                    for j, y in enumerate(u1):
                        prod[i + j] += x * y
                if len(u_next) < len(prod):
                    u_next += [Fraction(0)] * (len(prod) - len(u_next))
                for i, x in enumerate(prod):
                    u_next[i] -= x
            r0, r1 = r1, r
            u0, u1 = u1, u_next
        while r0 and r0[-1] == 0:
            r0.pop()
        if len(r0) != 1:
            raise ArithmeticError("modulus is not coprime to the element")
        scale = Fraction(1) / r0[0]
        return CyclotomicElement(
            self.field, self.field._reduce([c * scale for c in u0])
        )

    def __truediv__(self, other: object) -> CyclotomicElement:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self * coerced.inverse()

    def __rtruediv__(self, other: object) -> CyclotomicElement:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced * self.inverse()

    def __pow__(self, exponent: int) -> CyclotomicElement:
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = self.field.one()
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def embed(self, s: int = 1) -> complex:
        """Numerical image under A -> exp(i pi s / p); s must be coprime
        to 2p for the map to be a field embedding."""
        root = cmath.exp(1j * cmath.pi * s / self.field.p)
        value = 0j
        for k, c in enumerate(self.coefficients):
            if c:
                value += float(c) * root**k
        return value

    def render(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coefficients) + "]"

    def __repr__(self) -> str:
        return f"CyclotomicElement(p={self.field.p}, {self.render()})"


class LaurentPolynomial:
    """Integer-coefficient Laurent polynomial in the root A.

    Used to state quantum-integer identities generically before picking a
    concrete field; specialize() maps A^k to gen_power(k).
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms: dict[int, int] = {
            e: c for e, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def zero(cls) -> LaurentPolynomial:
        return cls({})

    @classmethod
    def one(cls) -> LaurentPolynomial:
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPolynomial:
        return cls({exponent: coefficient})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({e: -c for e, c in self.terms.items()})

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other: Union[LaurentPolynomial, int]) -> LaurentPolynomial:
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def specialize(self, field: CyclotomicField) -> CyclotomicElement:
        total = field.zero()
        for e, c in self.terms.items():
            total = total + field.gen_power(e) * c
        return total

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*A^{e}" for e, c in sorted(self.terms.items()))
        return f"LaurentPolynomial({body or '0'})"


def quantum_integer_laurent(n: int) -> LaurentPolynomial:
    """The quantum integer [n] = (A^2n - A^-2n)/(A^2 - A^-2) as a Laurent
    polynomial: A^(2n-2) + A^(2n-6) + ... + A^(2-2n); [-n] = -[n]."""
    if n == 0:
        return LaurentPolynomial.zero()
    if n < 0:
        return -quantum_integer_laurent(-n)
    return LaurentPolynomial({2 * n - 2 - 4 * k: 1 for k in range(n)})
