"""Exact arithmetic kernel: rationals, polynomials, truncated power series,
and exact matrix rank.

Every scalar in this module is a `fractions.Fraction`; no floating point
enters any computation.  Polynomials keep canonical forms (no stored zero
coefficients, stripped trailing zeros), so structural predicates such as
"degree exactly n" or "only even powers of p" are decided exactly.

Representations:

  UnivariatePolynomial  dense coefficient tuple, lowest degree first.
  BivariatePolynomial   sparse dict {(i, j): coeff} with a named variable
                        pair such as ("p", "c"); many of the polynomials
                        produced downstream are structurally sparse.
  TruncatedSeries       power series in an auxiliary variable t whose
                        coefficients are BivariatePolynomial values, exact
                        through a fixed truncation order.
  RationalMatrix        rank via fraction-free (Bareiss) elimination over
                        the integers after clearing row denominators.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

RationalLike = Union[Fraction, int]

#: Degree of the zero polynomial.  A float sentinel, never an int, so a
#: check like ``poly.degree == 0`` is unambiguously false for it.
NEG_INFINITY = float("-inf")


def _q(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def binomial(n: int, k: int) -> Fraction:
    """Binomial coefficient n-choose-k as an exact rational; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial requires nonnegative arguments")
    return Fraction(math.comb(n, k))


def _format_terms(terms: Sequence[tuple[Fraction, str]]) -> str:
    """Join (coefficient, monomial) pairs into the canonical text form.

    The first term carries its own sign ("-1/2"); later terms are joined
    with " + " or " - ".  A coefficient of magnitude one is dropped in
    front of a nonempty monomial.
    """
    if not terms:
        return "0"
    parts: list[str] = []
    for index, (coeff, mono) in enumerate(terms):
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        if mono and magnitude == 1:
            body = mono
        elif mono:
            body = f"{magnitude}*{mono}"
        else:
            body = str(magnitude)
        if index == 0:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append(("- " if negative else "+ ") + body)
    return " ".join(parts)


class UnivariatePolynomial:
    """Dense univariate polynomial over the rationals.

    Trailing zero coefficients are stripped on construction; the zero
    polynomial has an empty coefficient tuple and degree ``NEG_INFINITY``.
    Instances are immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        coeffs = [_q(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def zero(cls) -> UnivariatePolynomial:
        return cls(())

    @classmethod
    def constant(cls, value: RationalLike) -> UnivariatePolynomial:
        return cls((value,))

    @classmethod
    def variable(cls) -> UnivariatePolynomial:
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> UnivariatePolynomial:
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * degree + (coefficient,))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> Union[int, float]:
        return len(self._coeffs) - 1 if self._coeffs else NEG_INFINITY

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError("coefficient index must be nonnegative")
        return self._coeffs[k] if k < len(self._coeffs) else Fraction(0)

    def exponents(self) -> set[int]:
        return {k for k, c in enumerate(self._coeffs) if c != 0}

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UnivariatePolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == UnivariatePolynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> UnivariatePolynomial:
        return UnivariatePolynomial(-c for c in self._coeffs)

    def __add__(self, other: Union[UnivariatePolynomial, RationalLike]) -> UnivariatePolynomial:
        if isinstance(other, (int, Fraction)):
            other = UnivariatePolynomial.constant(other)
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return UnivariatePolynomial(out)

    __radd__ = __add__

    def __sub__(self, other: Union[UnivariatePolynomial, RationalLike]) -> UnivariatePolynomial:
        return self + (-other if isinstance(other, UnivariatePolynomial) else -_q(other))

    def __rsub__(self, other: RationalLike) -> UnivariatePolynomial:
        return (-self) + other

    def __mul__(self, other: Union[UnivariatePolynomial, RationalLike]) -> UnivariatePolynomial:
        if isinstance(other, (int, Fraction)):
            scalar = _q(other)
            return UnivariatePolynomial(c * scalar for c in self._coeffs)
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return UnivariatePolynomial.zero()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: RationalLike) -> UnivariatePolynomial:
        return self * (Fraction(1) / _q(scalar))

    def __pow__(self, exponent: int) -> UnivariatePolynomial:
        if exponent < 0:
            raise ValueError("polynomial exponent must be nonnegative")
        result = UnivariatePolynomial.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(
        self, point: Union[RationalLike, UnivariatePolynomial]
    ) -> Union[Fraction, UnivariatePolynomial]:
        """Evaluate at a rational point, or compose with another polynomial."""
        if isinstance(point, UnivariatePolynomial):
            acc: UnivariatePolynomial = UnivariatePolynomial.zero()
            for c in reversed(self._coeffs):
                acc = acc * point + c
            return acc
        x = _q(point)
        value = Fraction(0)
        for c in reversed(self._coeffs):
            value = value * x + c
        return value

    def render(self, var: str = "x") -> str:
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            else:
                mono = f"{var}^{k}"
            terms.append((c, mono))
        return _format_terms(terms)

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({self.render()})"


class BivariatePolynomial:
    """Sparse exact polynomial in two named variables.

    Terms map exponent pairs (i, j) to nonzero rational coefficients where
    i is the power of the first variable and j of the second.  Arithmetic
    between two polynomials requires identical variable pairs.
    """

    __slots__ = ("_terms", "_vars")

    def __init__(
        self,
        terms: Mapping[tuple[int, int], RationalLike] | None = None,
        variables: tuple[str, str] = ("p", "c"),
    ):
        if len(variables) != 2 or variables[0] == variables[1]:
            raise ValueError("need two distinct variable names")
        cleaned: dict[tuple[int, int], Fraction] = {}
        for (i, j), value in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            coeff = _q(value)
            if coeff != 0:
                cleaned[(i, j)] = coeff
        self._terms = cleaned
        self._vars = (str(variables[0]), str(variables[1]))

    @classmethod
    def zero(cls, variables: tuple[str, str] = ("p", "c")) -> BivariatePolynomial:
        return cls({}, variables)

    @classmethod
    def constant(cls, value: RationalLike, variables: tuple[str, str] = ("p", "c")) -> BivariatePolynomial:
        return cls({(0, 0): value}, variables)

    @classmethod
    def first(cls, variables: tuple[str, str] = ("p", "c")) -> BivariatePolynomial:
        return cls({(1, 0): 1}, variables)

    @classmethod
    def second(cls, variables: tuple[str, str] = ("p", "c")) -> BivariatePolynomial:
        return cls({(0, 1): 1}, variables)

    @property
    def variables(self) -> tuple[str, str]:
        return self._vars

    @property
    def total_degree(self) -> Union[int, float]:
        if not self._terms:
            return NEG_INFINITY
        return max(i + j for i, j in self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def terms(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Terms in graded order: total degree ascending, then powers of the
        first variable descending (so p precedes c within a degree)."""
        for key in sorted(self._terms, key=lambda ij: (ij[0] + ij[1], ij[1])):
            yield key, self._terms[key]

    def exponents(self, axis: int) -> set[int]:
        if axis not in (0, 1):
            raise ValueError("axis must be 0 or 1")
        return {key[axis] for key in self._terms}

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BivariatePolynomial):
            return self._vars == other._vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == BivariatePolynomial.constant(other, self._vars)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._vars, frozenset(self._terms.items())))

    def _check_compatible(self, other: BivariatePolynomial) -> None:
        if self._vars != other._vars:
            raise ValueError(f"variable mismatch: {self._vars} vs {other._vars}")

    def __neg__(self) -> BivariatePolynomial:
        return BivariatePolynomial({k: -v for k, v in self._terms.items()}, self._vars)

    def __add__(self, other: Union[BivariatePolynomial, RationalLike]) -> BivariatePolynomial:
        if isinstance(other, (int, Fraction)):
            other = BivariatePolynomial.constant(other, self._vars)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._terms)
        for key, value in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + value
        return BivariatePolynomial(out, self._vars)

    __radd__ = __add__

    def __sub__(self, other: Union[BivariatePolynomial, RationalLike]) -> BivariatePolynomial:
        if isinstance(other, (int, Fraction)):
            other = BivariatePolynomial.constant(other, self._vars)
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> BivariatePolynomial:
        return (-self) + other

    def __mul__(self, other: Union[BivariatePolynomial, RationalLike]) -> BivariatePolynomial:
        if isinstance(other, (int, Fraction)):
            scalar = _q(other)
            if scalar == 0:
                return BivariatePolynomial.zero(self._vars)
            return BivariatePolynomial(
                {k: v * scalar for k, v in self._terms.items()}, self._vars
            )
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        self._check_compatible(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self._terms.items():
            for (i2, j2), b in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + a * b
        return BivariatePolynomial(out, self._vars)

    __rmul__ = __mul__

    def __truediv__(self, scalar: RationalLike) -> BivariatePolynomial:
        return self * (Fraction(1) / _q(scalar))

    def __pow__(self, exponent: int) -> BivariatePolynomial:
        if exponent < 0:
            raise ValueError("polynomial exponent must be nonnegative")
        result = BivariatePolynomial.constant(1, self._vars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, first: RationalLike, second: RationalLike) -> Fraction:
        x, y = _q(first), _q(second)
        total = Fraction(0)
        for (i, j), coeff in self._terms.items():
            total += coeff * x**i * y**j
        return total

    def homogeneous_part(self, n: int) -> BivariatePolynomial:
        """Sum of the terms of total degree exactly n."""
        return BivariatePolynomial(
            {key: v for key, v in self._terms.items() if key[0] + key[1] == n},
            self._vars,
        )

    def split_by_first(self) -> dict[int, UnivariatePolynomial]:
        """Group terms by the power of the first variable.

        Returns {i: q_i} with self == sum_i first^i * q_i(second); only
        nonzero q_i appear.
        """
        buckets: dict[int, dict[int, Fraction]] = {}
        for (i, j), coeff in self._terms.items():
            buckets.setdefault(i, {})[j] = coeff
        out: dict[int, UnivariatePolynomial] = {}
        for i, bucket in buckets.items():
            coeffs = [Fraction(0)] * (max(bucket) + 1)
            for j, coeff in bucket.items():
                coeffs[j] = coeff
            out[i] = UnivariatePolynomial(coeffs)
        return out

    def divide_by_first_power(self, k: int) -> BivariatePolynomial:
        """Exact division by first^k; fails if some term has a lower power."""
        if k < 0:
            raise ValueError("power must be nonnegative")
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), coeff in self._terms.items():
            if i < k:
                raise ValueError(
                    f"not divisible by {self._vars[0]}^{k}: term with exponent {i}"
                )
            out[(i - k, j)] = coeff
        return BivariatePolynomial(out, self._vars)

    def substitute_second(
        self, replacement: BivariatePolynomial
    ) -> BivariatePolynomial:
        """Substitute the second variable by a polynomial (in the target's
        variable pair); the first variable maps to the target's first."""
        target_vars = replacement.variables
        power_cache: list[BivariatePolynomial] = [
            BivariatePolynomial.constant(1, target_vars)
        ]
        max_j = max((j for _, j in self._terms), default=0)
        while len(power_cache) <= max_j:
            power_cache.append(power_cache[-1] * replacement)
        result = BivariatePolynomial.zero(target_vars)
        for (i, j), coeff in self._terms.items():
            term = BivariatePolynomial({(i, 0): coeff}, target_vars)
            result = result + term * power_cache[j]
        return result

    def render(self) -> str:
        v1, v2 = self._vars
        rendered = []
        for (i, j), coeff in self.terms():
            pieces = []
            if i == 1:
                pieces.append(v1)
            elif i > 1:
                pieces.append(f"{v1}^{i}")
            if j == 1:
                pieces.append(v2)
            elif j > 1:
                pieces.append(f"{v2}^{j}")
            rendered.append((coeff, "*".join(pieces)))
        return _format_terms(rendered)

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.render()}; vars={self._vars})"


def substitute_half(
    poly: BivariatePolynomial, new_second: str = "s"
) -> BivariatePolynomial:
    """Exact substitution second <- (first - 1)/2 - new_second.

    Used to pass from the even-color variable c to the odd-color variable s
    via c = (p - 1)/2 - s.  The first variable is fixed; the result lives in
    the variable pair (first, new_second).
    """
    target = (poly.variables[0], new_second)
    replacement = BivariatePolynomial(
        {(1, 0): Fraction(1, 2), (0, 0): Fraction(-1, 2), (0, 1): -1}, target
    )
    return poly.substitute_second(replacement)


def binomial_poly_in_c(g: int, variables: tuple[str, str] = ("p", "c")) -> BivariatePolynomial:
    """binom(c + g - 1, 2g - 2) expanded as a polynomial in c (no p terms).

    This is the degree-(2g-2) polynomial
    (c+g-1)(c+g-2)...(c-g+2) / (2g-2)!, with the empty product 1 at g = 1.
    """
    if g < 1:
        raise ValueError("genus must be at least 1")
    k = 2 * g - 2
    c = BivariatePolynomial.second(variables)
    product = BivariatePolynomial.constant(1, variables)
    for t in range(k):
        product = product * (c + (g - 1 - t))
    return product / Fraction(math.factorial(k))


class TruncatedSeries:
    """Power series in an auxiliary variable t, exact through a fixed order.

    The coefficient sequence has length order + 1, entry k being the exact
    coefficient polynomial of t^k.  Products and inverses of order-N series
    are again exact through order N; mixing orders is an error rather than
    a silent re-truncation.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coefficients: Sequence[BivariatePolynomial]):
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coefficients) != order + 1:
            raise ValueError(
                f"need exactly {order + 1} coefficients, got {len(coefficients)}"
            )
        variables = coefficients[0].variables
        for coeff in coefficients:
            if coeff.variables != variables:
                raise ValueError("all coefficients must share one variable pair")
        self._order = order
        self._coeffs = tuple(coefficients)

    @classmethod
    def one(cls, order: int, variables: tuple[str, str] = ("p", "c")) -> TruncatedSeries:
        coeffs = [BivariatePolynomial.constant(1, variables)]
        coeffs += [BivariatePolynomial.zero(variables) for _ in range(order)]
        return cls(order, coeffs)

    @classmethod
    def build(
        cls,
        order: int,
        variables: tuple[str, str],
        term: Callable[[int], BivariatePolynomial],
    ) -> TruncatedSeries:
        return cls(order, [term(k) for k in range(order + 1)])

    @property
    def order(self) -> int:
        return self._order

    @property
    def variables(self) -> tuple[str, str]:
        return self._coeffs[0].variables

    def coefficient(self, k: int) -> BivariatePolynomial:
        if k < 0:
            raise ValueError("coefficient index must be nonnegative")
        if k > self._order:
            raise ValueError(f"coefficient {k} beyond truncation order {self._order}")
        return self._coeffs[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self._order != other._order:
            raise ValueError(
                f"truncation order mismatch: {self._order} vs {other._order}"
            )
        variables = self.variables
        out = [BivariatePolynomial.zero(variables) for _ in range(self._order + 1)]
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j in range(self._order + 1 - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self._order, out)

    def __pow__(self, exponent: int) -> TruncatedSeries:
        if exponent < 0:
            raise ValueError("series exponent must be nonnegative; invert first")
        result = TruncatedSeries.one(self._order, self.variables)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse through the truncation order.

        Requires constant term exactly 1 (a malformed series is rejected
        rather than normalized).
        """
        one = BivariatePolynomial.constant(1, self.variables)
        if self._coeffs[0] != one:
            raise ValueError("series inverse requires constant term 1")
        inv = [one]
        for m in range(1, self._order + 1):
            acc = BivariatePolynomial.zero(self.variables)
            for k in range(1, m + 1):
                a = self._coeffs[k]
                if a:
                    acc = acc + a * inv[m - k]
            inv.append(-acc)
        return TruncatedSeries(self._order, inv)


class RationalMatrix:
    """Immutable rational matrix with exact rank computation.

    Rank runs fraction-free: each row is scaled to integers (rank
    preserving) and eliminated Bareiss style, dividing by the previous
    pivot so intermediate entries stay minors of the scaled matrix.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Sequence[Sequence[RationalLike]]):
        rows = [tuple(_q(x) for x in row) for row in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("all rows must have the same length")
        self._entries = tuple(rows)

    @property
    def rows(self) -> int:
        return len(self._entries)

    @property
    def cols(self) -> int:
        return len(self._entries[0])

    def entry(self, i: int, j: int) -> Fraction:
        return self._entries[i][j]

    def rank(self) -> int:
        m = []
        for row in self._entries:
            scale = math.lcm(*(x.denominator for x in row))
            m.append([int(x * scale) for x in row])
        n_rows, n_cols = len(m), len(m[0])
        rank = 0
        prev_pivot = 1
        for col in range(n_cols):
            pivot_row = next(
                (i for i in range(rank, n_rows) if m[i][col] != 0), None
            )
            if pivot_row is None:
                continue
            m[rank], m[pivot_row] = m[pivot_row], m[rank]
            pivot = m[rank][col]
            for i in range(rank + 1, n_rows):
                factor = m[i][col]
                for j in range(col + 1, n_cols):
                    m[i][j] = (m[i][j] * pivot - factor * m[rank][j]) // prev_pivot
                m[i][col] = 0
            prev_pivot = pivot
            rank += 1
            if rank == n_rows:
                break
        return rank

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"
