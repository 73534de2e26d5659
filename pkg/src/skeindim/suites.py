"""Named verification batteries behind `verify --suite ...`.

Each battery re-runs an exact identity family over its full documented
range and reports one CheckResult per family.  Batteries aggregate; the
first failing instance is named in the detail string.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

from .bernoulli import (
    bernoulli_half_value,
    bernoulli_number,
    bernoulli_numbers,
    bernoulli_polynomial,
    faulhaber_poly,
)
from .certify import CheckResult, build_certificate, lower_bound
from .cyclotomic import cyclotomic_field
from .exact import BivariatePolynomial, TruncatedSeries, UnivariatePolynomial
from .skein import (
    AnnulusSkein,
    bracket_e,
    d_squared,
    e_product,
    flat_curve_check,
    quantum_integer,
    recoloring_check,
)
from .verlinde import (
    decompose,
    dimension,
    fusion_dimension,
    leading_term_check,
    odd_color_polynomial,
    oracle_crosscheck,
    parity_checks,
    verlinde_polynomial,
)

EMBED_TOLERANCE = 1e-9


def _aggregate(name: str, failures: list[str], detail_ok: str) -> CheckResult:
    if failures:
        return CheckResult(name, False, "; ".join(failures[:3]))
    return CheckResult(name, True, detail_ok)


# ------------------------------------------------------------- bernoulli


def bernoulli_suite(max_half_index: int = 40, max_faulhaber: int = 20) -> list[CheckResult]:
    checks: list[CheckResult] = []

    failures = []
    table = bernoulli_numbers(max_half_index)
    for m in range(max_half_index + 1):
        if bernoulli_half_value(m) != (Fraction(2) ** (1 - m) - 1) * table[m]:
            failures.append(f"m={m}")
    checks.append(
        _aggregate(
            "half_value_identity",
            failures,
            f"B_m(1/2) = (2^(1-m)-1) B_m for m <= {max_half_index}",
        )
    )

    failures = []
    for m in range(1, max_faulhaber + 1):
        poly = faulhaber_poly(m)  # raises if the two closed forms disagree
        for n in range(1, 51):
            if poly(n) != sum(y**m for y in range(1, n + 1)):
                failures.append(f"m={m}, N={n}")
                break
    checks.append(
        _aggregate(
            "power_sum_closed_forms",
            failures,
            f"both closed forms match brute force for m <= {max_faulhaber}, N <= 50",
        )
    )

    failures = []
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
        if series.coefficient(n) != expected:
            failures.append(f"t^{n}")
    checks.append(
        _aggregate(
            "generating_function",
            failures,
            f"series coefficients equal B_n(x)/n! through t^{order}",
        )
    )

    failures = []
    shift = UnivariatePolynomial([Fraction(1, 2), Fraction(1, 2)])  # (p+1)/2
    for beta in range(0, 9):
        even_case = bernoulli_polynomial(2 * beta)(shift)
        odd_case = bernoulli_polynomial(2 * beta + 1)(shift)
        if not all(e % 2 == 0 for e in even_case.exponents()):
            failures.append(f"even case beta={beta}")
        if not all(e % 2 == 1 for e in odd_case.exponents()):
            failures.append(f"odd case beta={beta}")
    checks.append(
        _aggregate(
            "half_shift_parity",
            failures,
            "B_m((p+1)/2) is even/odd in p as m is even/odd, for m <= 17",
        )
    )

    checks.append(
        CheckResult(
            "sign_convention",
            bernoulli_number(1) == Fraction(-1, 2),
            "B_1 = -1/2 (the generating function t/(e^t - 1) fixes it)",
        )
    )
    return checks


# -------------------------------------------------------------- verlinde


def verlinde_suite(g_max: int = 5, p_max: int = 13) -> list[CheckResult]:
    checks: list[CheckResult] = []

    genus_one = BivariatePolynomial(
        {(1, 0): Fraction(1, 2), (0, 1): -1, (0, 0): Fraction(-1, 2)}, ("p", "c")
    )
    odd_one = BivariatePolynomial({(0, 1): 1}, ("p", "s"))
    checks.append(
        CheckResult(
            "genus_one_closed_form",
            verlinde_polynomial(1) == genus_one and odd_color_polynomial(1) == odd_one,
            "p/2 - c - 1/2 and (after substitution) s",
        )
    )

    failures = []
    for g in range(1, g_max + 1):
        for kind in ("even", "odd"):
            try:
                decompose(g, kind)
            except ValueError as exc:
                failures.append(f"g={g} {kind}: {exc}")
    checks.append(
        _aggregate(
            "decomposition_structure",
            failures,
            f"support and exact degrees hold for g <= {g_max}",
        )
    )

    failures = []
    for g in range(1, g_max + 1):
        even = decompose(g, "even").parts
        odd = decompose(g, "odd").parts
        for k in range(g):
            j = g - 1 + 2 * k
            lead_even = (
                Fraction((-1) ** g)
                * bernoulli_number(2 * k)
                / (math.factorial(2 * k) * math.factorial(2 * g - 1 - 2 * k))
            )
            lead_odd = (
                Fraction((-1) ** (g + 1))
                * bernoulli_half_value(2 * k)
                / (math.factorial(2 * g - 1 - 2 * k) * math.factorial(2 * k))
            )
            if even[j].leading_coefficient != lead_even:
                failures.append(f"even g={g} j={j}")
            if odd[j].leading_coefficient != lead_odd:
                failures.append(f"odd g={g} j={j}")
        lead_mid = Fraction((-1) ** g) * bernoulli_number(1) / math.factorial(2 * g - 2)
        if even[g].leading_coefficient != lead_mid:
            failures.append(f"even g={g} j={g}")
    checks.append(
        _aggregate(
            "leading_coefficient_bernoulli_multiples",
            failures,
            "leading coefficients carry the expected Bernoulli values",
        )
    )

    failures = [
        f"g={g}: {leading_term_check(g).detail}"
        for g in range(1, g_max + 1)
        if not leading_term_check(g).passed
    ]
    checks.append(
        _aggregate(
            "leading_term_identity",
            failures,
            f"top homogeneous part matches its closed form for g <= {g_max}",
        )
    )

    failures = []
    for g in range(1, g_max + 1):
        try:
            parity_checks(g)
        except ValueError as exc:
            failures.append(f"g={g}: {exc}")
    checks.append(
        _aggregate("parity_structure", failures, f"parity constraints hold for g <= {g_max}")
    )

    report = oracle_crosscheck(g_max, p_max)
    checks.append(
        CheckResult(
            "residue_vs_fusion",
            report.ok,
            f"{report.checked} values compared"
            + ("" if report.ok else f", {len(report.mismatches)} mismatches"),
        )
    )

    failures = []
    for g in range(1, g_max + 1):
        for p in range(3, p_max + 1, 2):
            for m in range(0, p - 1):
                s = (m + 1) // 2 if m % 2 == 1 else (p - 1) // 2 - m // 2
                if dimension(g, p, m) != fusion_dimension(g, p, s):
                    failures.append(f"g={g} p={p} m={m}")
    checks.append(
        _aggregate(
            "all_colors_integral",
            failures,
            f"every admissible color agrees with the fusion recursion, g <= {g_max}",
        )
    )
    return checks


# ----------------------------------------------------------------- skein


def skein_suite(p_max: int = 31, g_max: int = 5, product_max: int = 20) -> list[CheckResult]:
    checks: list[CheckResult] = []
    odd_levels = list(range(3, p_max + 1, 2))

    failures = []
    for p in odd_levels:
        field = cyclotomic_field(p)
        for g in range(1, g_max + 1):
            result = flat_curve_check(g, field)
            if not result.equal:
                failures.append(f"p={p} g={g} unequal")
            if not result.lhs:
                failures.append(f"p={p} g={g} vanishes")
    checks.append(
        _aggregate(
            "flat_curve_two_forms",
            failures,
            f"both closed forms agree and are nonzero for p <= {p_max}, g <= {g_max}",
        )
    )

    failures = []
    for p in odd_levels:
        field = cyclotomic_field(p)
        for s in range(1, (p - 1) // 2 + 1):
            if not recoloring_check(s, field):
                failures.append(f"p={p} s={s}")
    checks.append(
        _aggregate(
            "recoloring_brackets",
            failures,
            f"bracket recoloring identity holds for every s, p <= {p_max}",
        )
    )

    failures = [
        f"p={p}"
        for p in odd_levels
        if quantum_integer(p, cyclotomic_field(p))
    ]
    checks.append(
        _aggregate("vanishing_quantum_level", failures, f"[p] = 0 for p <= {p_max}")
    )

    failures = []
    for p in odd_levels:
        field = cyclotomic_field(p)
        delta = field.gen_power(2) - field.gen_power(-2)
        if delta * delta * d_squared(field) != field.from_rational(-p):
            failures.append(f"p={p}")
    checks.append(
        _aggregate(
            "normalization_square",
            failures,
            "(A^2 - A^-2)^2 D^2 = -p for every level",
        )
    )

    failures = []
    for i in range(product_max + 1):
        for j in range(i, product_max + 1):
            closed = e_product(i, j)
            if closed != AnnulusSkein.basis_element(i) * AnnulusSkein.basis_element(j):
                failures.append(f"i={i} j={j}")
            if closed != e_product(j, i):
                failures.append(f"i={i} j={j} asymmetric")
    checks.append(
        _aggregate(
            "e_basis_product_law",
            failures,
            f"closed-form products match the z-power route for i, j <= {product_max}",
        )
    )

    failures = []
    for p in [q for q in odd_levels if q <= 13]:
        field = cyclotomic_field(p)
        flat = flat_curve_check(min(g_max, 3), field)
        for s in range(1, 2 * p):
            if math.gcd(s, 2 * p) != 1:
                continue
            if abs(quantum_integer(p, field).embed(s)) > EMBED_TOLERANCE:
                failures.append(f"p={p} s={s} [p]")
            if abs(flat.lhs.embed(s) - flat.rhs.embed(s)) > EMBED_TOLERANCE:
                failures.append(f"p={p} s={s} flat curve")
            for color in range(1, (p - 1) // 2 + 1):
                delta = bracket_e(2 * color - 1, field) - bracket_e(
                    p - 2 * color - 1, field
                )
                if abs(delta.embed(s)) > EMBED_TOLERANCE:
                    failures.append(f"p={p} s={s} recoloring")
    checks.append(
        _aggregate(
            "numeric_embedding",
            failures,
            f"exact identities embed to floating identities within {EMBED_TOLERANCE}",
        )
    )
    return checks


# --------------------------------------------------------------- certify


def certify_suite(g_max: int = 5) -> list[CheckResult]:
    checks: list[CheckResult] = []
    known = {0: 1, 1: 9, 2: 35}
    failures = [
        f"g={g}: {lower_bound(g)} != {value}"
        for g, value in known.items()
        if lower_bound(g) != value
    ]
    checks.append(
        _aggregate("lower_bound_values", failures, "bounds 1, 9, 35 at g = 0, 1, 2")
    )

    failures = []
    for g in range(1, g_max + 1):
        certificate = build_certificate(g)
        if not certificate.valid:
            bad = [c.name for c in certificate.checks if not c.passed]
            failures.append(f"g={g}: {', '.join(bad)}")
        elif certificate.dim_00 != g + 1 or certificate.dim_01 != g:
            failures.append(f"g={g}: ranks {certificate.dim_00}, {certificate.dim_01}")
    checks.append(
        _aggregate(
            "certificates_valid",
            failures,
            f"certificates valid with ranks g+1 and g for g <= {g_max}",
        )
    )
    return checks


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "bernoulli": bernoulli_suite,
    "verlinde": verlinde_suite,
    "skein": skein_suite,
    "certify": certify_suite,
}


def run_suite(name: str) -> list[CheckResult]:
    """Run one named battery, or all of them in a fixed order."""
    if name == "all":
        results: list[CheckResult] = []
        for suite_name in ("bernoulli", "verlinde", "skein", "certify"):
            results.extend(SUITES[suite_name]())
        return results
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{', '.join([*SUITES, 'all'])}")
    return SUITES[name]()
