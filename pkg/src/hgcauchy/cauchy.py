"""Hypergeometric Cauchy numbers c(N, n) by independent exact methods.

The family is defined through the reciprocal of the Gauss series

    F_N(x) = sum_j (-1)^j N/(N+j) x^j,        1/F_N(x) = sum_n c(N, n) x^n/n!,

so N = 1 recovers the classical Cauchy numbers (x/log(1+x) expansion). The
normalized values b_n = c(N, n)/n! are often the more convenient object; every
table here can hand them back via :meth:`CauchyTable.normalized`.

Five routes to the same table are implemented, deliberately kept independent
of each other so they can cross-check one another:

``series``        reciprocal of the truncated F_N (the reference oracle)
``recurrence``    bottom-up solution of the defining convolution identity
``determinant``   Toeplitz lower-Hessenberg determinant over bands N/(N+k)
``compositions``  exhaustive signed sum over strict integer compositions
``trudi``         partition-multiset expansion of the same determinant

The classical validators at the end pin the machinery to well-known sequences
(Bernoulli and Euler numbers as Hessenberg determinants).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .combinat import STRICT_COMPOSITION_CAP, multinomial
from .errors import CapExceeded
from .hessenberg import (
    PARTITION_CAP,
    HessenbergSpec,
    determinant_sequence,
    enumerate_partition_multiplicities,
    trudi_sum,
)
from .report import VerificationReport, failed, passed
from .series import TruncatedSeries

__all__ = [
    "CauchyTable",
    "hgc_generating_series",
    "c_via_series",
    "c_via_recurrence",
    "c_via_determinant",
    "c_via_compositions",
    "c_via_trudi",
    "ratio_inversion",
    "classical_bernoulli_det",
    "classical_euler_det",
    "c_closed_form",
    "c_trudi_printed_variant",
]

FIRST_ORDER_METHODS = ("series", "recurrence", "determinant", "compositions", "trudi")
HIGHER_ORDER_METHODS = ("recurrence", "determinant", "explicit", "trudi", "convolution")
METHODS = frozenset(FIRST_ORDER_METHODS) | frozenset(HIGHER_ORDER_METHODS)


def _check_parameters(N: int, n_max: int, r: int = 1) -> None:
    if N < 1:
        raise ValueError(f"N must be a positive integer, got {N}")
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")


@dataclass(frozen=True)
class CauchyTable:
    """Exact values c(N, n) for n = 0 .. n_max at order r.

    ``method`` records which route produced the table; the values themselves
    are method-independent and the verification suites enforce that.
    """

    N: int
    r: int
    n_max: int
    values: tuple[Fraction, ...]
    method: str

    def __post_init__(self):
        _check_parameters(self.N, self.n_max, self.r)
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if len(self.values) != self.n_max + 1:
            raise ValueError("values must list n = 0 .. n_max")
        if self.values[0] != 1:
            raise ValueError("index 0 must be 1")
        if self.n_max >= 1 and self.values[1] != Fraction(self.r * self.N, self.N + 1):
            raise ValueError("index 1 must be r*N/(N+1)")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    def normalized(self) -> list[Fraction]:
        """b_n = c(N, n)/n! for n = 0 .. n_max."""
        return [v / factorial(n) for n, v in enumerate(self.values)]


def hgc_generating_series(N: int, order: int) -> TruncatedSeries:
    """The truncated Gauss series F_N: coefficient j is (-1)^j N/(N+j)."""
    _check_parameters(N, order)
    return TruncatedSeries(
        tuple(Fraction((-1) ** j * N, N + j) for j in range(order + 1))
    )


def c_via_series(N: int, n_max: int) -> CauchyTable:
    """Reference method: n! times the reciprocal coefficients of F_N."""
    _check_parameters(N, n_max)
    recip = hgc_generating_series(N, n_max).reciprocal()
    values = tuple(
        factorial(n) * recip.coefficient(n) for n in range(n_max + 1)
    )
    return CauchyTable(N, 1, n_max, values, "series")


def c_via_recurrence(N: int, n_max: int) -> CauchyTable:
    """Bottom-up solution of the defining convolution identity

        sum_{i=0..n} (-1)^i c(N, i) / ((N + n - i) i!) = 0   for n >= 1,

    solved for the i = n term:

        c(N, n) = sum_{i=0..n-1} (-1)^(n-i-1) (n!/i!) N/(N+n-i) c(N, i).
    """
    _check_parameters(N, n_max)
    c = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        n_fact = factorial(n)
        for i in range(n):
            acc += (
                (-1) ** (n - i - 1)
                * Fraction(n_fact, factorial(i))
                * Fraction(N, N + n - i)
                * c[i]
            )
        c.append(acc)
    return CauchyTable(N, 1, n_max, tuple(c), "recurrence")


def c_via_determinant(N: int, n_max: int) -> CauchyTable:
    """n! times the n x n unit-superdiagonal determinant over bands N/(N+k)."""
    _check_parameters(N, n_max)
    band = [Fraction(N, N + k) for k in range(1, n_max + 1)]
    dets = determinant_sequence(1, band)
    values = tuple(factorial(n) * dets[n] for n in range(n_max + 1))
    return CauchyTable(N, 1, n_max, values, "determinant")


def c_via_compositions(
    N: int, n_max: int, cap: int | None = STRICT_COMPOSITION_CAP
) -> CauchyTable:
    """Exhaustive signed sum over strict compositions:

        c(N, n) = (-1)^n n! sum over compositions (i_1, .., i_k) of n
                  of (-N)^k / prod (N + i_j).

    Every composition is visited once (2^(n-1) per n), with one shared
    depth-first walk over all totals <= n_max; numerators and denominators
    accumulate as plain integers grouped by denominator, and Fractions are
    only formed at the very end.
    """
    _check_parameters(N, n_max)
    if cap is not None and n_max > cap:
        raise CapExceeded("strict composition enumeration", n_max, cap)

    # sums[m] maps a denominator prod(N + i_j) to the summed (-N)^k numerators
    sums: list[dict[int, int]] = [dict() for _ in range(n_max + 1)]
    neg_n = -N

    def extend(total: int, num: int, den: int) -> None:
        limit = n_max - total
        for part in range(1, limit + 1):
            t2 = total + part
            num2 = num * neg_n
            den2 = den * (N + part)
            acc = sums[t2]
            acc[den2] = acc.get(den2, 0) + num2
            extend(t2, num2, den2)

    extend(0, 1, 1)

    values = [Fraction(1)]
    for n in range(1, n_max + 1):
        total = Fraction(0)
        for den, num in sums[n].items():
            total += Fraction(num, den)
        values.append((-1) ** n * factorial(n) * total)
    return CauchyTable(N, 1, n_max, tuple(values), "compositions")


def c_via_trudi(
    N: int, n_max: int, cap: int | None = PARTITION_CAP
) -> CauchyTable:
    """Partition-multiset expansion of the determinant route:

        c(N, n) = n! sum over multiplicity vectors (t_1..t_n) of
                  multinomial(t) (-1)^(n - sum t) prod (N/(N+k))^(t_k).
    """
    _check_parameters(N, n_max)
    band = [Fraction(N, N + k) for k in range(1, n_max + 1)]
    values = [Fraction(1)]
    for n in range(1, n_max + 1):
        spec = HessenbergSpec(Fraction(1), tuple(band[:n]))
        values.append(factorial(n) * trudi_sum(spec, cap))
    return CauchyTable(N, 1, n_max, tuple(values), "trudi")


def c_trudi_printed_variant(
    N: int, n: int, cap: int | None = PARTITION_CAP
) -> Fraction:
    """A commonly printed variant of the partition-multiset expansion whose
    coefficient and sign read binomial(n - sum t; t_1..t_n) * (-1)^(sum t)
    instead of binomial(sum t; t_1..t_n) * (-1)^(n - sum t).

    Multinomial coefficients follow the standard convention (zero unless the
    lower entries sum to the upper one). The variant disagrees with the true
    values (first at N = 1, n = 2: -2/3 against -1/6); it exists so the
    verification suite can document that discrepancy with exact numbers.
    """
    _check_parameters(N, n)
    total = Fraction(0)
    for tvec in enumerate_partition_multiplicities(n, cap):
        t_sum = sum(tvec)
        if n - t_sum != t_sum:
            continue
        term = Fraction(multinomial(tvec) * (-1) ** t_sum)
        for k, t in enumerate(tvec, start=1):
            if t:
                term *= Fraction(N, N + k) ** t
        total += term
    return factorial(n) * total


def ratio_inversion(N: int, n_max: int) -> VerificationReport:
    """Determinants over normalized-value bands recover the defining ratios:

        det of the unit-superdiagonal spec over bands c(N, k)/k!  ==  N/(N+n).
    """
    _check_parameters(N, n_max)
    bands = c_via_series(N, n_max).normalized()[1:]
    dets = determinant_sequence(1, bands)
    identity = "inversion/ratio-recovery"
    for n in range(1, n_max + 1):
        expected = Fraction(N, N + n)
        if dets[n] != expected:
            return failed(identity, (N, 1, n), expected, dets[n])
    return passed(identity, (N, 1, n_max))


def c_closed_form(N: int, n: int) -> Fraction:
    """Closed rational forms of c(N, n) for n = 0 .. 5, as polynomial
    quotients in N; cross-checked against every table route."""
    _check_parameters(N, n)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(N, N + 1)
    if n == 2:
        return Fraction(-2 * N, (N + 1) ** 2 * (N + 2))
    if n == 3:
        return Fraction(
            6 * N * (N**2 + N + 2),
            (N + 1) ** 3 * (N + 2) * (N + 3),
        )
    if n == 4:
        return Fraction(
            -24 * N * (N**5 + 5 * N**4 + 14 * N**3 + 24 * N**2 + 20 * N + 12),
            (N + 1) ** 4 * (N + 2) ** 2 * (N + 3) * (N + 4),
        )
    if n == 5:
        poly = (
            N**7
            + 8 * N**6
            + 35 * N**5
            + 96 * N**4
            + 160 * N**3
            + 184 * N**2
            + 116 * N
            + 48
        )
        return Fraction(
            120 * N * poly,
            (N + 1) ** 5 * (N + 2) ** 2 * (N + 3) * (N + 4) * (N + 5),
        )
    raise ValueError(f"no closed form for n = {n} (have n = 0 .. 5)")


def classical_bernoulli_det(n_max: int) -> list[Fraction]:
    """Bernoulli numbers B_0 .. B_n_max as signed Hessenberg determinants
    over factorial bands 1/(k+1)!; a fixed point for the determinant code."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    band = [Fraction(1, factorial(k + 1)) for k in range(1, n_max + 1)]
    dets = determinant_sequence(1, band)
    return [(-1) ** n * factorial(n) * dets[n] for n in range(n_max + 1)]


def classical_euler_det(n_max: int) -> list[Fraction]:
    """Euler numbers E_0, E_2, .., E_(2 n_max) from even-factorial bands
    1/(2k)!; the secant-series convention (E_2 = -1, E_4 = 5)."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    band = [Fraction(1, factorial(2 * k)) for k in range(1, n_max + 1)]
    dets = determinant_sequence(1, band)
    return [(-1) ** k * factorial(2 * k) * dets[k] for k in range(n_max + 1)]
