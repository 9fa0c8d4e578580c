"""Higher-order hypergeometric Cauchy numbers c^(r)(N, n).

The order-r family is defined by the r-th power of the first-order generating
relation: (1/F_N(x))^r = sum_n c^(r)(N, n) x^n/n!. The combinatorial engine
is the weight

    D_r(e) = sum over (i_1, .., i_r) >= 0 with i_1+..+i_r = e
             of N^r / ((N+i_1) .. (N+i_r)),

the e-th coefficient of (sum_j N/(N+j) x^j)^r, so F_N(x)^r has coefficients
(-1)^e D_r(e). The five table routes below mirror the first-order ones, with
D_r(k) replacing N/(N+k) wherever bands or composition weights appear; the
``convolution`` route instead multiplies first-order tables together and never
touches the weights, which keeps it an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .cauchy import CauchyTable, c_via_series, _check_parameters
from .combinat import STRICT_COMPOSITION_CAP, strict_compositions, weak_compositions
from .errors import CapExceeded
from .hessenberg import (
    PARTITION_CAP,
    HessenbergSpec,
    determinant_sequence,
    trudi_sum,
    unit_lower_toeplitz_inverse,
)
from .report import VerificationReport, failed, passed
from .series import TruncatedSeries

__all__ = [
    "WeightTable",
    "weight_D",
    "weight_D_by_enumeration",
    "weight_reference_form",
    "weight_reference_mismatches",
    "chor_closed_form",
    "chor_via_recurrence",
    "chor_via_determinant",
    "chor_via_explicit",
    "chor_via_trudi",
    "chor_via_convolution",
    "D_inversion",
]


@dataclass(frozen=True)
class WeightTable:
    """Exact weights D_r(e) for e = 0 .. e_max at a fixed (N, r)."""

    N: int
    r: int
    e_max: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        _check_parameters(self.N, self.e_max, self.r)
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if len(self.values) != self.e_max + 1:
            raise ValueError("values must list e = 0 .. e_max")
        if self.values[0] != 1:
            raise ValueError("D_r(0) must be 1")
        if self.e_max >= 1 and self.values[1] != Fraction(self.r * self.N, self.N + 1):
            raise ValueError("D_r(1) must be r*N/(N+1)")

    def weight(self, e: int) -> Fraction:
        return self.values[e]


def weight_D(N: int, r: int, e_max: int) -> WeightTable:
    """Weights via the r-fold self-convolution of the ratio sequence N/(N+j)."""
    _check_parameters(N, e_max, r)
    ratio = TruncatedSeries(tuple(Fraction(N, N + j) for j in range(e_max + 1)))
    powered = ratio.power(r)
    return WeightTable(N, r, e_max, powered.coefficients)


def weight_D_by_enumeration(N: int, r: int, e_max: int) -> list[Fraction]:
    """Brute-force definition of D_r(e): one term per weak composition.

    Exponential in e and r; kept as the independent cross-check for
    :func:`weight_D`.
    """
    _check_parameters(N, e_max, r)
    out = []
    top = Fraction(N**r)
    for e in range(e_max + 1):
        acc = Fraction(0)
        for parts in weak_compositions(e, r):
            den = 1
            for i in parts:
                den *= N + i
            acc += top / den
        out.append(acc)
    return out


def weight_reference_form(
    N: int, r: int, e: int, corrected: bool = False
) -> Fraction:
    """Small-e closed forms for D_r(e) grouped by nonzero part multiset,
    transcribed verbatim from the tabulation this package cross-checks.

    The e = 4 form as printed carries a slip in its pair-of-twos term,
    N^2/(N+1)^2 where the definition requires N^2/(N+2)^2; pass
    ``corrected=True`` for the repaired variant. All other forms are exact.
    """
    _check_parameters(N, 1, r)
    n1, n2, n3, n4 = N + 1, N + 2, N + 3, N + 4
    if e == 1:
        return Fraction(r * N, n1)
    if e == 2:
        return Fraction(r * N, n2) + Fraction(r * (r - 1) * N**2, 2 * n1**2)
    if e == 3:
        return (
            Fraction(r * N, n3)
            + Fraction(r * (r - 1) * N**2, n1 * n2)
            + comb(r, 3) * Fraction(N**3, n1**3)
        )
    if e == 4:
        pair_of_twos_den = n2**2 if corrected else n1**2
        return (
            Fraction(r * N, n4)
            + Fraction(r * (r - 1) * N**2, n1 * n3)
            + comb(r, 2) * Fraction(N**2, pair_of_twos_den)
            + r * comb(r - 1, 2) * Fraction(N**3, n1**2 * n2)
            + comb(r, 4) * Fraction(N**4, n1**4)
        )
    raise ValueError(f"no reference form for e = {e} (have e = 1 .. 4)")


def weight_reference_mismatches(N: int, r: int, e_max: int = 4) -> list[int]:
    """Indices e <= min(e_max, 4) where the verbatim reference form disagrees
    with the definition. Expected: [] for r = 1, [4] for r >= 2."""
    top = min(e_max, 4)
    definition = weight_D(N, r, top)
    return [
        e
        for e in range(1, top + 1)
        if weight_reference_form(N, r, e) != definition.weight(e)
    ]


def chor_closed_form(N: int, r: int, n: int) -> Fraction:
    """Closed forms of c^(r)(N, n) for n = 0 .. 4 as explicit rational
    expressions in N and r; cross-checked against every table route."""
    _check_parameters(N, 1, r)
    n1, n2, n3, n4 = N + 1, N + 2, N + 3, N + 4
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(r * N, n1)
    if n == 2:
        return Fraction(r * (r + 1) * N**2, n1**2) - Fraction(2 * r * N, n2)
    if n == 3:
        return (
            Fraction(r * (r + 1) * (r + 2) * N**3, n1**3)
            - Fraction(6 * r * (r + 1) * N**2, n1 * n2)
            + Fraction(6 * r * N, n3)
        )
    if n == 4:
        return (
            Fraction(r * (r + 1) * (r + 2) * (r + 3) * N**4, n1**4)
            - Fraction(12 * r * (r + 1) * (r + 2) * N**3, n1**2 * n2)
            + Fraction(24 * r * (r + 1) * N**2, n1 * n3)
            + Fraction(12 * r * (r + 1) * N**2, n2**2)
            - Fraction(24 * r * N, n4)
        )
    raise ValueError(f"no closed form for n = {n} (have n = 0 .. 4)")


def _weights(N: int, r: int, n_max: int) -> list[Fraction]:
    return list(weight_D(N, r, n_max).values)


def chor_via_recurrence(N: int, r: int, n_max: int) -> CauchyTable:
    """Reference route for r >= 2: the alternating weight recurrence

        b_n = sum_{l=1..n} (-1)^(l-1) D_r(l) b_(n-l),    b_0 = 1,

    with c^(r)(N, n) = n! b_n. At r = 1 this is the first-order recurrence in
    its normalized form.
    """
    _check_parameters(N, n_max, r)
    d = _weights(N, r, n_max)
    b = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for l in range(1, n + 1):
            acc += (-1) ** (l - 1) * d[l] * b[n - l]
        b.append(acc)
    values = tuple(factorial(n) * b[n] for n in range(n_max + 1))
    return CauchyTable(N, r, n_max, values, "recurrence")


def chor_via_determinant(N: int, r: int, n_max: int) -> CauchyTable:
    """n! times the unit-superdiagonal Hessenberg determinant over weight
    bands D_r(1) .. D_r(n)."""
    _check_parameters(N, n_max, r)
    d = _weights(N, r, n_max)
    dets = determinant_sequence(1, d[1:])
    values = tuple(factorial(n) * dets[n] for n in range(n_max + 1))
    return CauchyTable(N, r, n_max, values, "determinant")


def chor_via_explicit(
    N: int, r: int, n_max: int, cap: int | None = STRICT_COMPOSITION_CAP
) -> CauchyTable:
    """Exhaustive signed sum over strict compositions with weight products:

        c^(r)(N, n) = n! sum_{k=1..n} (-1)^(n-k)
                      sum over compositions (e_1, .., e_k) of n
                      of D_r(e_1) .. D_r(e_k).
    """
    _check_parameters(N, n_max, r)
    if cap is not None and n_max > cap:
        raise CapExceeded("strict composition enumeration", n_max, cap)
    d = _weights(N, r, n_max)
    values = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for parts in strict_compositions(n):
            term = (-1) ** (n - len(parts))
            prod = Fraction(1)
            for e in parts:
                prod *= d[e]
            acc += term * prod
        values.append(factorial(n) * acc)
    return CauchyTable(N, r, n_max, tuple(values), "explicit")


def chor_via_trudi(
    N: int, r: int, n_max: int, cap: int | None = PARTITION_CAP
) -> CauchyTable:
    """Partition-multiset expansion of the weight-band determinant."""
    _check_parameters(N, n_max, r)
    d = _weights(N, r, n_max)
    values = [Fraction(1)]
    for n in range(1, n_max + 1):
        spec = HessenbergSpec(Fraction(1), tuple(d[1 : n + 1]))
        values.append(factorial(n) * trudi_sum(spec, cap))
    return CauchyTable(N, r, n_max, tuple(values), "trudi")


def chor_via_convolution(N: int, r: int, n_max: int) -> CauchyTable:
    """r-fold product of first-order tables, coefficientwise:

        c^(r)(N, n) = sum over (n_1, .., n_r) >= 0 with n_1+..+n_r = n
                      of n!/(n_1! .. n_r!) c(N, n_1) .. c(N, n_r),

    realized as the r-th power of the normalized first-order series. Never
    touches the weights D_r, so it cross-checks the other four routes.
    """
    _check_parameters(N, n_max, r)
    base = TruncatedSeries(tuple(c_via_series(N, n_max).normalized()))
    powered = base.power(r)
    values = tuple(
        factorial(n) * powered.coefficient(n) for n in range(n_max + 1)
    )
    return CauchyTable(N, r, n_max, values, "convolution")


def D_inversion(N: int, r: int, n_max: int) -> VerificationReport:
    """Inversion pair between normalized tables and weights.

    Checks, for every n <= n_max:

    * determinant half: det over bands c^(r)(N, k)/k! equals D_r(n);
    * inverse-band half: the unit lower-triangular Toeplitz inverse of the
      normalized-value bands has gamma_k = (-1)^k D_r(k).

    Reports the first failing n, naming which half failed.
    """
    _check_parameters(N, n_max, r)
    d = _weights(N, r, n_max)
    b = chor_via_recurrence(N, r, n_max).normalized()[1:]
    dets = determinant_sequence(1, b)
    for n in range(1, n_max + 1):
        if dets[n] != d[n]:
            return failed(
                "inversion/weight-recovery/determinant", (N, r, n), d[n], dets[n]
            )
    gamma = unit_lower_toeplitz_inverse(b)
    for k in range(1, n_max + 1):
        expected = (-1) ** k * d[k]
        if gamma[k - 1] != expected:
            return failed(
                "inversion/weight-recovery/inverse-bands",
                (N, r, k),
                expected,
                gamma[k - 1],
            )
    return passed("inversion/weight-recovery", (N, r, n_max))
