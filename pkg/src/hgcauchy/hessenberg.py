"""Toeplitz lower-Hessenberg determinants in exact arithmetic.

The matrix family handled here has a constant superdiagonal entry ``a_0``, a
Toeplitz lower triangle with bands ``a_1 .. a_n`` (``a_1`` on the main
diagonal, ``a_k`` on the k-th subdiagonal), and zeros above the superdiagonal.
Expanding along the last column gives the division-free recurrence

    d_0 = 1,   d_k = sum_{l=1..k} (-1)^(l-1) a_0^(l-1) a_l d_(k-l),

so each d_k is the determinant of the leading k x k matrix. The same value has
a closed combinatorial expansion over partition multisets (Trudi's formula),
and for a_0 = 1, d covers band inversion of unit lower-triangular Toeplitz
matrices; both are implemented here and cross-checked in the verification
suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .combinat import multinomial
from .errors import CapExceeded
from .report import VerificationReport, failed, passed

__all__ = [
    "PARTITION_CAP",
    "HessenbergSpec",
    "determinant_sequence",
    "hessenberg_det",
    "enumerate_partition_multiplicities",
    "trudi_sum",
    "unit_lower_toeplitz_inverse",
    "determinant_inversion_roundtrip",
]

# p(24) = 1575 multisets; past this the Trudi path refuses unless uncapped.
PARTITION_CAP = 24


@dataclass(frozen=True)
class HessenbergSpec:
    """Size-n spec: entry (i, j) is band[i-j] for i >= j (0-indexed offsets
    into ``band``, so ``band[0]`` is the main diagonal), ``super_entry`` for
    j = i + 1, and 0 further right."""

    super_entry: Fraction
    band: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "super_entry", Fraction(self.super_entry))
        object.__setattr__(self, "band", tuple(Fraction(b) for b in self.band))

    @property
    def n(self) -> int:
        return len(self.band)

    def matrix(self) -> list[list[Fraction]]:
        """The explicit dense matrix; intended for small-n cross-checks."""
        zero = Fraction(0)
        m = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                if j == i + 1:
                    row.append(self.super_entry)
                elif j <= i:
                    row.append(self.band[i - j])
                else:
                    row.append(zero)
            m.append(row)
        return m


def determinant_sequence(
    super_entry: Fraction, band: Sequence[Fraction]
) -> list[Fraction]:
    """[d_0, d_1, .., d_n]: determinants of all leading specs over ``band``."""
    a0 = Fraction(super_entry)
    a = [Fraction(b) for b in band]
    d = [Fraction(1)]
    for k in range(1, len(a) + 1):
        acc = Fraction(0)
        sign_pow = Fraction(1)
        for l in range(1, k + 1):
            acc += sign_pow * a[l - 1] * d[k - l]
            sign_pow *= -a0
        d.append(acc)
    return d


def hessenberg_det(spec: HessenbergSpec) -> Fraction:
    """Determinant of the full n x n spec (d_0 = 1 for n = 0)."""
    return determinant_sequence(spec.super_entry, spec.band)[-1]


_partition_memo: dict[int, tuple[tuple[int, ...], ...]] = {}


def enumerate_partition_multiplicities(
    m: int, cap: int | None = PARTITION_CAP
) -> tuple[tuple[int, ...], ...]:
    """Multiplicity vectors (t_1, .., t_m) with sum k*t_k = m, lexicographic.

    Results are memoized per m while m stays within the cap; beyond the cap a
    :class:`CapExceeded` is raised unless ``cap=None``.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if cap is not None and m > cap:
        raise CapExceeded("partition multiset enumeration", m, cap)
    if m in _partition_memo:
        return _partition_memo[m]

    out: list[tuple[int, ...]] = []
    vector = [0] * m

    def fill(k: int, remaining: int) -> None:
        if k > m:
            if remaining == 0:
                out.append(tuple(vector))
            return
        if remaining == 0:
            # all later multiplicities stay 0
            out.append(tuple(vector))
            return
        for t in range(remaining // k + 1):
            vector[k - 1] = t
            fill(k + 1, remaining - k * t)
        vector[k - 1] = 0

    fill(1, m)
    result = tuple(out)
    if m <= PARTITION_CAP:
        _partition_memo[m] = result
    return result


def trudi_sum(spec: HessenbergSpec, cap: int | None = PARTITION_CAP) -> Fraction:
    """Determinant of ``spec`` by the partition-multiset expansion:

        sum over (t_1..t_n) of multinomial(t) * (-a_0)^(n - sum t)
                                              * prod a_k^(t_k).

    Agrees with :func:`hessenberg_det`; exponential in enumeration size, hence
    the cap.
    """
    n = spec.n
    if n == 0:
        return Fraction(1)
    neg_super = -spec.super_entry
    total = Fraction(0)
    for tvec in enumerate_partition_multiplicities(n, cap):
        t_sum = sum(tvec)
        term = Fraction(multinomial(tvec)) * neg_super ** (n - t_sum)
        for k, t in enumerate(tvec, start=1):
            if t:
                term *= spec.band[k - 1] ** t
        total += term
    return total


def unit_lower_toeplitz_inverse(
    alpha: Sequence[Fraction], n: int | None = None
) -> list[Fraction]:
    """Bands gamma_1 .. gamma_n of the inverse of the unit lower-triangular
    Toeplitz matrix with subdiagonal bands alpha_1 .. alpha_n:

        gamma_0 = 1,   gamma_k = -sum_{j=1..k} alpha_j gamma_(k-j).

    ``n`` defaults to the band count and otherwise must match it.
    """
    a = [Fraction(v) for v in alpha]
    if n is not None and n != len(a):
        raise ValueError(f"alpha has {len(a)} bands, n = {n} given")
    gamma = [Fraction(1)]
    for k in range(1, len(a) + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            acc += a[j - 1] * gamma[k - j]
        gamma.append(-acc)
    return gamma[1:]


def determinant_inversion_roundtrip(
    rule: Callable[[int], Fraction] | Sequence[Fraction],
    n_max: int,
    identity: str = "determinant-inversion-roundtrip",
    point: tuple[int, int, int] | None = None,
) -> VerificationReport:
    """Feed R(1..n) through the determinant and back.

    With alpha_n = det of the unit-superdiagonal spec over bands R(1..n), the
    determinant over bands alpha_1..alpha_n must return R(n). Checks every
    n <= n_max and reports the first failure with both exact values.
    """
    if callable(rule):
        values = [Fraction(rule(k)) for k in range(1, n_max + 1)]
    else:
        values = [Fraction(v) for v in rule[:n_max]]
        if len(values) < n_max:
            raise ValueError(f"rule supplies {len(values)} terms, need {n_max}")
    if point is None:
        point = (0, 0, n_max)
    alpha = determinant_sequence(1, values)[1:]
    recovered = determinant_sequence(1, alpha)[1:]
    for n in range(1, n_max + 1):
        if recovered[n - 1] != values[n - 1]:
            return failed(
                identity, (point[0], point[1], n), values[n - 1], recovered[n - 1]
            )
    return passed(identity, point)
