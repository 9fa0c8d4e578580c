"""Truncated formal power series over exact rationals.

Coefficients are ``fractions.Fraction`` throughout; every operation is exact.
A series always carries its truncation order, and a binary operation truncates
its result to the smaller order of the two operands.

The divided-power derivative implemented here sends x^m to C(m, n) x^(m-n)
(no factorial in front), which is the convenient normalization when formulas
are phrased in terms of plain coefficient extraction: taking the derivative of
order i and evaluating at 0 reads off coefficient i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import OrderExceeded, ZeroConstantTerm

__all__ = [
    "TruncatedSeries",
    "log1p_series",
    "ht_derivative",
    "cameron_transform",
    "cameron_inverse",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0 .. c_order of a series known modulo x^(order+1)."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series needs at least its constant coefficient")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @classmethod
    def from_coefficients(
        cls, coefficients: Iterable[Fraction | int], order: int | None = None
    ) -> "TruncatedSeries":
        """Build a series, zero-padding or truncating to ``order`` if given."""
        coeffs = list(coefficients)
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            coeffs = coeffs[: order + 1]
            coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coefficients([1], order=order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} of a series of order {self.order}")
        return self.coefficients[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderExceeded(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        return TruncatedSeries(self.coefficients[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(
                self.coefficients[k] + other.coefficients[k]
                for k in range(order + 1)
            )
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            a, b = self.coefficients, other.coefficients
            out = []
            for k in range(order + 1):
                acc = Fraction(0)
                for j in range(k + 1):
                    acc += a[j] * b[k - j]
                out.append(acc)
            return TruncatedSeries(tuple(out))
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c * other for c in self.coefficients))
        return NotImplemented

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse to the same order.

        Raises :class:`ZeroConstantTerm` when the constant coefficient is 0.
        """
        a = self.coefficients
        if a[0] == 0:
            raise ZeroConstantTerm("series has no reciprocal: constant term is 0")
        inv0 = 1 / Fraction(a[0])
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += a[j] * out[k - j]
            out.append(-inv0 * acc)
        return TruncatedSeries(tuple(out))

    def power(self, exponent: int) -> "TruncatedSeries":
        """Repeated product; ``exponent`` must be a non-negative integer."""
        if exponent < 0:
            raise ValueError("negative powers go through reciprocal() explicitly")
        result = TruncatedSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def ht_derivative(self, n: int) -> "TruncatedSeries":
        """Divided-power derivative of order ``n``: x^m -> C(m, n) x^(m-n).

        The result order drops to ``order - n``; asking for ``n > order``
        raises :class:`OrderExceeded`.
        """
        if n < 0:
            raise ValueError("derivative order must be non-negative")
        if n > self.order:
            raise OrderExceeded(
                f"derivative of order {n} of a series of order {self.order}"
            )
        return TruncatedSeries(
            tuple(
                comb(m, n) * self.coefficients[m]
                for m in range(n, self.order + 1)
            )
        )


def ht_derivative(series: TruncatedSeries, n: int) -> TruncatedSeries:
    return series.ht_derivative(n)


def log1p_series(order: int) -> TruncatedSeries:
    """log(1 + x) to the given order: x - x^2/2 + x^3/3 - ..."""
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = [Fraction(0)]
    for k in range(1, order + 1):
        coeffs.append(Fraction((-1) ** (k - 1), k))
    return TruncatedSeries(tuple(coeffs))


def _seq_prefix(seq: Sequence[Fraction], order: int | None, what: str) -> list[Fraction]:
    values = [Fraction(v) for v in seq]
    if order is None:
        return values
    if order > len(values):
        raise ValueError(f"{what} supplies {len(values)} terms, order {order} requested")
    return values[:order]


def cameron_transform(
    x_seq: Sequence[Fraction], order: int | None = None
) -> list[Fraction]:
    """Sequence transform defined by 1 + sum z_n t^n = (1 - sum x_n t^n)^(-1).

    ``x_seq`` lists x_1 .. x_order; the result lists z_1 .. z_order.
    """
    x = _seq_prefix(x_seq, order, "x_seq")
    base = TruncatedSeries(tuple([Fraction(1)] + [-v for v in x]))
    return list(base.reciprocal().coefficients[1:])


def cameron_inverse(
    z_seq: Sequence[Fraction], order: int | None = None
) -> list[Fraction]:
    """Inverse transform: recover x_1 .. x_order from z_1 .. z_order."""
    z = _seq_prefix(z_seq, order, "z_seq")
    full = TruncatedSeries(tuple([Fraction(1)] + z))
    return [-c for c in full.reciprocal().coefficients[1:]]
