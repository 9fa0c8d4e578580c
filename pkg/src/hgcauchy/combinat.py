"""Ordered-sum enumeration shared by the explicit expansion formulas."""

from __future__ import annotations

from math import factorial
from typing import Iterator, Sequence

__all__ = [
    "STRICT_COMPOSITION_CAP",
    "strict_compositions",
    "weak_compositions",
    "multinomial",
]

# 2**(n-1) tuples for strict compositions of n; the determinant, recurrence and
# series methods stay available far past this point.
STRICT_COMPOSITION_CAP = 22


def strict_compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to ``total``, lexicographic.

    ``total == 0`` yields the empty tuple once.
    """
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in strict_compositions(total - first):
            yield (first,) + rest


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` non-negative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def multinomial(parts: Sequence[int]) -> int:
    """(t_1 + ... + t_m)! / (t_1! ... t_m!)."""
    out = factorial(sum(parts))
    for t in parts:
        out //= factorial(t)
    return out
