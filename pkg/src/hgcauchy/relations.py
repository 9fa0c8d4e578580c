"""Relations connecting the families at adjacent first parameters N and N-1.

Two independent bridges are verified here, both stated for N >= 2:

* a single-step convolution identity,

      c(N, n) = c(N-1, n)
                - N/((n+1)(N-1)) sum_{m=0..n-1} C(n+1, m) c(N, m) c(N-1, n-m+1),

* a full expansion of c(N, n) over descending index chains
  n = i_0 > i_1 > .. > i_m >= 0 with products of c(N-1, .) values,

      c(N, n) = sum_{m=0..n} (N/(1-N))^m
                sum over chains of (n!/i_m!) c(N-1, i_m)
                prod_{k=1..m} c(N-1, i_(k-1)-i_k+1) / (i_(k-1)-i_k+1)!.

The chains are exactly the subsets of {0, .., n-1} joined with the forced
head i_0 = n, so there are 2^n of them; hence the safety cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Iterator

from .cauchy import c_via_series
from .errors import CapExceeded
from .report import VerificationReport, failed, passed

__all__ = [
    "CHAIN_CAP",
    "ChainIndex",
    "descending_chains",
    "cross_order_step",
    "chain_sum",
    "chain_example_first",
    "chain_example_second",
]

# 2^n chains at top index n
CHAIN_CAP = 14


@dataclass(frozen=True)
class ChainIndex:
    """A strictly decreasing index chain (i_0, i_1, .., i_m), i_m >= 0."""

    indices: tuple[int, ...]

    def __post_init__(self):
        if not self.indices:
            raise ValueError("a chain holds at least its head index")
        for a, b in zip(self.indices, self.indices[1:]):
            if a <= b:
                raise ValueError(f"chain {self.indices} is not strictly decreasing")
        if self.indices[-1] < 0:
            raise ValueError("chain indices must be non-negative")

    @property
    def head(self) -> int:
        return self.indices[0]

    @property
    def length(self) -> int:
        """The m in (i_0, .., i_m)."""
        return len(self.indices) - 1


def descending_chains(n: int) -> Iterator[ChainIndex]:
    """All 2^n chains with head n: subsets of {0, .., n-1} in ascending size,
    lexicographic within each size, listed in decreasing order after the head."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for m in range(n + 1):
        for subset in combinations(range(n), m):
            yield ChainIndex((n,) + tuple(sorted(subset, reverse=True)))


def _tables(N: int, n_max: int) -> tuple[list[Fraction], list[Fraction]]:
    """Values for N and N-1; the N-1 table reaches one index further because
    both identities consume c(N-1, n+1)."""
    if N < 2:
        raise ValueError(f"relations need N >= 2, got {N}")
    current = list(c_via_series(N, n_max).values)
    previous = list(c_via_series(N - 1, n_max + 1).values)
    return current, previous


def cross_order_step(N: int, n_max: int) -> VerificationReport:
    """Single-step identity down from N to N-1, checked for n = 0 .. n_max."""
    current, previous = _tables(N, n_max)
    identity = "relations/cross-order-step"
    for n in range(n_max + 1):
        acc = Fraction(0)
        for m in range(n):
            acc += comb(n + 1, m) * current[m] * previous[n - m + 1]
        rhs = previous[n] - Fraction(N, (n + 1) * (N - 1)) * acc
        if current[n] != rhs:
            return failed(identity, (N, 1, n), current[n], rhs)
    return passed(identity, (N, 1, n_max))


def chain_term(
    chain: ChainIndex, N: int, previous: list[Fraction]
) -> Fraction:
    """The contribution of one chain to the expansion of c(N, head)."""
    n = chain.head
    m = chain.length
    tail = chain.indices[-1]
    term = (
        Fraction(N, 1 - N) ** m
        * Fraction(factorial(n), factorial(tail))
        * previous[tail]
    )
    for a, b in zip(chain.indices, chain.indices[1:]):
        gap = a - b + 1
        term *= previous[gap] / factorial(gap)
    return term


def chain_sum(
    N: int, n_max: int, cap: int | None = CHAIN_CAP
) -> VerificationReport:
    """Full descending-chain expansion, checked for n = 1 .. n_max."""
    if cap is not None and n_max > cap:
        raise CapExceeded("descending chain enumeration", n_max, cap)
    current, previous = _tables(N, n_max)
    identity = "relations/descending-chain-expansion"
    for n in range(1, n_max + 1):
        total = Fraction(0)
        for chain in descending_chains(n):
            total += chain_term(chain, N, previous)
        if current[n] != total:
            return failed(identity, (N, 1, n), current[n], total)
    return passed(identity, (N, 1, n_max))


def chain_example_first(N: int) -> VerificationReport:
    """The n = 1 chain expansion written out:
    c(N, 1) = c(N-1, 1) + N/(1-N) * c(N-1, 0) c(N-1, 2) / 2."""
    current, previous = _tables(N, 1)
    rhs = previous[1] + Fraction(N, 1 - N) * previous[0] * previous[2] / 2
    identity = "relations/chain-example-first-order"
    if current[1] != rhs:
        return failed(identity, (N, 1, 1), current[1], rhs)
    return passed(identity, (N, 1, 1))


def chain_example_second(N: int) -> VerificationReport:
    """The n = 2 chain expansion written out:
    c(N, 2) = c(N-1, 2) + N/(1-N) (c(N-1, 3)/3 + c(N-1, 1) c(N-1, 2))
              + (N/(1-N))^2 c(N-1, 2)^2 / 2."""
    current, previous = _tables(N, 2)
    factor = Fraction(N, 1 - N)
    rhs = (
        previous[2]
        + factor * (previous[3] / 3 + previous[1] * previous[2])
        + factor**2 * previous[2] ** 2 / 2
    )
    identity = "relations/chain-example-second-order"
    if current[2] != rhs:
        return failed(identity, (N, 1, 2), current[2], rhs)
    return passed(identity, (N, 1, 2))
