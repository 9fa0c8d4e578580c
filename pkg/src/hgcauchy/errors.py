"""Exceptions shared across the exact-computation modules."""

from __future__ import annotations

__all__ = ["ZeroConstantTerm", "OrderExceeded", "CapExceeded"]


class ZeroConstantTerm(ArithmeticError):
    """Reciprocal requested for a series whose constant term is zero."""


class OrderExceeded(ValueError):
    """Derivative order larger than the truncation order of the operand."""


class CapExceeded(ValueError):
    """An enumeration was requested past its safety cap.

    The exhaustive expansions (strict compositions, partition multisets,
    descending chains) grow exponentially; the caps bound accidental misuse.
    Callers that really want the full enumeration pass ``cap=None``.
    """

    def __init__(self, what: str, requested: int, cap: int):
        super().__init__(
            f"{what}: size {requested} exceeds the safety cap {cap} "
            f"(pass cap=None, or --unsafe-caps on the command line, to override)"
        )
        self.what = what
        self.requested = requested
        self.cap = cap
