"""Structured outcome records for identity verification.

Every checkable identity in this package reports through
:class:`VerificationReport`. ``parameter_point`` is always an ``(N, r, n)``
triple; checks that are not tied to a table point (the generic series-rule
sweeps) use ``N = 0, r = 0`` with ``n`` carrying the truncation order or the
instance count.

``status`` is one of:

* ``pass``: the identity holds exactly at every checked point.
* ``fail``: a genuine mismatch; ``detail`` always carries both exact values.
* ``erratum-noted``: the identity fails as commonly printed in the source
  material it was transcribed from, and the suite verified the corrected form;
  the record documents the literal variant.

``detail`` is an (expected, actual) pair of "p/q" strings on a fail record.
On an erratum-noted record the same slot reads (as printed, corrected), or
``None`` when the two forms happen to coincide numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rational import format_rational

__all__ = ["VerificationReport", "passed", "failed", "erratum"]

_STATUSES = ("pass", "fail", "erratum-noted")


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    parameter_point: tuple[int, int, int]
    status: str
    detail: tuple[str, str] | None = None

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "fail" and self.detail is None:
            raise ValueError("a fail record must carry (expected, actual)")

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "parameter_point": list(self.parameter_point),
            "status": self.status,
            "detail": list(self.detail) if self.detail is not None else None,
        }


def _text(value) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def passed(identity: str, point: tuple[int, int, int]) -> VerificationReport:
    return VerificationReport(identity, point, "pass")


def failed(identity: str, point: tuple[int, int, int], expected, actual) -> VerificationReport:
    return VerificationReport(identity, point, "fail", (_text(expected), _text(actual)))


def erratum(
    identity: str,
    point: tuple[int, int, int],
    expected=None,
    actual=None,
) -> VerificationReport:
    detail = None
    if expected is not None or actual is not None:
        detail = (_text(expected), _text(actual))
    return VerificationReport(identity, point, "erratum-noted", detail)
