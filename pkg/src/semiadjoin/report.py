"""Check results and the exception hierarchy shared by every module."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional


class SemigroupError(ValueError):
    """Base class for all errors raised by this package."""


class ClosureError(SemigroupError):
    """A Cayley table entry does not name an element of the carrier."""


class LabelCollisionError(SemigroupError):
    """A label is already in use (the adjoined element must be fresh)."""


class UnknownLabelError(SemigroupError, KeyError):
    pass


class SizeLimitError(SemigroupError):
    """The requested carrier exceeds the configured element limit."""


class UniquenessError(SemigroupError):
    """Two distinct identities (or zeros) were found; the table is corrupt."""


class NotAChainError(SemigroupError):
    """A semigroup or relation does not describe a total order."""


class ArityError(SemigroupError):
    pass


class CoordinateOverflowError(SemigroupError, OverflowError):
    pass


@dataclass(frozen=True)
class Report:
    """Outcome of a structural check.

    ``witness`` holds the first counterexample found (indices or labels,
    depending on the check) and ``value`` an optional by-product of a
    successful check, such as the order extracted from a relation.
    Truthiness follows ``ok``.
    """

    ok: bool
    axiom: Optional[str] = None
    witness: Optional[tuple] = None
    detail: str = ""
    value: Any = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, detail: str = "", value: Any = None, checked: int = 0) -> "Report":
        return cls(True, detail=detail, value=value, checked=checked)

    @classmethod
    def failed(cls, axiom: str, witness: tuple, detail: str = "", checked: int = 0) -> "Report":
        return cls(False, axiom=axiom, witness=witness, detail=detail, checked=checked)

    def __str__(self) -> str:
        if self.ok:
            return "pass" + (f": {self.detail}" if self.detail else "")
        return f"fail [{self.axiom}] at {self.witness}" + (f": {self.detail}" if self.detail else "")
