"""Finite semigroups as dense Cayley tables, with identity/zero adjunction.

Elements are addressed by index; labels are metadata that must be unique
within one semigroup. Tables are stored as read-only ``numpy`` integer
arrays, so a :class:`FiniteSemigroup` is immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .report import (
    ClosureError,
    LabelCollisionError,
    Report,
    SemigroupError,
    SizeLimitError,
    UniquenessError,
    UnknownLabelError,
)

DEFAULT_MAX_ELEMENTS = 4096

IDENTITY = "identity"
ZERO = "zero"

# cells of the associativity cube evaluated per numpy batch
_ASSOC_BATCH_CELLS = 1 << 22


@dataclass(frozen=True)
class Element:
    index: int
    label: str

    def __str__(self) -> str:
        return self.label


def _check_size(n: int, max_elements: int) -> None:
    if n > max_elements:
        raise SizeLimitError(f"carrier of {n} elements exceeds the limit of {max_elements}")


def _frozen(table: np.ndarray) -> np.ndarray:
    table.flags.writeable = False
    return table


class FiniteSemigroup:
    """A finite carrier with a total binary operation.

    ``table[i, j]`` is the index of ``elements[i] * elements[j]``. Closure is
    validated on construction; associativity is not (see
    :func:`check_associative`), so a table that fails it is still a valid
    *candidate* and can be inspected by the checkers.
    """

    __slots__ = ("_labels", "_table", "_index")

    def __init__(self, labels: Iterable[str], table, *, max_elements: int = DEFAULT_MAX_ELEMENTS):
        labels = tuple(str(label) for label in labels)
        if not labels:
            raise SemigroupError("a semigroup needs a nonempty carrier")
        _check_size(len(labels), max_elements)
        index = {}
        for i, label in enumerate(labels):
            if not label:
                raise SemigroupError("labels must be nonempty")
            if label in index:
                raise LabelCollisionError(f"duplicate label {label!r}")
            index[label] = i

        n = len(labels)
        arr = np.array(table, dtype=np.int64, copy=True)
        if arr.shape != (n, n):
            raise ClosureError(f"table has shape {arr.shape}, expected {(n, n)}")
        bad = np.argwhere((arr < 0) | (arr >= n))
        if len(bad):
            i, j = (int(x) for x in bad[0])
            raise ClosureError(f"table entry ({i}, {j}) = {arr[i, j]} is not an element index")

        self._labels = labels
        self._table = _frozen(arr)
        self._index = index

    @classmethod
    def _trusted(cls, labels: tuple, table: np.ndarray, index: dict) -> "FiniteSemigroup":
        # skips validation; callers guarantee closure and label uniqueness
        obj = cls.__new__(cls)
        obj._labels = labels
        obj._table = _frozen(table)
        obj._index = index
        return obj

    @property
    def labels(self) -> tuple:
        return self._labels

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def elements(self) -> list:
        return [Element(i, label) for i, label in enumerate(self._labels)]

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, label) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"no element labelled {label!r}") from None

    def element(self, label: str) -> Element:
        return Element(self.index(label), label)

    def mul(self, a: str, b: str) -> str:
        """Product of two elements given by label."""
        return self._labels[self._table[self.index(a), self.index(b)]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self._labels == other._labels and np.array_equal(self._table, other._table)

    __hash__ = None

    def __repr__(self) -> str:
        return f"FiniteSemigroup({len(self)} elements: {', '.join(self._labels[:6])}{', ...' if len(self) > 6 else ''})"


def trivial_semigroup(label: str = "s0") -> FiniteSemigroup:
    return FiniteSemigroup([label], [[0]])


def check_associative(S: FiniteSemigroup) -> Report:
    """Scan every triple; on failure report the lexicographically first one."""
    T = S.table
    n = len(S)
    batch = max(1, _ASSOC_BATCH_CELLS // (n * n))
    for start in range(0, n, batch):
        rows = np.arange(start, min(n, start + batch))
        left = T[T[rows, :], :]
        right = T[rows[:, None, None], T[None, :, :]]
        bad = np.argwhere(left != right)
        if len(bad):
            i, j, k = (int(x) for x in bad[0])
            i += start
            return Report.failed(
                "associativity",
                (i, j, k),
                f"({S.labels[i]}*{S.labels[j]})*{S.labels[k]} = {S.labels[T[T[i, j], k]]} "
                f"but {S.labels[i]}*({S.labels[j]}*{S.labels[k]}) = {S.labels[T[i, T[j, k]]]}",
                checked=n**3,
            )
    return Report.passed(f"{n**3} triples", checked=n**3)


def check_abelian(S: FiniteSemigroup) -> Report:
    T = S.table
    bad = np.argwhere(T != T.T)
    if len(bad):
        i, j = (int(x) for x in bad[0])
        return Report.failed(
            "commutativity",
            (i, j),
            f"{S.labels[i]}*{S.labels[j]} = {S.labels[T[i, j]]} but "
            f"{S.labels[j]}*{S.labels[i]} = {S.labels[T[j, i]]}",
        )
    return Report.passed(f"{len(S) ** 2} pairs")


def identity_witnesses(S: FiniteSemigroup) -> list:
    """Every element satisfying u*a = a*u = a for all a (at most one, in theory)."""
    T = S.table
    ar = np.arange(len(S))
    hits = np.flatnonzero((T == ar[None, :]).all(axis=1) & (T == ar[:, None]).all(axis=0))
    return [Element(int(i), S.labels[i]) for i in hits]


def zero_witnesses(S: FiniteSemigroup) -> list:
    """Every element satisfying v*a = a*v = v for all a."""
    T = S.table
    ar = np.arange(len(S))
    hits = np.flatnonzero((T == ar[:, None]).all(axis=1) & (T == ar[None, :]).all(axis=0))
    return [Element(int(i), S.labels[i]) for i in hits]


def _unique(witnesses: list, what: str) -> Optional[Element]:
    if len(witnesses) > 1:
        raise UniquenessError(f"found {len(witnesses)} distinct {what}s: {[w.label for w in witnesses]}")
    return witnesses[0] if witnesses else None


def find_identity(S: FiniteSemigroup) -> Optional[Element]:
    return _unique(identity_witnesses(S), IDENTITY)


def find_zero(S: FiniteSemigroup) -> Optional[Element]:
    return _unique(zero_witnesses(S), ZERO)


def _write_adjoined(buf: np.ndarray, m: int, kind: str) -> None:
    """Fill row and column ``m`` of ``buf`` for a fresh element over indices < m."""
    if kind == IDENTITY:
        ar = np.arange(m)
        buf[m, :m] = ar
        buf[:m, m] = ar
    elif kind == ZERO:
        buf[m, :m] = m
        buf[:m, m] = m
    else:
        raise ValueError(f"unknown adjunction kind {kind!r}")
    buf[m, m] = m


def _adjoin(S: FiniteSemigroup, label: str, kind: str, max_elements: int) -> FiniteSemigroup:
    label = str(label)
    if not label:
        raise SemigroupError("labels must be nonempty")
    if label in S:
        raise LabelCollisionError(f"label {label!r} is already an element of the semigroup")
    n = len(S)
    _check_size(n + 1, max_elements)
    buf = np.empty((n + 1, n + 1), dtype=np.int64)
    buf[:n, :n] = S.table
    _write_adjoined(buf, n, kind)
    index = dict(S._index)
    index[label] = n
    return FiniteSemigroup._trusted(S.labels + (label,), buf, index)


def adjoin_identity(S: FiniteSemigroup, label: str, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteSemigroup:
    """Return S with a fresh element ``label`` acting as a two-sided identity.

    Works even when S already has an identity; the old one then stops being
    an identity of the larger semigroup.
    """
    return _adjoin(S, label, IDENTITY, max_elements)


def adjoin_zero(S: FiniteSemigroup, label: str, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteSemigroup:
    """Return S with a fresh element ``label`` acting as a two-sided zero."""
    return _adjoin(S, label, ZERO, max_elements)


class Extender:
    """Apply a long sequence of adjunctions without re-copying the table.

    Each step has exactly the effect of :func:`adjoin_identity` or
    :func:`adjoin_zero`, but writes into a buffer preallocated for
    ``capacity`` elements, so a chain of k steps costs O(k^2) instead of
    O(k^3).
    """

    def __init__(self, start: FiniteSemigroup, capacity: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS):
        _check_size(capacity, max_elements)
        n = len(start)
        if capacity < n:
            raise ValueError("capacity is smaller than the starting semigroup")
        self._buf = np.empty((capacity, capacity), dtype=np.int64)
        self._buf[:n, :n] = start.table
        self._labels = list(start.labels)
        self._index = dict(start._index)

    def __len__(self) -> int:
        return len(self._labels)

    def _step(self, label: str, kind: str) -> None:
        label = str(label)
        if label in self._index:
            raise LabelCollisionError(f"label {label!r} is already an element of the semigroup")
        m = len(self._labels)
        if m >= len(self._buf):
            raise SizeLimitError(f"extender capacity {len(self._buf)} exhausted")
        _write_adjoined(self._buf, m, kind)
        self._labels.append(label)
        self._index[label] = m

    def identity(self, label: str) -> "Extender":
        self._step(label, IDENTITY)
        return self

    def zero(self, label: str) -> "Extender":
        self._step(label, ZERO)
        return self

    def result(self) -> FiniteSemigroup:
        m = len(self._labels)
        return FiniteSemigroup._trusted(tuple(self._labels), self._buf[:m, :m].copy(), dict(self._index))


def equal_under_relabeling(S: FiniteSemigroup, T: FiniteSemigroup, mapping: Mapping[str, str]) -> bool:
    """True iff ``mapping`` (labels of S to labels of T) carries S's table onto T's."""
    if len(mapping) != len(S) or set(mapping) != set(S.labels):
        missing = set(S.labels) - set(mapping)
        extra = set(mapping) - set(S.labels)
        if extra:
            raise UnknownLabelError(f"labels not in the source semigroup: {sorted(extra)}")
        raise SemigroupError(f"mapping is not defined on {sorted(missing)}")
    images = [mapping[label] for label in S.labels]
    unknown = [x for x in images if x not in T]
    if unknown:
        raise UnknownLabelError(f"labels not in the target semigroup: {sorted(unknown)}")
    if len(set(images)) != len(images) or len(T) != len(S):
        raise SemigroupError("mapping is not a bijection between the carriers")
    perm = np.array([T.index(x) for x in images], dtype=np.int64)
    return bool(np.array_equal(T.table[np.ix_(perm, perm)], perm[S.table]))


def identity_map(S: FiniteSemigroup) -> dict:
    return {label: label for label in S.labels}


def from_function(labels: Sequence[str], op, **kwargs) -> FiniteSemigroup:
    """Tabulate ``op(i, j) -> k`` over element indices."""
    n = len(labels)
    return FiniteSemigroup(labels, [[op(i, j) for j in range(n)] for i in range(n)], **kwargs)
