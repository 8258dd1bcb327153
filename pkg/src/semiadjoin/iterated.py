"""Finite truncations of the iterated constructions over N0^n and Z^n.

The nonnegative side is grown purely by adjoining identities, one tuple at a
time in increasing lex order. The signed side adjoins zeros below a chain
and then refines it by repeated element replacement. Both are checked
against the direct lex-min formula by :func:`verify_lex_correspondence`.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .order import OrderedFamily, TotalOrder, min_semigroup, order_from_semigroup, replace_elements
from .report import NotAChainError, Report, SemigroupError, SizeLimitError
from .semigroup import DEFAULT_MAX_ELEMENTS, Extender, FiniteSemigroup, trivial_semigroup
from .tuples import IntTuple, box, lex_compare, lex_min

_LABEL_1 = re.compile(r"^s(-?\d+)$")
_LABEL_N = re.compile(r"^s_\{(-?\d+(?:,-?\d+)*)\}$")


def tuple_label(index: Sequence[int]) -> str:
    """``s3`` / ``s-1`` for one index, ``s_{i1,...,in}`` otherwise."""
    index = tuple(index)
    if len(index) == 1:
        return f"s{index[0]}"
    return "s_{" + ",".join(str(i) for i in index) + "}"


def label_tuple(label: str) -> tuple:
    m = _LABEL_1.match(label)
    if m:
        return (int(m.group(1)),)
    m = _LABEL_N.match(label)
    if m:
        coords = tuple(int(c) for c in m.group(1).split(","))
        if len(coords) > 1:
            return coords
    raise SemigroupError(f"label {label!r} does not encode an index tuple")


@dataclass(frozen=True)
class IndexedSemigroup:
    """A semigroup whose elements are named by the index tuples of a box.

    ``bounds[k] = (lo, hi)`` is the inclusive range of coordinate k. Tuples
    are signed exactly when some lower bound is negative.
    """

    semigroup: FiniteSemigroup
    arity: int
    bounds: tuple

    def __post_init__(self):
        bounds = tuple((int(lo), int(hi)) for lo, hi in self.bounds)
        object.__setattr__(self, "bounds", bounds)
        if self.arity < 1 or len(bounds) != self.arity:
            raise SemigroupError(f"need one (lo, hi) bound per coordinate, arity {self.arity}")
        if any(lo > hi for lo, hi in bounds):
            raise SemigroupError(f"empty bound in {bounds}")
        tuples = []
        for label in self.semigroup.labels:
            t = label_tuple(label)
            if len(t) != self.arity:
                raise SemigroupError(f"label {label!r} has arity {len(t)}, expected {self.arity}")
            tuples.append(IntTuple(t, signed=self.signed))
        expected = box([lo for lo, _ in bounds], [hi for _, hi in bounds], signed=self.signed)
        if set(tuples) != set(expected) or len(tuples) != len(expected):
            raise SemigroupError("element labels do not cover the index box exactly once")
        object.__setattr__(self, "_tuples", tuple(tuples))
        object.__setattr__(self, "_position", {t: i for i, t in enumerate(tuples)})

    @property
    def signed(self) -> bool:
        return any(lo < 0 for lo, _ in self.bounds)

    @property
    def index_of(self) -> tuple:
        """Index tuple of each element, in carrier order."""
        return self._tuples

    def position(self, t: IntTuple) -> int:
        return self._position[t]

    def label(self, t: Sequence[int]) -> str:
        return tuple_label(t)

    def mul(self, a: Sequence[int], b: Sequence[int]) -> tuple:
        """Product of ``s_a`` and ``s_b`` as an index tuple."""
        return label_tuple(self.semigroup.mul(tuple_label(a), tuple_label(b)))

    def with_semigroup(self, S: FiniteSemigroup) -> "IndexedSemigroup":
        return IndexedSemigroup(S, self.arity, self.bounds)

    def __len__(self) -> int:
        return len(self.semigroup)


def _require(count: int, max_elements: int) -> None:
    if count > max_elements:
        raise SizeLimitError(f"construction needs {count} elements, limit is {max_elements}")


def build_T1(k: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> IndexedSemigroup:
    """s0 followed by k adjoined identities s1, ..., sk."""
    if k < 0:
        raise SemigroupError("k must be nonnegative")
    _require(k + 1, max_elements)
    ext = Extender(trivial_semigroup("s0"), k + 1, max_elements=max_elements)
    for i in range(1, k + 1):
        ext.identity(tuple_label((i,)))
    return IndexedSemigroup(ext.result(), 1, ((0, k),))


def build_Tn(n: int, bound: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> IndexedSemigroup:
    """Adjoin ``s_I`` as an identity for each I in {0..bound-1}^n, in increasing lex order.

    Every element added after ``s_I`` acts as an identity on it, so
    ``s_I * s_J = s_I`` whenever I precedes J.
    """
    if n < 1 or bound < 1:
        raise SemigroupError("arity and bound must be positive")
    _require(bound**n, max_elements)
    tuples = box([0] * n, [bound - 1] * n, signed=False)
    ext = Extender(trivial_semigroup(tuple_label(tuples[0])), len(tuples), max_elements=max_elements)
    for t in tuples[1:]:
        ext.identity(tuple_label(t))
    return IndexedSemigroup(ext.result(), n, ((0, bound - 1),) * n)


def build_V1(neg: int, pos: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> IndexedSemigroup:
    """The chain s0 < ... < s_pos, then zeros s-1, ..., s-neg adjoined in turn.

    At any truncation s_pos is an identity and s-neg a zero, unlike the
    untruncated union over all of Z.
    """
    if neg < 0 or pos < 0:
        raise SemigroupError("neg and pos must be nonnegative")
    _require(neg + pos + 1, max_elements)
    ext = Extender(trivial_semigroup("s0"), neg + pos + 1, max_elements=max_elements)
    for i in range(1, pos + 1):
        ext.identity(tuple_label((i,)))
    for i in range(1, neg + 1):
        ext.zero(tuple_label((-i,)))
    return IndexedSemigroup(ext.result(), 1, ((-neg, pos),))


def build_Vn(n: int, bound: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> IndexedSemigroup:
    """Order [-bound, bound]^n by replacing each element of the (k-1)-level chain
    with a copy of the base chain, then take the min semigroup."""
    if n < 1 or bound < 0:
        raise SemigroupError("arity must be positive and bound nonnegative")
    _require((2 * bound + 1) ** n, max_elements)
    base = build_V1(bound, bound, max_elements=max_elements)
    if n == 1:
        return base
    base_chain = [label_tuple(x)[0] for x in order_from_semigroup(base.semigroup).chain]
    order = TotalOrder.from_chain([tuple_label((i,)) for i in base_chain])
    for _ in range(n - 1):
        parts = {
            s: TotalOrder.from_chain([tuple_label(label_tuple(s) + (i,)) for i in base_chain])
            for s in order.labels
        }
        order = replace_elements(OrderedFamily(order, parts))
    return IndexedSemigroup(min_semigroup(order), n, ((-bound, bound),) * n)


def lex_min_semigroup(tuples: Sequence[IntTuple]) -> FiniteSemigroup:
    """The semigroup on ``tuples`` with product given directly by lex_min."""
    pos = {t: i for i, t in enumerate(tuples)}
    table = [[pos[lex_min(a, b)] for b in tuples] for a in tuples]
    return FiniteSemigroup([tuple_label(t) for t in tuples], table)


def lex_sorted(tuples: Sequence[IntTuple]) -> list:
    return sorted(tuples, key=functools.cmp_to_key(lex_compare))


def verify_lex_correspondence(S: IndexedSemigroup) -> Report:
    """Check every product against lex_min, then the induced order against lex order.

    Products are compared in bulk against the lex rank of each index tuple
    (lex_min(a, b) is a exactly when a's rank is not above b's).
    """
    T = S.semigroup.table
    labels = S.semigroup.labels
    tuples = S.index_of
    n = len(tuples)
    lex_chain = lex_sorted(tuples)
    rank = np.empty(n, dtype=np.int64)
    for r, t in enumerate(lex_chain):
        rank[S.position(t)] = r
    ar = np.arange(n)
    expected = np.where(rank[:, None] <= rank[None, :], ar[:, None], ar[None, :])
    bad = np.argwhere(T != expected)
    if len(bad):
        i, j = (int(x) for x in bad[0])
        want = S.position(lex_min(tuples[i], tuples[j]))
        return Report.failed(
            "product",
            (labels[i], labels[j]),
            f"{labels[i]}*{labels[j]} = {labels[T[i, j]]}, lex min is {labels[want]}",
            checked=i * n + j + 1,
        )
    pairs = n * n
    try:
        order = order_from_semigroup(S.semigroup)
    except NotAChainError as exc:
        return Report.failed("order", (), str(exc), checked=pairs)
    want_chain = tuple(tuple_label(t) for t in lex_chain)
    if order.chain != want_chain:
        k = next(k for k, (x, y) in enumerate(zip(order.chain, want_chain)) if x != y)
        return Report.failed(
            "order", (k,), f"rank {k} holds {order.chain[k]}, lex order has {want_chain[k]}", checked=pairs
        )
    return Report.passed(f"{pairs} pairs", checked=pairs)


def mutants(S: FiniteSemigroup):
    """Yield ``((i, j, v), mutated)`` for every single-entry corruption of the table."""
    n = len(S)
    for i in range(n):
        for j in range(n):
            for v in range(n):
                if v == S.table[i, j]:
                    continue
                t = np.array(S.table)
                t[i, j] = v
                yield (i, j, v), FiniteSemigroup(S.labels, t)
