"""Total orders on finite carriers and their correspondence with min/max semigroups.

Relations handed to the checkers are explicit sets of ``(a, b)`` label
pairs meaning ``a <= b``, so broken inputs can be diagnosed. Validated
orders are stored compactly as a rank per element.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

import numpy as np

from .report import NotAChainError, Report, SemigroupError, UnknownLabelError
from .semigroup import FiniteSemigroup, check_associative, check_abelian

# cells of the transitivity cube evaluated per numpy batch
_TRANS_BATCH_CELLS = 1 << 22


class TotalOrder:
    """A chain on a finite carrier.

    ``labels`` fixes the carrier order (element indices) and ``ranks[i]``
    is the position of element ``i`` in the chain, 0 being the least.
    """

    __slots__ = ("_labels", "_ranks", "_index")

    def __init__(self, labels: Iterable[str], ranks: Iterable[int]):
        labels = tuple(str(x) for x in labels)
        ranks = tuple(int(r) for r in ranks)
        if not labels:
            raise SemigroupError("an order needs a nonempty carrier")
        if len(ranks) != len(labels):
            raise SemigroupError("one rank per element is required")
        if sorted(ranks) != list(range(len(labels))):
            raise NotAChainError(f"ranks {ranks} are not a bijection onto 0..{len(labels) - 1}")
        self._index = {label: i for i, label in enumerate(labels)}
        if len(self._index) != len(labels):
            raise SemigroupError("duplicate labels in order carrier")
        self._labels = labels
        self._ranks = ranks

    @classmethod
    def from_chain(cls, chain: Sequence[str]) -> "TotalOrder":
        """The order in which ``chain`` is listed from least to greatest."""
        return cls(chain, range(len(chain)))

    @property
    def labels(self) -> tuple:
        return self._labels

    @property
    def ranks(self) -> tuple:
        return self._ranks

    @property
    def chain(self) -> tuple:
        out = [None] * len(self._labels)
        for label, r in zip(self._labels, self._ranks):
            out[r] = label
        return tuple(out)

    def __len__(self) -> int:
        return len(self._labels)

    def rank(self, label: str) -> int:
        try:
            return self._ranks[self._index[label]]
        except KeyError:
            raise UnknownLabelError(f"no element labelled {label!r}") from None

    def le(self, a: str, b: str) -> bool:
        return self.rank(a) <= self.rank(b)

    def reverse(self) -> "TotalOrder":
        n = len(self._labels)
        return TotalOrder(self._labels, (n - 1 - r for r in self._ranks))

    def pairs(self) -> list:
        """The full relation as ``(a, b)`` pairs with ``a <= b``."""
        return [(a, b) for a in self._labels for b in self._labels if self.le(a, b)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TotalOrder):
            return NotImplemented
        return self._labels == other._labels and self._ranks == other._ranks

    __hash__ = None

    def __repr__(self) -> str:
        return "TotalOrder(" + " < ".join(self.chain) + ")"


class OrderedFamily:
    """A base chain with a nonempty chain attached to each of its elements.

    Part carriers must be pairwise disjoint.
    """

    def __init__(self, base: TotalOrder, parts: Mapping[str, TotalOrder]):
        if set(parts) != set(base.labels):
            raise SemigroupError("parts must be given for exactly the base elements")
        seen = {}
        for s in base.labels:
            for x in parts[s].labels:
                if x in seen:
                    raise SemigroupError(f"parts for {seen[x]!r} and {s!r} share the element {x!r}")
                seen[x] = s
        self.base = base
        self.parts = dict(parts)


def _relation_matrix(elements: Sequence[str], pairs: Iterable) -> tuple:
    labels = tuple(str(x) for x in elements)
    index = {label: i for i, label in enumerate(labels)}
    if len(index) != len(labels):
        raise SemigroupError("duplicate labels in relation carrier")
    R = np.zeros((len(labels), len(labels)), dtype=bool)
    for a, b in pairs:
        try:
            R[index[str(a)], index[str(b)]] = True
        except KeyError as exc:
            raise UnknownLabelError(f"pair ({a!r}, {b!r}) references unknown element {exc.args[0]!r}") from None
    return labels, R


def _first_intransitive(R: np.ndarray):
    n = len(R)
    batch = max(1, _TRANS_BATCH_CELLS // max(1, n * n))
    for start in range(0, n, batch):
        Ra = R[start:start + batch]
        # (a, b, c) with a<=b, b<=c and not a<=c
        bad = np.argwhere(Ra[:, :, None] & R[None, :, :] & ~Ra[:, None, :])
        if len(bad):
            a, b, c = (int(x) for x in bad[0])
            return a + start, b, c
    return None


def _partial_order_report(labels: tuple, R: np.ndarray) -> Report:
    missing = np.flatnonzero(~np.diag(R))
    if len(missing):
        a = labels[missing[0]]
        return Report.failed("A1", (a,), f"{a} <= {a} is missing")
    triple = _first_intransitive(R)
    if triple is not None:
        a, b, c = (labels[i] for i in triple)
        return Report.failed("A2", (a, b, c), f"{a} <= {b} and {b} <= {c} but not {a} <= {c}")
    both = np.argwhere(np.triu(R & R.T, k=1))
    if len(both):
        a, b = (labels[i] for i in both[0])
        return Report.failed("A3", (a, b), f"{a} <= {b} and {b} <= {a} with {a} != {b}")
    return Report.passed(f"{len(labels)} elements")


def check_partial_order(elements: Sequence[str], pairs: Iterable) -> Report:
    """Reflexivity (A1), transitivity (A2) and antisymmetry (A3), in that order."""
    return _partial_order_report(*_relation_matrix(elements, pairs))


def _chain_ranks(R: np.ndarray):
    """Ranks r with R[a, b] iff r[a] <= r[b], or None if R is not a chain.

    O(n^2) certificate: the rank of b can only be the number of elements
    below it, so one comparison against the induced relation settles it.
    """
    ranks = R.sum(axis=0) - 1
    n = len(R)
    if not np.array_equal(np.sort(ranks), np.arange(n)):
        return None
    if not np.array_equal(R, ranks[:, None] <= ranks[None, :]):
        return None
    return ranks


def _total_order_report(labels: tuple, R: np.ndarray) -> Report:
    ranks = _chain_ranks(R)
    if ranks is not None:
        order = TotalOrder(labels, ranks)
        return Report.passed(" < ".join(order.chain), value=order)
    # not a chain: scan for the first violated axiom
    rep = _partial_order_report(labels, R)
    if not rep:
        return rep
    neither = np.argwhere(np.triu(~(R | R.T), k=1))
    if len(neither):
        a, b = (labels[i] for i in neither[0])
        return Report.failed("A4", (a, b), f"{a} and {b} are incomparable")
    # rank of b = number of elements strictly below it
    ranks = R.sum(axis=0) - 1
    order = TotalOrder(labels, ranks)
    return Report.passed(" < ".join(order.chain), value=order)


def check_total_order(elements: Sequence[str], pairs: Iterable) -> Report:
    """A1 through A4; a passing report carries the :class:`TotalOrder` as ``value``."""
    return _total_order_report(*_relation_matrix(elements, pairs))


def min_semigroup(order: TotalOrder) -> FiniteSemigroup:
    r = np.array(order.ranks)
    ar = np.arange(len(order))
    table = np.where(r[:, None] <= r[None, :], ar[:, None], ar[None, :])
    return FiniteSemigroup(order.labels, table)


def max_semigroup(order: TotalOrder) -> FiniteSemigroup:
    r = np.array(order.ranks)
    ar = np.arange(len(order))
    table = np.where(r[:, None] >= r[None, :], ar[:, None], ar[None, :])
    return FiniteSemigroup(order.labels, table)


def check_B_axioms(S: FiniteSemigroup) -> Report:
    """B1 (associative and abelian), B2 (a*b in {a, b}), B3 (a*b=a, b*c=b imply a*c=a).

    A table that is exactly the min table of the chain it induces passes in
    O(n^2); anything else gets the full scans, which locate the first
    violated axiom.
    """
    T = S.table
    ar = np.arange(len(S))
    ranks = _chain_ranks(T == ar[:, None])
    if ranks is not None and np.array_equal(T, np.where(ranks[:, None] <= ranks[None, :], ar[:, None], ar[None, :])):
        return Report.passed(f"{len(S)} elements")
    for rep in (check_associative(S), check_abelian(S)):
        if not rep:
            return Report.failed("B1", rep.witness, f"{rep.axiom}: {rep.detail}")
    bad = np.argwhere((T != ar[:, None]) & (T != ar[None, :]))
    if len(bad):
        a, b = (int(x) for x in bad[0])
        return Report.failed(
            "B2", (a, b), f"{S.labels[a]}*{S.labels[b]} = {S.labels[T[a, b]]} is neither factor"
        )
    L = T == ar[:, None]  # L[a, b] iff a*b = a
    triple = _first_intransitive(L)
    if triple is not None:
        a, b, c = triple
        return Report.failed(
            "B3",
            triple,
            f"{S.labels[a]}*{S.labels[b]} = {S.labels[a]} and {S.labels[b]}*{S.labels[c]} = "
            f"{S.labels[b]} but {S.labels[a]}*{S.labels[c]} = {S.labels[T[a, c]]}",
        )
    return Report.passed(f"{len(S)} elements")


def order_from_semigroup(S: FiniteSemigroup) -> TotalOrder:
    """The relation a <= b iff a*b = a, for a semigroup satisfying B1-B3.

    Totality is re-verified from the relation itself before returning.
    """
    rep = check_B_axioms(S)
    if not rep:
        raise NotAChainError(f"semigroup fails the chain axioms: {rep}")
    T = S.table
    R = T == np.arange(len(S))[:, None]
    total = _total_order_report(S.labels, R)
    if not total:
        raise NotAChainError(f"derived relation is not a total order: {total}")
    return total.value


def replace_elements(family: OrderedFamily) -> TotalOrder:
    """Substitute each base element by its part.

    The result lists the blocks in base order, each block in its own order,
    with labels kept verbatim.
    """
    chain = []
    for s in family.base.chain:
        chain.extend(family.parts[s].chain)
    return TotalOrder.from_chain(chain)
