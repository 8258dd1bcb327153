"""Integer index tuples with vector addition and lexicographic comparison."""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .report import ArityError, CoordinateOverflowError, Report, SemigroupError

# coordinates are signed 64-bit; addition outside this range is an error
COORD_MIN = -(2**63)
COORD_MAX = 2**63 - 1

# exhaustive subset enumeration in check_monomial_order_sample stops here
MAX_SUBSET_ENUMERATION = 12


class Comparison(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class IntTuple:
    """An n-tuple of integers; ``signed=False`` restricts it to nonnegative entries."""

    coords: tuple
    signed: bool = True

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if not coords:
            raise ArityError("arity must be positive")
        for c in coords:
            if not COORD_MIN <= c <= COORD_MAX:
                raise CoordinateOverflowError(f"coordinate {c} does not fit in 64 bits")
            if not self.signed and c < 0:
                raise SemigroupError(f"negative coordinate {c} in a nonnegative tuple")

    @property
    def arity(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __add__(self, other: "IntTuple") -> "IntTuple":
        return tuple_add(self, other)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    @classmethod
    def parse(cls, text: str, signed: bool = True) -> "IntTuple":
        return parse_tuple(text, signed=signed)


def nonneg(*coords: int) -> IntTuple:
    return IntTuple(coords, signed=False)


def signed(*coords: int) -> IntTuple:
    return IntTuple(coords, signed=True)


_TUPLE_RE = re.compile(r"^\(\s*-?\d+\s*(?:,\s*-?\d+\s*)*\)$")


def parse_tuple(text: str, signed: bool = True) -> IntTuple:
    """Parse the text form ``(i1,i2,...,in)``."""
    text = text.strip()
    if not _TUPLE_RE.match(text):
        raise SemigroupError(f"cannot parse {text!r} as a tuple like (1,-2,3)")
    return IntTuple(tuple(int(c) for c in text[1:-1].split(",")), signed=signed)


def _compatible(a: IntTuple, b: IntTuple) -> None:
    if a.arity != b.arity:
        raise ArityError(f"arity mismatch: {a} has {a.arity} coordinates, {b} has {b.arity}")
    if a.signed != b.signed:
        raise ArityError(f"cannot mix signed and nonnegative tuples: {a}, {b}")


def lex_compare(a: IntTuple, b: IntTuple) -> Comparison:
    """Decide by the first coordinate where the tuples differ."""
    _compatible(a, b)
    for x, y in zip(a.coords, b.coords):
        if x != y:
            return Comparison.LESS if x < y else Comparison.GREATER
    return Comparison.EQUAL


def lex_le(a: IntTuple, b: IntTuple) -> bool:
    return lex_compare(a, b) is not Comparison.GREATER


def lex_min(a: IntTuple, b: IntTuple) -> IntTuple:
    return a if lex_compare(a, b) is not Comparison.GREATER else b


def tuple_add(a: IntTuple, b: IntTuple) -> IntTuple:
    _compatible(a, b)
    out = []
    for x, y in zip(a.coords, b.coords):
        s = x + y
        if not COORD_MIN <= s <= COORD_MAX:
            raise CoordinateOverflowError(f"{x} + {y} overflows 64-bit coordinates")
        out.append(s)
    return IntTuple(tuple(out), signed=a.signed)


def zero_tuple(n: int, signed: bool = False) -> IntTuple:
    return IntTuple((0,) * n, signed=signed)


def box(lows: Sequence[int], highs: Sequence[int], signed: bool = True) -> list:
    """All tuples with ``lows[k] <= t[k] <= highs[k]``, in increasing lex order."""
    ranges = [range(lo, hi + 1) for lo, hi in zip(lows, highs)]
    return [IntTuple(c, signed=signed) for c in itertools.product(*ranges)]


def _lex_minima(subset: Sequence[IntTuple]) -> list:
    return [m for m in subset if all(lex_le(m, x) for x in subset)]


def _subsets(items: list):
    if len(items) <= MAX_SUBSET_ENUMERATION:
        for r in range(1, len(items) + 1):
            yield from itertools.combinations(items, r)
        return
    # too many for 2^k: every subset of size <= 3 plus every prefix
    for r in (1, 2, 3):
        yield from itertools.combinations(items, r)
    for k in range(4, len(items) + 1):
        yield tuple(items[:k])


def check_monomial_order_sample(n: int, samples: Iterable, extra: Iterable = ()) -> Report:
    """Test lex order on nonnegative n-tuples against finite monomial-order conditions.

    For each sampled triple ``(a, b, c)``: comparisons between any two of
    them are consistent in both directions (totality, antisymmetry), and
    ``a <= b`` implies ``a + c <= b + c``. Every nonempty subset of ``extra``
    must have exactly one lex-minimum (all subsets when ``extra`` has at
    most ``MAX_SUBSET_ENUMERATION`` distinct tuples, otherwise small subsets
    and prefixes). The zero tuple must lie below every sampled tuple.

    Being a well-order cannot be decided on finite data; these are
    necessary conditions only.
    """
    samples = [tuple(t) for t in samples]
    extra = list(extra)
    everything = [x for t in samples for x in t] + extra
    for x in everything:
        if not isinstance(x, IntTuple):
            raise TypeError(f"expected IntTuple, got {type(x).__name__}")
        if x.signed:
            raise SemigroupError(f"monomial orders live on nonnegative tuples; got signed {x}")
        if x.arity != n:
            raise ArityError(f"{x} does not have arity {n}")

    checked = 0
    for t in samples:
        if len(t) != 3:
            raise SemigroupError("samples must be (a, b, c) triples")
        a, b, c = t
        for x, y in ((a, b), (a, c), (b, c)):
            fwd, back = lex_compare(x, y), lex_compare(y, x)
            if fwd is not Comparison(-back):
                return Report.failed("totality", (x, y), f"{x} vs {y} is {fwd} but {y} vs {x} is {back}")
            if (fwd is Comparison.EQUAL) != (x.coords == y.coords):
                return Report.failed("antisymmetry", (x, y), f"{x} and {y} compare {fwd}")
        for x, y in ((a, b), (b, a)):
            if lex_le(x, y) and not lex_le(x + c, y + c):
                return Report.failed(
                    "translation", (x, y, c), f"{x} <= {y} but {x + c} > {y + c}"
                )
        checked += 1

    distinct = list(dict.fromkeys(extra))
    for subset in _subsets(distinct):
        minima = _lex_minima(subset)
        if len(minima) != 1:
            return Report.failed(
                "subset-minimum", tuple(subset), f"{len(minima)} minima: {[str(m) for m in minima]}"
            )

    origin = zero_tuple(n)
    for x in everything:
        if not lex_le(origin, x):
            return Report.failed("zero-minimal", (x,), f"{x} < {origin}")

    return Report.passed(f"{checked} triples, {len(distinct)} subset elements", checked=checked)
