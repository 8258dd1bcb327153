"""Adjoining identities and zeros to finite semigroups, and the lexicographic
orders on N0^n and Z^n that iterated adjunction produces."""

from .iterated import (
    IndexedSemigroup,
    build_T1,
    build_Tn,
    build_V1,
    build_Vn,
    label_tuple,
    lex_min_semigroup,
    tuple_label,
    verify_lex_correspondence,
)
from .order import (
    OrderedFamily,
    TotalOrder,
    check_B_axioms,
    check_partial_order,
    check_total_order,
    max_semigroup,
    min_semigroup,
    order_from_semigroup,
    replace_elements,
)
from .report import (
    ArityError,
    ClosureError,
    CoordinateOverflowError,
    LabelCollisionError,
    NotAChainError,
    Report,
    SemigroupError,
    SizeLimitError,
    UniquenessError,
    UnknownLabelError,
)
from .semigroup import (
    DEFAULT_MAX_ELEMENTS,
    Element,
    Extender,
    FiniteSemigroup,
    adjoin_identity,
    adjoin_zero,
    check_abelian,
    check_associative,
    equal_under_relabeling,
    find_identity,
    find_zero,
    identity_map,
    trivial_semigroup,
)
from .tuples import (
    Comparison,
    IntTuple,
    check_monomial_order_sample,
    lex_compare,
    lex_min,
    parse_tuple,
    tuple_add,
)

__version__ = "0.1.0"
