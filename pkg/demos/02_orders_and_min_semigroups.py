"""Total orders and the semigroups a*b = min(a, b), and back again.

Run with ``python demos/02_orders_and_min_semigroups.py``.
"""

from semiadjoin import (
    FiniteSemigroup,
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

spacer = "-" * 60

print("A relation given as explicit pairs can be checked axiom by axiom.")
print("discrete order on {a, b}:  ", check_total_order(["a", "b"], [("a", "a"), ("b", "b")]))
print("a<=b, b<=c without a<=c:   ",
      check_partial_order(["a", "b", "c"], [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")]))
rep = check_total_order(["x", "y", "z"], TotalOrder.from_chain(["z", "x", "y"]).pairs())
print("a genuine chain:           ", rep)
print(spacer)

order = rep.value
S = min_semigroup(order)
print("The min semigroup of", order)
print(S.table)
print("chain axioms:", check_B_axioms(S))
print("order read back from a*b = a:", order_from_semigroup(S))
print("order read back from the max semigroup:", order_from_semigroup(max_semigroup(order)))
print(spacer)

left_zero = FiniteSemigroup(["p", "q"], [[0, 0], [1, 1]])
print("A left-zero band is a semigroup but not a chain:", check_B_axioms(left_zero))
print(spacer)

base = TotalOrder.from_chain(["low", "high"])
parts = {"low": TotalOrder.from_chain(["a", "b"]), "high": TotalOrder.from_chain(["c", "d", "e"])}
print("Replacing each element of", base, "by its own chain gives")
print(replace_elements(OrderedFamily(base, parts)))
