"""Iterated identity adjunction rebuilds N0^n with the lexicographic order.

Each tuple in {0..B-1}^n is adjoined as a new identity, in increasing lex
order. The result is compared with the semigroup whose product is lex_min.

Run with ``python demos/03_lex_order_on_nonnegative_tuples.py``.
"""

from semiadjoin import build_T1, build_Tn, find_identity, find_zero, order_from_semigroup, verify_lex_correspondence

spacer = "-" * 60

T1 = build_T1(4)
print("Five steps starting from s0 give a chain where s_i * s_j = s_min(i,j):")
print(T1.semigroup.table)
print("zero:", find_zero(T1.semigroup), " identity:", find_identity(T1.semigroup))
print(spacer)

T2 = build_Tn(2, 3)
print("Two coordinates, indices 0..2. Same first index: minimum of the second.")
print("s_{1,2} * s_{1,0} =", T2.semigroup.mul("s_{1,2}", "s_{1,0}"))
print("Smaller first index wins outright:")
print("s_{0,2} * s_{1,0} =", T2.semigroup.mul("s_{0,2}", "s_{1,0}"))
print("induced order:", order_from_semigroup(T2.semigroup))
print(spacer)

for n, B in [(1, 8), (2, 4), (3, 3), (3, 6)]:
    S = build_Tn(n, B)
    print(f"n={n}, B={B}: {len(S)} elements, lex check {verify_lex_correspondence(S)}")
