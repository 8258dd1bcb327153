"""Zeros below, identities above, then replacement: Z^n in lex order.

Run with ``python demos/04_lex_order_on_integer_tuples.py``.
"""

from semiadjoin import build_V1, build_Vn, find_identity, find_zero, order_from_semigroup, verify_lex_correspondence

spacer = "-" * 60

V = build_V1(3, 3)
print("s0..s3 by identity adjunction, then zeros s-1, s-2, s-3:")
print(order_from_semigroup(V.semigroup))
print("s1 * s-2 =", V.semigroup.mul("s1", "s-2"))
print("A finite truncation still has an identity and a zero:",
      find_identity(V.semigroup), find_zero(V.semigroup))
print("(the full union over all of Z has neither)")
print(spacer)

V2 = build_Vn(2, 1)
print("Replace each s_i by a copy of the chain {s_{i,j}}:")
print(order_from_semigroup(V2.semigroup))
print(spacer)

for n, b in [(1, 4), (2, 2), (3, 2)]:
    S = build_Vn(n, b)
    print(f"n={n}, box [-{b},{b}]^{n}: {len(S)} elements, lex check {verify_lex_correspondence(S)}")
