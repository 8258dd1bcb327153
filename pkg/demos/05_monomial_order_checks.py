"""Finite checks that lex order behaves like a monomial order on N0^n.

Being a well-order cannot be tested on finite data, so the check looks at
translation invariance, consistency, subset minima and the zero tuple.

Run with ``python demos/05_monomial_order_checks.py``.
"""

import random

from semiadjoin import IntTuple, check_monomial_order_sample, lex_compare, parse_tuple

a, b, c = (parse_tuple(t, signed=False) for t in ("(0,1)", "(1,0)", "(2,2)"))
print(f"{a} vs {b}: {lex_compare(a, b)}")
print(f"{a + c} vs {b + c}: {lex_compare(a + c, b + c)}")
print("that triple:", check_monomial_order_sample(2, [(a, b, c)]))

rng = random.Random(0)
for n in range(1, 5):
    def draw():
        return IntTuple(tuple(rng.randint(0, 10) for _ in range(n)), signed=False)

    samples = [(draw(), draw(), draw()) for _ in range(1000)]
    extra = [draw() for _ in range(10)]
    print(f"n={n}: {check_monomial_order_sample(n, samples, extra)}")
