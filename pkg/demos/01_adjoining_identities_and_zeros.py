"""Adjoining identities and zeros to the one-element semigroup.

Run with ``python demos/01_adjoining_identities_and_zeros.py``.
"""

from semiadjoin import adjoin_identity, adjoin_zero, find_identity, find_zero, trivial_semigroup
from semiadjoin.formats import semigroup_to_csv

spacer = "-" * 60

S0 = trivial_semigroup("s0")
print("The trivial semigroup has one product, s0*s0 = s0:")
print(semigroup_to_csv(S0))
print("identity:", find_identity(S0), " zero:", find_zero(S0))
print(spacer)

S1 = adjoin_identity(S0, "s1")
print("Adjoin a fresh identity s1. The old element keeps its product,")
print("and s1 acts trivially on everything:")
print(semigroup_to_csv(S1))
print("identity:", find_identity(S1), " zero:", find_zero(S1))
print(spacer)

S2 = adjoin_identity(S1, "s2")
print("Adjoining again works even though S1 already had an identity.")
print("s1 is no longer the identity, because s1*s2 =", S2.mul("s1", "s2"))
print("identity:", find_identity(S2))
print(spacer)

Z = adjoin_zero(S2, "s-1")
print("Adjoining a zero s-1 puts an absorbing element under everything:")
print(semigroup_to_csv(Z))
print("zero:", find_zero(Z), " identity:", find_identity(Z))

try:
    adjoin_zero(Z, "s1")
except ValueError as exc:
    print("\nReusing a label is refused:", exc)
