"""
(q,t)-characters in rank one
============================

A walk through the A1 quantum torus: two fundamental characters, their
product, and the canonical basis element that splits off.
"""

from qgr import Y, ft, lt, kl_table, quantum_torus
from qgr.qtorus import to_text

# The torus for A1.  Variables Y[1,p] live on even p.
T = quantum_torus("A1")

# Fundamental characters are two-term sums.
F0 = ft("A1", Y(1, 0)).element
F2 = ft("A1", Y(1, 2)).element
print(to_text(F0))
print(to_text(F2))

# Y[1,0] and Y[1,2] do not t-commute trivially
print("Y0 Y2 =", T.generator(1, 0) * T.generator(1, 2))
print("Y2 Y0 =", T.generator(1, 2) * T.generator(1, 0))

# The product of the two fundamentals is reducible.
prod = F0 * F2
print(to_text(prod))

L = lt("A1", Y(1, 0) * Y(1, 2)).element
print(to_text(L))

# so F0 F2 - t^{-1} L is the unit
print("remainder:", prod - L.shift(-2))

# the KL polynomial that records it
for m, P in kl_table("A1", Y(1, 0) * Y(1, 2)).items():
    print(f"P(Y0Y2, {m}) = {P}")
