"""
From A3 to B2
=============

A pair of Q-data, one for A3 and one for B2, identifies dominant monomials
of the two types.  The map is tabulated on fundamentals and extended to
products through characters.
"""
from qgr.isom import psi_b, psi_pair, psi_table, psi_window_transition, verify_presentation

q1, q2 = psi_pair(2)
print(q1, q2)

# the table on two windows
for (a, p), v in psi_table(2, (0, 1)).items():
    print(f"Y[{a},{p}]".ljust(10), "->", v)

# the same values from Lusztig's piecewise-linear transition
for (a, p), v in psi_table(2, (0,)).items():
    assert psi_window_transition(f"Y[{a},{p}]", 2) == v

# the map is not multiplicative
print(psi_b("Y[1,-3]", 2), psi_b("Y[1,-5]", 2), psi_b("Y[1,-3]Y[1,-5]", 2))

# both sides satisfy the same relations among generators
for q in (q1, q2):
    r = verify_presentation(q, (0, 1, 2))
    print(q.g.name, r.checked, "relations, holds:", r.holds)
