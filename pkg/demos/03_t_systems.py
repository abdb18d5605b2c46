"""Quantum T-systems for B2, and how truncation cuts a KR character down to
its top monomial."""
from qgr.qchar import ft, kr_monomial, verify_tsystem
from qgr.qdata import canonical_height
from qgr.qtorus import to_text, truncate

q = canonical_height(0, "B2")
print(q, q.xi)

for v in q.U.vertices:
    d = q.d(v)
    p = q.h(v) - 6 * d
    for steps in (1, 2, 3):
        r = verify_tsystem(q, v, p, p + 2 * d * steps)
        print(f"v={v} [{p},{p + 2 * d * steps}]  holds={r.holds}  x={r.x}  y={r.y}")

# KR character on three points of the short-root lattice
m = kr_monomial("B2", 2, -4, 0)
F = ft("B2", m).element
print(len(F), "terms;", "after truncating at 0:")
print(to_text(truncate(F, 0)))
