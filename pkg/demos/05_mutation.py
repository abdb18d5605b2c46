# Quantum seeds from an adapted reduced word, and random mutation.
import random

from qgr.qcluster import mutate, random_mutation_check, seed_from_qdatum, verify_kappa
from qgr.qdata import random_qdatum

rng = random.Random(0)
q = random_qdatum("A3", rng)
s = seed_from_qdatum(q)
print(q)
print("exchangeable", s.pair.J_e, "frozen", s.pair.J_f)

for row in s.pair.Btilde:
    print(" ".join(f"{x:3d}" for x in row))

# the torus commutation matches the compatible pair
print("kappa = Lambda:", verify_kappa(q) == [])

s1 = mutate(s, s.pair.J_e[0])
print("compatible after one mutation:", s1.pair.is_compatible())

ok = all(random_mutation_check(s, 20, rng)[0] for _ in range(20))
print("20 random sequences:", ok)
