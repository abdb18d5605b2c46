# coding: utf-8

# # Q-data and the twisted AR quiver
#
# A Q-datum for a non-simply-laced type is a height function on the
# unfolded diagram.  Here B3 unfolds to A5.

from qgr.qdata import canonical_height, random_qdatum, adapted_word
from qgr.weyl import beta_sequence
import random

q = canonical_height(0, "B3")
print(q, "unfolds to", q.delta.name)

# # The Coxeter-type element
#
# tau has order r h^vee = 10 and its fifth power is -1.

tau = q.tau
print("order", tau.order(), " tau^5 = -1:", (tau ** 5).is_minus_identity())

# # Vertices and their roots

print(q.to_ascii())

for v, p in q.ar_vertices[:5]:
    alpha, k = q.phi(v, p)
    print((v, p), "->", q.root_label(alpha), "window", k)

# # Reading off a reduced word
#
# Reflecting sources from the top gives a reduced word for w0 whose
# beta-sequence reproduces phi.

word, heights = adapted_word(q)
print("word", word)
print(all(q.phi(v, p)[0] == b for v, p, b in zip(word, heights, beta_sequence(q.delta, word))))

# A random datum works the same way.
q2 = random_qdatum("G2", random.Random(1))
print(q2, q2.tau.order())
