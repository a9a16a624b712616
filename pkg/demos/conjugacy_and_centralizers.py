"""
Conjugacy and centralizers
==========================

Cyclic reduction strips a word down to a core that no conjugation can
shorten.  The centralizer of an element is then read off from the join
structure of the graph spanned by that core.
"""

import random

from raag import Graph, Group, centralizer, conjugate_test, cyclic_reduce, equal

# a square a-b-c-d with two extra vertices e, f joined to all four corners
edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
edges += [(x, y) for x in "ef" for y in "abcd"]
G = Group(Graph("abcdef", edges))

g = G.word("a^-2 c a b d c^-1 b a d")
cnf = cyclic_reduce(g)
print("g         =", g)
print("core      =", cnf.core)
print("conjugator=", cnf.conjugator)
print("check     :", equal(cnf.conjugator * cnf.core * ~cnf.conjugator, g))

# a conjugate of g is recognized, with a witness
h = G("c d^-1 e")
other = h * g * ~h
x = conjugate_test(g, other)
print("conjugate witness:", x, equal(g, x * other * ~x))

# the centralizer splits as cyclic factors plus the free part on the link
C = centralizer(g)
print("centralizer:", C)

rng = random.Random(1)
for _ in range(3):
    s = C.sample(rng)
    print("  sample", s, "commutes:", equal(g * s, s * g))
