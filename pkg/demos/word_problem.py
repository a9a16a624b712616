"""
Solving the word problem over a pentagon
========================================

Two words over the 5-cycle a-b-c-d-e that look unrelated turn out to be
the same group element once commuting letters are shuffled and cancelled.
"""

from raag import Group, cycle_graph, equal, reduce, support

# a right-angled Artin group: adjacent generators commute
G = Group(cycle_graph(5, "abcde"))
print(G)

w1 = G.word("e a d e^-1 c")
w2 = G.word("b a c b^-1 d")

# e commutes with a and d, so e ... e^-1 cancels; the same happens with b
print("reduce(w1) =", reduce(w1))
print("reduce(w2) =", reduce(w2))
print("equal:", equal(w1, w2))
print("support:", sorted(support(w1)))

# non-adjacent generators keep their order
print(G("c a"), "vs", G("a c"))
print("a c == c a ?", equal(G("a c"), G("c a")))

# arithmetic on words returns reduced words
x = G("a b^2") * G("b^-2 c")
print("a b^2 * b^-2 c =", x)
print("inverse:", ~x)
