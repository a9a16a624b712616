"""
Hyperplanes and crossing graphs
===============================

Truncating exponents to Z/l gives a finite-degree quasi-median graph.  Its
hyperplanes near the identity, together with which pairs cross, form a
crossing graph.  Looking for an induced 6-cycle in it shows how the
6-cycle group sits inside the pentagon group.
"""

from raag import (
    Group,
    ball,
    crossing_graph,
    cycle_graph,
    find_induced_subgraph,
    hyperplanes_of_ball,
    parse_hyperplane,
    transverse,
)

G = Group(cycle_graph(5, "abcde"), 6)

B = ball(G, 1)
hs = hyperplanes_of_ball(B)
print(f"ball of radius 1: {len(B)} elements, {len(hs)} hyperplanes")

# hyperplanes are written rep|u for the coset rep<star u>
J_a = parse_hyperplane("1|a", G)
bJ_e = parse_hyperplane("b|e", G)
J_c = parse_hyperplane("1|c", G)
print("1|a crosses b|e:", transverse(J_a, bJ_e))
print("1|c crosses b|e:", transverse(J_c, bJ_e))

cg = crossing_graph(hs)
host = cg.to_graph()
print(f"crossing graph: {len(host)} vertices, {host.num_edges()} edges")

m = find_induced_subgraph(cycle_graph(6), host)
print("induced C6 on hyperplanes:")
for x, hname in m.items():
    print(" ", x, "->", cg.hyperplanes[host.index[hname]])
