"""
Doubling along a star
=====================

Conjugating everything outside star(u) by u produces a second copy of
the graph glued to the first along star(u).  The resulting subgroup has
index two, which shows up as an even exponent sum on u.
"""

from raag import cycle_graph, exponent_sum, find_induced_subgraph, star_double, verify_certificate

C5 = cycle_graph(5, "abcde")
amalgam, cert, copies = star_double(C5, "b")

print("amalgam vertices:", amalgam.vertices)
print("second-copy vertices:", copies)
for x, w in cert.basis.items():
    print(f"  {x:4} -> {str(w):12} b-exponent sum {exponent_sum(w, 'b')}")

print(verify_certificate(cert, sample_budget=300))

# the doubled pentagon contains an induced hexagon
print("induced C6:", find_induced_subgraph(cycle_graph(6), amalgam))

# doubling bigger cycles gives longer induced cycles
for q in (6, 7):
    amalgam, _, _ = star_double(cycle_graph(q, "abcdefg"[:q]), "b")
    found = find_induced_subgraph(cycle_graph(2 * q - 4), amalgam) is not None
    print(f"C{q}: amalgam has {len(amalgam)} vertices, induced C{2 * q - 4}: {found}")
