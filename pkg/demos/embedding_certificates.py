"""
Searching for embeddings and checking certificates
==================================================

embed_search grows balls in the truncated quasi-median graph until the
crossing graph contains the pattern.  A hit becomes a certificate: the
hyperplanes, and a basis of powered conjugates that generates a copy of
the smaller group.  The verifier re-checks everything from scratch.
"""

from raag import (
    EmbeddingCertificate,
    cycle_graph,
    embed_search,
    path_graph,
    radius_bound,
    verify_certificate,
)

C5 = cycle_graph(5, "abcde")

ans = embed_search(cycle_graph(6), C5)
print(ans.verdict, "at radius", ans.radius)
text = ans.certificate.to_text()
print(text)

# certificates round-trip through text and verify independently
cert = EmbeddingCertificate.from_text(text)
print(verify_certificate(cert, sample_budget=300))

# a longer path inside a shorter one
ans = embed_search(path_graph(5), path_graph(4, "abcd"))
print(ans.verdict, sorted(str(h) for h in ans.certificate.hyperplanes.values()))

# cycles obey a divisibility rule; without a hit the answer stays open
ans = embed_search(cycle_graph(4), C5, max_radius=2)
print(ans.verdict, f"(searched up to radius {ans.searched_radius}, "
      f"a certified no needs radius {radius_bound(cycle_graph(4), C5)})")
