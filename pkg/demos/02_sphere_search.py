"""Find a double-pyramid sphere in a dense random hypergraph.

The densest common link of two vertices almost surely contains a cycle
once the edge count is well above n, and any such cycle spans a sphere.

Run:  python3 demos/02_sphere_search.py
"""

from trisurf import classify, find_sphere
from trisurf.generators import random_hypergraph
from trisurf.surfaces import Complex2

h = random_hypergraph(n=30, m=3500, seed=6)
print(f"hypergraph: n={h.n}, m={len(h.edges)}")

cert = find_sphere(h)
if cert is None:
    print("no sphere found")
else:
    print(f"apexes u={cert.u}, u'={cert.u1}")
    print(f"equator cycle ({len(cert.cycle)} vertices): {cert.cycle}")
    print(f"facets: {len(cert.facets)}")
    rep = classify(Complex2.build(cert.facets))
    print(f"classifier: {rep.verdict} (chi={rep.chi})")
    assert all(t in h.edges for t in cert.facets)
    print("all facets are edges of the input: certificate is sound")
