"""Classify the canonical fixtures and a couple of hand-built complexes.

Run:  python3 demos/01_surface_classification.py
"""

from trisurf import Complex2, classify
from trisurf.generators import FIXTURE_NAMES, fixture

print("Named fixtures")
print("-" * 60)
for name in FIXTURE_NAMES:
    fx = fixture(name)
    rep = classify(fx.facets)
    extra = f" reason={rep.reason}" if rep.reason else ""
    print(f"{name:24s} -> {rep.verdict:20s} chi={rep.chi:+d}{extra}")

print()
print("A disk with a chord is not induced-boundary material:")
diamond = Complex2.build(
    [(0, 1, 4), (1, 2, 4), (0, 2, 4), (0, 2, 5), (2, 3, 5), (0, 3, 5)]
)
rep = classify(diamond)
print(f"  verdict={rep.verdict}, boundary cycles={rep.boundary_cycles}")
from trisurf import has_induced_boundary

print(f"  has_induced_boundary={has_induced_boundary(diamond)}  (chord 0-2 is interior)")
