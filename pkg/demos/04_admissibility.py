"""Edge admissibility: exact enumeration next to the sampling estimator.

The running example is the 4-vertex diamond (complete graph minus one
edge): the probability that at least one detour survives a p = 1/2
subset is 3/4, and that both survive is 1/4.

Run:  python3 demos/04_admissibility.py
"""

from trisurf import (
    AdmissibilityParams,
    admissible_edge_fraction,
    admissible_exact,
    admissible_mc,
)
from trisurf.hypergraph import Graph

diamond = Graph.build(range(4), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])

for k in (1, 2):
    exact = admissible_exact(diamond, (0, 1), p=0.5, k=k)
    est = admissible_mc(
        diamond, (0, 1), AdmissibilityParams(p=0.5, epsilon=0.3, k=k, mc_samples=50000), seed=1
    )
    print(f"k={k}: exact={exact:.4f}  mc={est.p_hat:.4f} "
          f"[{est.ci_low:.4f}, {est.ci_high:.4f}] -> {est.verdict}")

print()
print("monotone in p (k=1):", [round(admissible_exact(diamond, (0, 1), p, 1), 4)
                               for p in (0.1, 0.3, 0.5, 0.9)])

print()
params = AdmissibilityParams(p=0.9, epsilon=0.5, k=1)
import itertools

k12 = Graph.build(range(12), itertools.combinations(range(12), 2))
stats = admissible_edge_fraction(k12, params, seed=0)
print(f"complete graph on 12 vertices at p=0.9: {stats.admissible}/{stats.edges} admissible, "
      f"theoretical non-admissible cap {stats.bound:.1f}")
