"""How search success responds to edge density, n^(5/2)-style.

Sweeps m = coeff * n^2.5 (capped at the complete hypergraph) over a few
densities and prints a success grid.  With generous coefficients the
random instances behave like complete ones; thin them out and the
glued structure stops fitting.

Run:  python3 demos/05_density_sweep.py   (about a minute)
"""

import math
import time

from trisurf import SearchConfig, find_rp2
from trisurf.generators import random_hypergraph
from trisurf.rng import derive_seed

TRIALS = 5
print(f"{'n':>4} {'coeff':>6} {'m':>6} {'wins':>5} {'mean ms':>9}")
for n in (14, 16, 18):
    for coeff in (0.2, 0.5, 1.0):
        m = min(math.ceil(coeff * n ** 2.5), math.comb(n, 3))
        wins = 0
        times = []
        for trial in range(TRIALS):
            h = random_hypergraph(n, m, derive_seed(99, n, coeff, trial))
            cfg = SearchConfig(seed=derive_seed(100, n, coeff, trial), retry_budget=300)
            t0 = time.time()
            out = find_rp2(h, cfg)
            times.append((time.time() - t0) * 1000)
            wins += out.found
        print(f"{n:>4} {coeff:>6.2f} {m:>6} {wins:>4}/{TRIALS} {sum(times)/len(times):>9.1f}")
