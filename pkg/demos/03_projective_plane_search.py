"""Full projective-plane search on a complete 3-uniform hypergraph.

Thirteen vertices is the smallest complete instance the glued structure
fits into: five anchor roles, the forced second cycle vertex, one
interior vertex for the second cycle, and three interior vertices for
each of the two disks.

Run:  python3 demos/03_projective_plane_search.py
"""

import itertools
import time

from trisurf import Hypergraph3, SearchConfig, find_rp2, verify_certificate

n = 14
h = Hypergraph3(n, frozenset(itertools.combinations(range(n), 3)))
config = SearchConfig(seed=2026)

t0 = time.time()
outcome = find_rp2(h, config)
elapsed = time.time() - t0

if not outcome.found:
    print(f"not found after {outcome.attempts} attempts; counters={outcome.counters}")
    raise SystemExit(1)

cert = outcome.certificate
print(f"found in {outcome.attempts} attempts ({elapsed:.2f}s)")
print(f"roles: u={cert.u} u'={cert.u1} v0={cert.v0} v1={cert.v1} v2={cert.v2} v3={cert.v3}")
print(f"cycle C  ({len(cert.cycle_c)} vertices): {cert.cycle_c}")
print(f"cycle C' ({len(cert.cycle_cprime)} vertices): {cert.cycle_cprime}")
print(f"disk D : boundary {cert.disk_d.boundary}, interior {sorted(cert.disk_d.interior)}")
print(f"disk D': boundary {cert.disk_dprime.boundary}, interior {sorted(cert.disk_dprime.interior)}")
print(f"facets: {len(cert.facets)}, verdict: {cert.report.verdict} (chi={cert.report.chi})")

ok, problems = verify_certificate(h, cert)
print(f"independent verification: {'PASS' if ok else problems}")

rerun = find_rp2(h, config, threads=4)
print(f"threads=4 rerun byte-identical: {rerun.certificate.to_json() == cert.to_json()}")
