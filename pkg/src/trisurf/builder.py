"""Constructing sphere and projective-plane subcomplexes of a hypergraph.

The sphere route is classical: a cycle C in a common link of two apex
vertices u, u' yields the 2|C|-facet double pyramid.

The projective-plane route glues five ingredients found inside the
hypergraph: two cycles C, C' in a common link meeting only at a hub
vertex v0, and two disk patches D, D' replacing the degenerate corners
at v0, assembled so the union is a closed non-orientable chi = 1
surface.  ``find_rp2`` runs the whole randomized pipeline: pick the
densest common link, pick a low-degree hub with two usable incident
edges, four-way-partition the vertices, route the cycles through the
first two partition classes and build the disks inside the last two,
then validate the glued complex with the surface classifier and return
a machine-checkable certificate.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from .admissibility import (
    VERDICT_ADMISSIBLE,
    AdmissibilityEstimate,
    AdmissibilityParams,
    admissible,
    filter_semi_admissible,
    semi_admissible,
)
from .errors import DefectError, InputError, PreconditionError
from .hypergraph import (
    Graph,
    Hypergraph3,
    Triple,
    best_pair,
    canon_pair,
    canon_triple,
    codegree_table,
    pair_link,
)
from .paths import cycle_edges, cycle_with_edge, cycle_with_forced_second_vertex, path_through
from .rng import derive_seed, local_rng
from .surfaces import (
    VERDICT_DISK,
    VERDICT_RP2,
    VERDICT_SPHERE,
    Complex2,
    SurfaceReport,
    classify,
    cycles_equal_up_to_symmetry,
    has_induced_boundary,
    interior_vertices,
)

APEX_PATH_COUNT = 2  # disjoint-path level certified for the hub's two edges
PARTITION_PROBS = (1 / 6, 1 / 6, 1 / 3, 1 / 3)  # U1, U2, U3, U4


@dataclass(frozen=True)
class SearchConfig:
    """All knobs of the randomized search.

    Strict mode enforces the existence thresholds that the asymptotic
    argument needs (astronomically large at desk scale); lenient mode
    relaxes them to best-found and lets the classifier-verified
    certificate carry the burden of proof.
    """

    p: float = 1 / 6
    epsilon: float = 0.05
    epsilon_prime: float = 1 / 3
    k: int = 5
    r: int = 8
    d: int = 20
    c: float = 1.0
    retry_budget: int = 800
    mc_samples: int = 512
    seed: int = 0
    strict: bool = False
    prefilter: bool = False
    prefilter_budget: int = 200
    exact_limit: int = 16

    def __post_init__(self):
        if not 0 < self.p <= 0.5:
            raise InputError(f"p must lie in (0, 1/2], got {self.p}")
        for name in ("k", "r", "d", "mc_samples"):
            if getattr(self, name) < 1:
                raise InputError(f"{name} must be at least 1")
        if self.retry_budget < 0:
            raise InputError("retry_budget must be non-negative")
        if self.strict:
            alpha = 2 * APEX_PATH_COUNT / (self.p ** 2 * self.epsilon_prime)
            if self.d < 4 * (1 + 2 * alpha):
                raise InputError(
                    f"strict mode needs d >= {4 * (1 + 2 * alpha):.0f}, got {self.d}"
                )

    @classmethod
    def strict_defaults(cls, p: float = 1 / 6, epsilon_prime: float = 1 / 3, **kw) -> "SearchConfig":
        """Solve the strict-mode constant chain numerically.

        d comes from the degree-threshold formula at path level 2, then
        r and epsilon shrink the two failure terms below 1/(6d) each.
        """
        import math

        alpha = 2 * APEX_PATH_COUNT / (p ** 2 * epsilon_prime)
        d = math.ceil(4 * (1 + 2 * alpha))
        r = 5 + math.ceil(math.log(2 * 6 * d) / math.log(3 / 2)) + 1
        epsilon = 1 / (4 * r * 6 * d) * 0.99
        return cls(p=p, epsilon=epsilon, epsilon_prime=epsilon_prime,
                   r=r, d=d, strict=True, **kw)

    def to_json_dict(self) -> dict:
        return asdict(self)

    def adm_params(self, k: int, epsilon: float | None = None) -> AdmissibilityParams:
        return AdmissibilityParams(
            p=self.p,
            epsilon=self.epsilon if epsilon is None else epsilon,
            k=k,
            r=self.r,
            mc_samples=self.mc_samples,
            exact_limit=self.exact_limit,
        )


@dataclass(frozen=True)
class DiskPatch:
    """A disk subcomplex with its boundary walk and interior vertex set."""

    facets: Complex2
    boundary: tuple[int, ...]
    interior: frozenset[int]


@dataclass(frozen=True)
class SphereCertificate:
    facets: tuple[Triple, ...]
    u: int
    u1: int
    cycle: tuple[int, ...]
    seed: int
    report: SurfaceReport

    def to_json_dict(self) -> dict:
        return {
            "facets": [list(t) for t in self.facets],
            "roles": {"u": self.u, "u1": self.u1},
            "cycle": list(self.cycle),
            "seed": self.seed,
            "report": self.report.to_json_dict(),
        }


@dataclass(frozen=True)
class Certificate:
    """Verifiable record of a projective-plane subcomplex."""

    facets: tuple[Triple, ...]
    u: int
    u1: int
    v0: int
    v1: int
    v2: int
    v3: int
    cycle_c: tuple[int, ...]
    cycle_cprime: tuple[int, ...]
    disk_d: DiskPatch
    disk_dprime: DiskPatch
    partition: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    config: SearchConfig
    seed: int
    report: SurfaceReport

    @property
    def w_set(self) -> frozenset[int]:
        return frozenset((self.u, self.u1, self.v0, self.v1, self.v3))

    def to_json_dict(self) -> dict:
        def disk_dict(d: DiskPatch) -> dict:
            return {
                "facets": [list(t) for t in sorted(d.facets.facets)],
                "boundary": list(d.boundary),
                "interior": sorted(d.interior),
            }

        return {
            "facets": [list(t) for t in self.facets],
            "roles": {
                "u": self.u, "u1": self.u1, "v0": self.v0,
                "v1": self.v1, "v2": self.v2, "v3": self.v3,
            },
            "cycles": {"C": list(self.cycle_c), "Cprime": list(self.cycle_cprime)},
            "disks": {"D": disk_dict(self.disk_d), "Dprime": disk_dict(self.disk_dprime)},
            "partition": {
                f"U{i + 1}": list(part) for i, part in enumerate(self.partition)
            },
            "config": self.config.to_json_dict(),
            "seed": self.seed,
            "report": self.report.to_json_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def build_double_pyramid(u: int, u1: int, cycle: tuple[int, ...]) -> Complex2:
    """Facets {u e, u' e} over the edges e of the cycle: a 2|C|-facet sphere."""
    if u == u1:
        raise InputError("apexes must differ")
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise InputError("cycle must be simple with length at least 3")
    if u in cycle or u1 in cycle:
        raise InputError("apex lies on the cycle")
    facets = set()
    for a, b in cycle_edges(cycle):
        facets.add(canon_triple(u, a, b))
        facets.add(canon_triple(u1, a, b))
    return Complex2(frozenset(facets))


def _find_cycle(g: Graph) -> Optional[tuple[int, ...]]:
    """Any simple cycle, by iterative DFS from the smallest vertex."""
    adj = g.adjacency()
    color: dict[int, int] = {}
    parent: dict[int, int] = {}
    for root in sorted(g.vertices):
        if root in color or not adj[root]:
            continue
        stack = [(root, iter(adj[root]))]
        color[root] = 1
        parent[root] = root
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent[v]:
                    continue
                if w in color:
                    # back edge: walk v up to w
                    walk = [v]
                    cur = v
                    while cur != w:
                        cur = parent[cur]
                        walk.append(cur)
                    return tuple(reversed(walk))
                color[w] = 1
                parent[w] = v
                stack.append((w, iter(adj[w])))
                advanced = True
                break
            if not advanced:
                stack.pop()
    return None


def find_sphere(h: Hypergraph3, budget: int | None = None, seed: int = 0) -> Optional[SphereCertificate]:
    """Double-pyramid sphere search: densest common links first."""
    if h.n < 2:
        return None
    counts: dict[tuple[int, int], int] = {}
    for extenders in codegree_table(h).values():
        for i in range(len(extenders)):
            for j in range(i + 1, len(extenders)):
                key = (extenders[i], extenders[j])
                counts[key] = counts.get(key, 0) + 1
    ranked = sorted(counts, key=lambda k: (-counts[k], k))
    if budget is not None:
        ranked = ranked[:budget]
    for u, u1 in ranked:
        link = pair_link(h, u, u1)
        cycle = _find_cycle(link)
        if cycle is None:
            continue
        facets = build_double_pyramid(u, u1, cycle)
        report = classify(facets)
        if report.verdict != VERDICT_SPHERE:
            raise DefectError(f"double pyramid classified as {report.verdict}")
        return SphereCertificate(tuple(sorted(facets.facets)), u, u1, cycle, seed, report)
    return None


def two_fan_disk_facets(x: int, y: int, z: int, x2: int, w: int,
                    a_inner: tuple[int, ...], b_inner: tuple[int, ...]) -> frozenset[Triple]:
    """Facet set of the two-fan disk with boundary y x z x' and hub w.

    The first fan pairs x with w along the path y a_1 .. a_s z, the
    second pairs w with x' along y b_1 .. b_t z.
    """
    a_path = (y,) + tuple(a_inner) + (z,)
    b_path = (y,) + tuple(b_inner) + (z,)
    facets = set()
    for i in range(len(a_path) - 1):
        facets.add(canon_triple(x, a_path[i], a_path[i + 1]))
        facets.add(canon_triple(w, a_path[i], a_path[i + 1]))
    for j in range(len(b_path) - 1):
        facets.add(canon_triple(w, b_path[j], b_path[j + 1]))
        facets.add(canon_triple(x2, b_path[j], b_path[j + 1]))
    return frozenset(facets)


def _validated_disk(facets: frozenset[Triple], boundary: tuple[int, ...],
                    pool: set, w_set) -> DiskPatch:
    cx = Complex2(facets)
    report = classify(cx)
    if report.verdict != VERDICT_DISK:
        raise DefectError(f"disk candidate classified as {report.verdict}")
    if not has_induced_boundary(cx):
        raise DefectError("disk candidate boundary is not induced")
    if not cycles_equal_up_to_symmetry(report.boundary_cycles[0], boundary):
        raise DefectError("disk candidate has the wrong boundary walk")
    interior = interior_vertices(cx)
    if not interior <= (set(pool) - set(w_set)):
        raise DefectError("disk interior escaped the sampled vertex pool")
    return DiskPatch(cx, boundary, interior)


def build_disk_from_pair(
    h: Hypergraph3, x: int, y: int, z: int, x2: int,
    u_pool, w_set, params: AdmissibilityParams, seed: int,
) -> Optional[DiskPatch]:
    """Find a two-fan disk with induced boundary y x z x' inside the pool.

    The pool splits into two halves by a fair seeded coin.  Witness
    candidates (vertices w in the pool, outside the avoidance set, with
    wyz an edge) are scanned in seeded-random order; for each, one
    y-z path is routed through each half inside the corresponding
    common link.  First full success wins.
    """
    if canon_triple(x, y, z) not in h.edges or canon_triple(x2, y, z) not in h.edges:
        raise InputError("xyz and x'yz must be edges of the hypergraph")
    if len(set(w_set)) > params.k:
        raise InputError(f"avoidance set has {len(set(w_set))} > k = {params.k} vertices")
    pool = set(u_pool)
    if pool & {x, y, z, x2}:
        raise InputError("boundary vertices must be removed from the pool")

    split_rng = local_rng(seed, "split")
    half1 = {v for v in sorted(pool) if split_rng.random() < 0.5}
    half2 = pool - half1

    candidates = [
        w for w in sorted(pool - set(w_set))
        if canon_triple(w, y, z) in h.edges
    ]
    local_rng(seed, "scan").shuffle(candidates)

    avoid1 = set(w_set) | {x2}
    avoid2 = set(w_set) | {x}
    for w in candidates:
        link_xw = pair_link(h, x, w)
        p_path = path_through(link_xw, y, z, half1 - {w}, avoid1)
        if p_path is None:
            continue
        link_wx2 = pair_link(h, w, x2)
        q_path = path_through(link_wx2, y, z, half2 - {w}, avoid2)
        if q_path is None:
            continue
        facets = two_fan_disk_facets(x, y, z, x2, w, p_path[1:-1], q_path[1:-1])
        return _validated_disk(facets, (y, x, z, x2), pool, w_set)
    return None


def _check_cycle_shape(cycle: tuple[int, ...], label: str) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise PreconditionError(f"{label} is not a simple cycle of length >= 3")


def _cycle_neighbors(cycle: tuple[int, ...], v: int) -> tuple[int, int]:
    i = cycle.index(v)
    return cycle[(i - 1) % len(cycle)], cycle[(i + 1) % len(cycle)]


def assemble_rp2(
    u: int, u1: int,
    cycle_c: tuple[int, ...], cycle_cprime: tuple[int, ...],
    disk_d: DiskPatch, disk_dprime: DiskPatch,
    v0: int, v1: int, v2: int, v3: int,
) -> Complex2:
    """Glue the two cycles and two disks into a projective plane.

    Every gluing hypothesis is validated before any facet
    is emitted; failures raise PreconditionError naming the violated
    clause.  The classifier has the last word: a verdict other than RP2
    on the union is a DefectError, never a silent return.
    """
    roles = (u, u1, v0, v1, v2, v3)
    if len(set(roles)) != len(roles):
        raise PreconditionError("vertices not distinct")
    _check_cycle_shape(cycle_c, "C")
    _check_cycle_shape(cycle_cprime, "C'")
    if u in cycle_c or u1 in cycle_c or u in cycle_cprime or u1 in cycle_cprime:
        raise PreconditionError("apex vertex lies on a cycle")
    if v0 not in cycle_c or v1 not in cycle_c or v2 not in cycle_c:
        raise PreconditionError("v0, v1, v2 must lie on C")
    if set(_cycle_neighbors(cycle_c, v0)) != {v1, v2}:
        raise PreconditionError("v1 v0 v2 is not a subpath of C")
    if v0 not in cycle_cprime or v3 not in cycle_cprime:
        raise PreconditionError("v0 and v3 must lie on C'")
    if v3 not in _cycle_neighbors(cycle_cprime, v0):
        raise PreconditionError("v0 v3 is not an edge of C'")

    for disk, boundary, label in (
        (disk_d, (v0, v1, u, v3), "D"),
        (disk_dprime, (v0, v2, u1, v3), "D'"),
    ):
        report = classify(disk.facets)
        if report.verdict != VERDICT_DISK or not has_induced_boundary(disk.facets):
            raise PreconditionError(f"{label} is not a disk with induced boundary")
        if not cycles_equal_up_to_symmetry(report.boundary_cycles[0], boundary):
            raise PreconditionError(f"{label} boundary mismatch")
        if disk.interior != interior_vertices(disk.facets):
            raise PreconditionError(f"{label} interior set mismatch")

    w_set = {u, u1, v0, v1, v3}
    five = [
        ("V(C)-{v0,v1}", set(cycle_c) - {v0, v1}),
        ("V(C')-{v0,v3}", set(cycle_cprime) - {v0, v3}),
        ("interior(D)", set(disk_d.interior)),
        ("interior(D')", set(disk_dprime.interior)),
        ("W", w_set),
    ]
    for i in range(len(five)):
        for j in range(i + 1, len(five)):
            if five[i][1] & five[j][1]:
                raise PreconditionError(
                    f"disjointness violated: {five[i][0]} intersects {five[j][0]}"
                )

    all_cycle_edges = set(cycle_edges(cycle_c)) | set(cycle_edges(cycle_cprime))
    path_a = all_cycle_edges - {canon_pair(v0, v1), canon_pair(v0, v3)}
    path_a1 = all_cycle_edges - {canon_pair(v0, v2), canon_pair(v0, v3)}
    facets = set()
    for a, b in path_a:
        facets.add(canon_triple(u, a, b))
    for a, b in path_a1:
        facets.add(canon_triple(u1, a, b))
    facets |= disk_d.facets.facets
    facets |= disk_dprime.facets.facets

    union = Complex2(frozenset(facets))
    report = classify(union)
    if report.verdict != VERDICT_RP2:
        raise DefectError(f"assembly classified as {report.verdict}, expected RP2")
    return union


@dataclass(frozen=True)
class DensePairResult:
    ok: bool
    u: int
    u1: int
    graph: Optional[Graph]
    edge_count: int
    threshold: float


def find_dense_pair(h: Hypergraph3, edge_subset, d: int, strict: bool = False) -> DensePairResult:
    """Best common link of the sub-hypergraph restricted to the edge subset.

    Strict mode demands at least d n / 4 common-link edges; lenient mode
    only requires a non-empty link.
    """
    sub = Hypergraph3(h.n, frozenset(edge_subset))
    threshold = d * h.n / 4 if strict else 0.0
    if h.n < 2:
        return DensePairResult(False, -1, -1, None, 0, threshold)
    u, u1, count = best_pair(sub)
    g = pair_link(sub, u, u1)
    ok = len(g.edges) >= threshold if strict else len(g.edges) > 0
    return DensePairResult(ok, u, u1, g if ok else None, len(g.edges), threshold)


@dataclass(frozen=True)
class ApexResult:
    ok: bool
    subgraph: Optional[Graph]
    v0: int
    v1: int
    v3: int
    certified: bool
    estimates: tuple


def _trim_edges(g: Graph, target: int) -> Graph:
    """Drop edges touching low-degree endpoints first until target remain."""
    if len(g.edges) <= target:
        return g
    deg: dict[int, int] = {v: 0 for v in g.vertices}
    for a, b in g.edges:
        deg[a] += 1
        deg[b] += 1
    ranked = sorted(
        g.edges,
        key=lambda e: (min(deg[e[0]], deg[e[1]]), max(deg[e[0]], deg[e[1]]), e),
    )
    keep = ranked[len(g.edges) - target:]
    return Graph(g.vertices, frozenset(keep))


def _scan_for_hub(g: Graph, scan_vertices, config: SearchConfig):
    """Pick v0 with two usable incident edges among the scanned vertices.

    Certified edges (admissible at epsilon_prime, path level 2) win; in
    lenient mode the best uncertified pair by estimated probability is
    the fallback.
    """
    params = config.adm_params(APEX_PATH_COUNT, config.epsilon_prime)
    adj = g.adjacency()
    estimates: dict[tuple[int, int], AdmissibilityEstimate] = {}

    def estimate(e):
        if e not in estimates:
            estimates[e] = admissible(g, e, params, derive_seed(config.seed, "apex", *e))
        return estimates[e]

    best = None  # (min_p_hat, -v0, v0, v1, v3)
    for v0 in sorted(scan_vertices):
        nbrs = adj.get(v0, [])
        if len(nbrs) < 2:
            continue
        scored = []
        for w in nbrs:
            est = estimate(canon_pair(v0, w))
            scored.append((-est.p_hat, w, est))
        scored.sort()
        certified = [s for s in scored if s[2].verdict == VERDICT_ADMISSIBLE]
        if len(certified) >= 2:
            return v0, certified[0][1], certified[1][1], True, estimates
        if not config.strict:
            min_hat = min(-scored[0][0], -scored[1][0])
            key = (min_hat, -v0)
            if best is None or key > best[0]:
                best = (key, v0, scored[0][1], scored[1][1])
    if best is not None:
        return best[1], best[2], best[3], False, estimates
    return None


def find_apex(g: Graph, config: SearchConfig) -> ApexResult:
    """Degree-peeling recursion toward a low-degree hub with two usable edges.

    Small graphs are searched whole.  Larger ones are trimmed to about
    d n / 4 edges; when the high-degree side stays dense the recursion
    descends into it, otherwise the low-degree side is scanned.
    """
    d = config.d
    n = len(g.vertices)
    if n == 0 or not g.edges:
        return ApexResult(False, None, -1, -1, -1, False, ())
    if n <= d:
        hit = _scan_for_hub(g, g.vertices, config)
        if hit is None:
            return ApexResult(False, None, -1, -1, -1, False, ())
        v0, v1, v3, certified, _ = hit
        return ApexResult(True, g, v0, v1, v3, certified, ())

    target = -(-d * n // 4)  # ceil
    trimmed = _trim_edges(g, target)
    deg: dict[int, int] = {v: 0 for v in trimmed.vertices}
    for a, b in trimmed.edges:
        deg[a] += 1
        deg[b] += 1
    v_low = {v for v in trimmed.vertices if deg[v] <= d}
    v_high = trimmed.vertices - v_low
    m_high = sum(1 for a, b in trimmed.edges if a in v_high and b in v_high)
    if v_high and m_high > (d / 4) * len(v_high) and len(v_high) < n:
        return find_apex(trimmed.subgraph(v_high), config)
    hit = _scan_for_hub(trimmed, v_low, config)
    if hit is None:
        return ApexResult(False, None, -1, -1, -1, False, ())
    v0, v1, v3, certified, _ = hit
    return ApexResult(True, trimmed, v0, v1, v3, certified, ())


@dataclass
class SearchOutcome:
    certificate: Optional[Certificate]
    counters: dict[str, int] = field(default_factory=dict)
    attempts: int = 0

    @property
    def found(self) -> bool:
        return self.certificate is not None


def _sample_partition(vertices, rng) -> tuple[set, set, set, set]:
    parts: tuple[set, set, set, set] = (set(), set(), set(), set())
    cut1 = PARTITION_PROBS[0]
    cut2 = cut1 + PARTITION_PROBS[1]
    cut3 = cut2 + PARTITION_PROBS[2]
    for v in sorted(vertices):
        roll = rng.random()
        if roll < cut1:
            parts[0].add(v)
        elif roll < cut2:
            parts[1].add(v)
        elif roll < cut3:
            parts[2].add(v)
        else:
            parts[3].add(v)
    return parts


def find_rp2(h: Hypergraph3, config: SearchConfig, threads: int = 1) -> SearchOutcome:
    """The full certificate search; see the module docstring for the plan.

    Attempts are independent given their derived sub-seeds, so windows
    of them may run on a thread pool; the lowest successful attempt
    index wins either way and the outcome is identical for any thread
    count.
    """
    counters: dict[str, int] = {}

    def bump(key: str, by: int = 1):
        counters[key] = counters.get(key, 0) + by

    if config.retry_budget == 0:
        return SearchOutcome(None, counters, 0)

    edge_pool = h.edges
    if config.prefilter:
        kept = filter_semi_admissible(
            h, config.adm_params(config.k), derive_seed(config.seed, "prefilter"),
            config.prefilter_budget,
        )
        edge_pool = kept.kept
        bump("prefilter_evicted", len(h.edges) - len(edge_pool))

    dense = find_dense_pair(h, edge_pool, config.d, config.strict)
    if not dense.ok:
        bump("dense_pair")
        return SearchOutcome(None, counters, 0)
    u, u1, link = dense.u, dense.u1, dense.graph

    apex = find_apex(link, config)
    if not apex.ok:
        bump("apex")
        return SearchOutcome(None, counters, 0)
    hub_graph, v0, v1, v3 = apex.subgraph, apex.v0, apex.v1, apex.v3
    if not apex.certified:
        bump("apex_uncertified")
    w_set = frozenset((u, u1, v0, v1, v3))

    disk_params = config.adm_params(config.k)
    # the lazy pair checks run at level k + 2 in sampling mode: exact
    # tables at that level are prohibitively wide and, in lenient mode,
    # the verdict is advisory anyway
    semi_params = AdmissibilityParams(
        p=config.p, epsilon=config.epsilon, k=config.k + 2, r=config.r,
        mc_samples=config.mc_samples, exact_limit=0,
    )
    semi_cache: dict[tuple, tuple[bool, frozenset]] = {}

    def lazy_semi(e: Triple, f: Triple, label: str, local: dict) -> bool:
        key = (e, f)
        if key not in semi_cache:
            semi_cache[key] = semi_admissible(
                h, e, f, semi_params, derive_seed(config.seed, "semi", *e, *f)
            )
        ok, _witnesses = semi_cache[key]
        if not ok:
            if config.strict:
                local[f"semiadm_{label}"] = local.get(f"semiadm_{label}", 0) + 1
                return False
            local[f"semiadm_{label}_unverified"] = local.get(f"semiadm_{label}_unverified", 0) + 1
        return True

    hub_neighbors = hub_graph.neighbors(v0)

    def attempt(index: int):
        local: dict[str, int] = {}
        rng = local_rng(config.seed, "attempt", index)
        u_parts = _sample_partition(range(h.n), rng)

        v2_candidates = [w for w in hub_neighbors if w not in (v1, v3)]
        rng.shuffle(v2_candidates)
        chosen = None
        for v2 in v2_candidates:
            cyc = cycle_with_forced_second_vertex(
                hub_graph, v0, v1, v2, u_parts[0] - w_set, frozenset((v3,))
            )
            if cyc is not None:
                chosen = (v2, cyc)
                break
        if chosen is None:
            local["cycle_C"] = 1
            return None, local
        v2, cycle_c = chosen

        cycle_cp = cycle_with_edge(hub_graph, v0, v3, u_parts[1] - w_set, frozenset((v1,)))
        if cycle_cp is None:
            local["cycle_Cprime"] = 1
            return None, local

        if not lazy_semi(canon_triple(u, v0, v1), canon_triple(u, v0, v3), "D", local):
            return None, local
        disk_d = build_disk_from_pair(
            h, v1, u, v0, v3, u_parts[2] - w_set, w_set, disk_params,
            derive_seed(config.seed, "attempt", index, "diskD"),
        )
        if disk_d is None:
            local["disk_D"] = 1
            return None, local

        if not lazy_semi(canon_triple(u1, v0, v2), canon_triple(u1, v0, v3), "Dprime", local):
            return None, local
        disk_dp = build_disk_from_pair(
            h, v2, u1, v0, v3, u_parts[3] - w_set - {v2}, w_set, disk_params,
            derive_seed(config.seed, "attempt", index, "diskDprime"),
        )
        if disk_dp is None:
            local["disk_Dprime"] = 1
            return None, local

        union = assemble_rp2(u, u1, cycle_c, cycle_cp, disk_d, disk_dp, v0, v1, v2, v3)
        report = classify(union)
        cert = Certificate(
            facets=tuple(sorted(union.facets)),
            u=u, u1=u1, v0=v0, v1=v1, v2=v2, v3=v3,
            cycle_c=cycle_c, cycle_cprime=cycle_cp,
            disk_d=disk_d, disk_dprime=disk_dp,
            partition=tuple(tuple(sorted(part)) for part in u_parts),
            config=config, seed=config.seed, report=report,
        )
        ok, problems = verify_certificate(h, cert)
        if not ok:
            raise DefectError(f"fresh certificate failed verification: {problems}")
        return cert, local

    workers = max(1, threads)
    executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for window_start in range(0, config.retry_budget, workers):
            idxs = range(window_start, min(window_start + workers, config.retry_budget))
            if executor is None:
                outs = [attempt(i) for i in idxs]
            else:
                outs = list(executor.map(attempt, idxs))
            for i, (cert, local) in zip(idxs, outs):
                for key, val in local.items():
                    bump(key, val)
                if cert is not None:
                    return SearchOutcome(cert, counters, i + 1)
    finally:
        if executor is not None:
            executor.shutdown(wait=False)
    return SearchOutcome(None, counters, config.retry_budget)


def verify_certificate(h: Hypergraph3, cert: Certificate) -> tuple[bool, list[str]]:
    """Re-check every certificate invariant from scratch.

    Independent of the search path: facet membership, cycle validity in
    the common link, disk structure, the five-set disjointness, the
    partition containments, the facet union, and the final verdict.
    Failures are reported, never thrown.
    """
    problems: list[str] = []
    roles = (cert.u, cert.u1, cert.v0, cert.v1, cert.v2, cert.v3)
    if len(set(roles)) != len(roles):
        problems.append("roles not distinct")

    for t in cert.facets:
        if t not in h.edges:
            problems.append(f"facet not in hypergraph: {t}")
            break

    for label, cyc in (("C", cert.cycle_c), ("C'", cert.cycle_cprime)):
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            problems.append(f"{label} is not a simple cycle")
            continue
        for a, b in cycle_edges(cyc):
            if canon_triple(cert.u, a, b) not in h.edges or canon_triple(cert.u1, a, b) not in h.edges:
                problems.append(f"{label} edge {a},{b} missing from a link of u or u'")
                break

    if cert.v0 in cert.cycle_c and cert.v1 in cert.cycle_c and cert.v2 in cert.cycle_c:
        if set(_cycle_neighbors(cert.cycle_c, cert.v0)) != {cert.v1, cert.v2}:
            problems.append("v1 v0 v2 is not a subpath of C")
    else:
        problems.append("v0, v1, v2 not all on C")
    if cert.v0 in cert.cycle_cprime and cert.v3 in cert.cycle_cprime:
        if cert.v3 not in _cycle_neighbors(cert.cycle_cprime, cert.v0):
            problems.append("v0 v3 is not an edge of C'")
    else:
        problems.append("v0, v3 not all on C'")

    for label, disk, boundary in (
        ("D", cert.disk_d, (cert.v0, cert.v1, cert.u, cert.v3)),
        ("D'", cert.disk_dprime, (cert.v0, cert.v2, cert.u1, cert.v3)),
    ):
        for t in disk.facets.facets:
            if t not in h.edges:
                problems.append(f"{label} facet not in hypergraph: {t}")
                break
        report = classify(disk.facets)
        if report.verdict != VERDICT_DISK:
            problems.append(f"{label} is not a disk: {report.verdict}")
            continue
        if not has_induced_boundary(disk.facets):
            problems.append(f"{label} boundary not induced")
        if not cycles_equal_up_to_symmetry(report.boundary_cycles[0], boundary):
            problems.append(f"{label} boundary walk mismatch")
        if disk.interior != interior_vertices(disk.facets):
            problems.append(f"{label} interior mismatch")

    w_set = set(cert.w_set)
    five = [
        ("V(C)-{v0,v1}", set(cert.cycle_c) - {cert.v0, cert.v1}),
        ("V(C')-{v0,v3}", set(cert.cycle_cprime) - {cert.v0, cert.v3}),
        ("interior(D)", set(cert.disk_d.interior)),
        ("interior(D')", set(cert.disk_dprime.interior)),
        ("W", w_set),
    ]
    for i in range(len(five)):
        for j in range(i + 1, len(five)):
            if five[i][1] & five[j][1]:
                problems.append(f"{five[i][0]} intersects {five[j][0]}")

    parts = [set(p) for p in cert.partition]
    if parts and len(parts) == 4:
        containments = (
            ("V(C)-{v0,v1}", five[0][1], parts[0]),
            ("V(C')-{v0,v3}", five[1][1], parts[1]),
            ("interior(D)", five[2][1], parts[2]),
            ("interior(D')", five[3][1], parts[3]),
        )
        for label, subset, part in containments:
            if not subset <= (part - w_set):
                problems.append(f"{label} escapes its partition class")

    expected = set()
    all_c_edges = set(cycle_edges(cert.cycle_c)) | set(cycle_edges(cert.cycle_cprime))
    for a, b in all_c_edges - {canon_pair(cert.v0, cert.v1), canon_pair(cert.v0, cert.v3)}:
        expected.add(canon_triple(cert.u, a, b))
    for a, b in all_c_edges - {canon_pair(cert.v0, cert.v2), canon_pair(cert.v0, cert.v3)}:
        expected.add(canon_triple(cert.u1, a, b))
    expected |= cert.disk_d.facets.facets
    expected |= cert.disk_dprime.facets.facets
    if expected != set(cert.facets):
        problems.append("assembled facet set mismatch")

    report = classify(Complex2(frozenset(cert.facets)))
    if report.verdict != VERDICT_RP2:
        problems.append(f"classifier verdict is {report.verdict}, expected RP2")

    return not problems, problems
