"""trisurf: find and verify triangulated surfaces in 3-uniform hypergraphs."""

from .admissibility import (
    AdmissibilityEstimate,
    AdmissibilityParams,
    admissible,
    admissible_edge_fraction,
    admissible_exact,
    admissible_mc,
    filter_semi_admissible,
    semi_admissible,
)
from .builder import (
    Certificate,
    DiskPatch,
    SearchConfig,
    SearchOutcome,
    SphereCertificate,
    assemble_rp2,
    build_disk_from_pair,
    build_double_pyramid,
    find_apex,
    find_dense_pair,
    find_rp2,
    find_sphere,
    verify_certificate,
)
from .errors import (
    CapacityError,
    DefectError,
    InputError,
    ParseError,
    PreconditionError,
)
from .generators import (
    Fixture,
    FIXTURE_NAMES,
    fixture,
    planted_rp2_instance,
    planted_semi_admissible,
    random_hypergraph,
)
from .hypergraph import (
    Graph,
    Hypergraph3,
    best_pair,
    codegree,
    link_graph,
    pair_link,
    parse_graph,
    parse_hypergraph,
    serialize_graph,
    serialize_hypergraph,
)
from .paths import (
    PathSystem,
    cycle_with_edge,
    cycle_with_forced_second_vertex,
    disjoint_paths,
    path_through,
)
from .surfaces import (
    Complex2,
    SurfaceReport,
    classify,
    euler_characteristic,
    has_induced_boundary,
    interior_vertices,
)

__version__ = "0.1.0"
