import itertools
import math

import pytest

from trisurf.builder import assemble_rp2
from trisurf.errors import InputError
from trisurf.generators import (
    FIXTURE_NAMES,
    fixture,
    planted_dense_pair,
    planted_rp2_instance,
    planted_semi_admissible,
    random_hypergraph,
    verify_fixture,
)
from trisurf.hypergraph import pair_link
from trisurf.surfaces import classify, interior_vertices


def test_every_fixture_matches_expected_verdict():
    for name in FIXTURE_NAMES:
        assert verify_fixture(fixture(name)), name


def test_fixture_unknown_name():
    with pytest.raises(InputError):
        fixture("not_a_fixture")


def test_fixture_double_pyramid_sizes():
    fx = fixture("double_pyramid_12")
    assert len(fx.facets.facets) == 24
    assert classify(fx.facets).verdict == "Sphere"
    with pytest.raises(InputError):
        fixture("double_pyramid_2")


def test_random_hypergraph_complete_and_empty():
    full = random_hypergraph(5, math.comb(5, 3), seed=1)
    assert full.edges == frozenset(itertools.combinations(range(5), 3))
    assert random_hypergraph(10, 0, seed=1).edges == frozenset()


def test_random_hypergraph_exact_count_and_determinism():
    a = random_hypergraph(20, 100, seed=7)
    b = random_hypergraph(20, 100, seed=7)
    c = random_hypergraph(20, 100, seed=8)
    assert len(a.edges) == 100
    assert a == b
    assert a != c
    for t in a.edges:
        assert len(set(t)) == 3 and max(t) < 20


def test_random_hypergraph_m_too_large():
    with pytest.raises(InputError):
        random_hypergraph(10, 999, seed=0)


def test_planted_rp2_assembles_for_parameter_grid():
    for (lc, lcp, s, t) in [(4, 3, 1, 1), (12, 10, 5, 5), (5, 4, 1, 1)]:
        inst = planted_rp2_instance(lc, lcp, s, t, seed=13)
        rep = classify(
            assemble_rp2(
                inst.u, inst.u1, inst.cycle_c, inst.cycle_cprime,
                inst.disk_d, inst.disk_dprime, inst.v0, inst.v1, inst.v2, inst.v3,
            )
        )
        assert rep.verdict == "RP2" and rep.chi == 1


def test_planted_rp2_precondition_audit():
    """The roles satisfy the gluing hypotheses by direct set computation."""
    inst = planted_rp2_instance(7, 5, 2, 3, seed=21)
    five = [
        set(inst.cycle_c) - {inst.v0, inst.v1},
        set(inst.cycle_cprime) - {inst.v0, inst.v3},
        set(inst.disk_d.interior),
        set(inst.disk_dprime.interior),
        {inst.u, inst.u1, inst.v0, inst.v1, inst.v3},
    ]
    for i in range(5):
        for j in range(i + 1, 5):
            assert not five[i] & five[j]
    assert inst.disk_d.interior == interior_vertices(inst.disk_d.facets)
    assert inst.disk_dprime.interior == interior_vertices(inst.disk_dprime.facets)
    # hypergraph contains exactly the assembly facets
    union = assemble_rp2(
        inst.u, inst.u1, inst.cycle_c, inst.cycle_cprime,
        inst.disk_d, inst.disk_dprime, inst.v0, inst.v1, inst.v2, inst.v3,
    )
    assert inst.hypergraph.edges == union.facets


def test_planted_rp2_size_constraints():
    with pytest.raises(InputError):
        planted_rp2_instance(3, 3, 1, 1, seed=0)
    with pytest.raises(InputError):
        planted_rp2_instance(4, 2, 1, 1, seed=0)
    with pytest.raises(InputError):
        planted_rp2_instance(4, 3, 0, 1, seed=0)


def test_planted_semi_admissible_structure():
    inst = planted_semi_admissible(r=4, k=2, seed=5)
    h = inst.hypergraph
    assert len(inst.witnesses) == 4
    assert inst.fan_size == 4
    # each witness carries fan_size disjoint length-2 paths in both links
    y, z = sorted((inst.y, inst.z))
    for w in inst.witnesses:
        for a, b in ((inst.x, w), (w, inst.x1)):
            link = pair_link(h, a, b)
            from trisurf.paths import disjoint_paths

            assert disjoint_paths(link, y, z, link.vertices - {y, z}, 4) is not None


def test_planted_semi_admissible_fan_override():
    inst = planted_semi_admissible(r=2, k=1, seed=5, fan_size=6)
    assert inst.fan_size == 6
    assert inst.hypergraph.n == 4 + 2 + 2 * 2 * 6


def test_planted_dense_pair_roles_in_range():
    h, u, u1 = planted_dense_pair(10, link_edges=20, noise=5, seed=2)
    assert u != u1
    assert len(pair_link(h, u, u1).edges) == 20
