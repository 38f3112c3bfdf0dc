from itertools import permutations

import pytest

from mct.errors import InvalidRootingMapError, SizeLimitError
from mct.fixtures import koszul
from mct.lattice import LcmLattice
from mct.rooting import (
    RootingMap,
    candidate_count,
    enumerate_rooting_maps,
    explore,
    is_rooting_map,
    min_rooting_dim,
    restriction_check,
    rooting_complex,
    rooting_from_order,
)
from conftest import random_ideals
import oracle_values as ov


def test_counts(triangle, bipartite6):
    assert len(list(enumerate_rooting_maps(LcmLattice(triangle)))) == ov.TRIANGLE_ROOTING_MAPS
    assert len(list(enumerate_rooting_maps(LcmLattice(koszul(2))))) == ov.BOOLEAN3_ROOTING_MAPS
    assert len(list(enumerate_rooting_maps(LcmLattice(bipartite6), cap=10**10))) == ov.BIPARTITE6_ROOTING_MAPS


def test_enumeration_is_duplicate_free_and_valid(bipartite6):
    L = LcmLattice(bipartite6)
    maps = [r.assignment for r in enumerate_rooting_maps(L, cap=10**10)]
    assert len(set(maps)) == len(maps)
    assert all(is_rooting_map(L, m) for m in maps)


def test_order_maps_are_rooting_maps(reisner):
    L = LcmLattice(reisner)
    rho = rooting_from_order(L, L.atoms)
    assert is_rooting_map(L, rho)


def test_cap(reisner):
    with pytest.raises(SizeLimitError):
        next(enumerate_rooting_maps(LcmLattice(reisner), cap=1000))


def test_invalid_map_rejected(triangle):
    L = LcmLattice(triangle)
    good = rooting_from_order(L, L.atoms)
    bad = list(good.assignment)
    a, b = L.atoms[0], L.atoms[1]
    bad[b] = a  # an atom must root itself
    with pytest.raises(InvalidRootingMapError):
        rooting_complex(L, RootingMap(L, tuple(bad)))


def test_triangle_complex(triangle):
    L = LcmLattice(triangle)
    rho = rooting_from_order(L, L.atoms)
    G = rooting_complex(L, rho)
    a0, a1, a2 = L.atoms
    assert set(G.complex.facets) == {frozenset({a0, a1}), frozenset({a0, a2})}
    assert G.apex == a0 and G.is_cone()
    assert G.dimension == 1


def test_triangle_minimality():
    # three pairwise lcms coincide, so no rooting complex on the triangle is a simplex or a point
    from mct.fixtures import triangle

    L = LcmLattice(triangle())
    assert {rooting_complex(L, r).dimension for r in enumerate_rooting_maps(L)} == {1}


@pytest.mark.parametrize("I", random_ideals(41, 20), ids=str)
def test_cone_and_restriction_random(I):
    L = LcmLattice(I)
    for order in list(permutations(L.atoms))[:6]:
        rho = rooting_from_order(L, order)
        G = rooting_complex(L, rho)
        assert G.is_cone() and G.apex == rho(L.top)
        for v in I.variables:
            assert restriction_check(I, rho, v)


def test_min_rooting_dim_modes(bipartite6):
    L = LcmLattice(bipartite6)
    a = min_rooting_dim(L, "all")
    o = min_rooting_dim(L, "orders")
    assert a.exhaustive and o.exhaustive
    assert a.min_dim == o.min_dim == 2
    assert sum(a.dims.values()) == ov.BIPARTITE6_ROOTING_MAPS
    with pytest.raises(ValueError):
        min_rooting_dim(L, "some")


def test_explore_budget_flags_non_exhaustive(reisner):
    L = LcmLattice(reisner)
    res = explore(L, budget=10**4, samples=50, seed=1, stream_limit=200)
    assert not res["exhaustive_all"] and not res["exhaustive_orders"]
    assert res["maps_examined_all"] == 200
    again = explore(L, budget=10**4, samples=50, seed=1, stream_limit=200)
    assert res == again


def test_principal_has_one_map():
    from mct.fixtures import principal

    L = LcmLattice(principal())
    assert len(list(enumerate_rooting_maps(L))) == 1
    assert min_rooting_dim(L, "all").min_dim == min_rooting_dim(L, "orders").min_dim == 0


def test_candidate_count(triangle):
    # three atoms (1 choice each) and the top (3 choices)
    assert candidate_count(LcmLattice(triangle)) == 3
