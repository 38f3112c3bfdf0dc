import json

import pytest

from mct.errors import LatticeConsistencyError, SizeLimitError
from mct.fixtures import koszul
from mct.lattice import (
    IntersectionLattice,
    LcmLattice,
    Poset,
    SimplicialComplex,
    duality_mu,
    open_interval,
    order_complex,
)
from mct.monomials import alexander_dual, parse_ideal
from conftest import random_ideals
from oracle_values import REISNER_LATTICE_HEIGHT, REISNER_LATTICE_SIZE


def test_reisner_lattice_shape(reisner):
    L = LcmLattice(reisner)
    assert len(L) == REISNER_LATTICE_SIZE
    assert L.lattice_height == REISNER_LATTICE_HEIGHT
    assert L.elements[L.bottom].is_one()
    assert sorted(L.elements[a] for a in L.atoms) == sorted(reisner.generators)


def test_boolean_lattice():
    L = LcmLattice(koszul(2))
    assert len(L) == 8
    assert L.lattice_height == 3


@pytest.mark.parametrize("I", random_ideals(11, 25), ids=str)
def test_lcm_lattice_is_a_lattice(I):
    L = LcmLattice(I)
    for i in range(len(L)):
        for j in range(len(L)):
            m = L.elements[i].lcm(L.elements[j])
            assert m in L.index
            k = L.index[m]
            assert L.leq(i, k) and L.leq(j, k)
    assert L.leq(L.bottom, L.top)
    assert all(L.leq(k, L.top) for k in range(len(L)))


def test_cap():
    with pytest.raises(SizeLimitError):
        LcmLattice(koszul(5), cap=10)


def test_poset_axioms_checked():
    with pytest.raises(LatticeConsistencyError):
        Poset([0, 1], lambda a, b: True)


def test_open_interval_and_order_complex(triangle):
    L = LcmLattice(triangle)
    P = open_interval(L, L.bottom, L.top)
    assert len(P) == 3
    K = order_complex(P)
    assert K.dimension == 0
    assert len(K.faces_of_dim(0)) == 3


def test_simplicial_complex_basics():
    K = SimplicialComplex.from_facets([(0, 1, 2), (2, 3)])
    assert K.dimension == 2
    assert K.is_closed()
    assert K.f_vector() == {-1: 1, 0: 4, 1: 4, 2: 1}
    assert set(K.facets) == {frozenset({0, 1, 2}), frozenset({2, 3})}
    assert K.is_cone_with_apex(2)
    assert not K.is_cone_with_apex(0)
    assert SimplicialComplex.void().dimension == -2
    assert SimplicialComplex.empty_face_only().dimension == -1


@pytest.mark.parametrize("I", random_ideals(12, 20), ids=str)
def test_duality_between_intersection_and_dual_lcm_lattice(I):
    LA = IntersectionLattice(I)
    mu = duality_mu(LA, LcmLattice(alexander_dual(I)))
    assert len(mu) == len(LA)


def test_duality_failure_detected():
    I = parse_ideal("x*y, z")
    LA = IntersectionLattice(I)
    with pytest.raises(LatticeConsistencyError):
        duality_mu(LA, LcmLattice(I))


def test_json_and_dot(triangle):
    L = LcmLattice(triangle)
    data = json.loads(json.dumps(L.to_json()))
    assert data["elements"][0] == "1"
    assert len(data["covers"]) == 6
    assert L.to_dot().startswith("digraph")


def test_non_square_free_lattice():
    I = parse_ideal("x^2, x*y, y^3")
    L = LcmLattice(I)
    assert {L.label(k) for k in range(len(L))} == {"1", "x^2", "x*y", "y^3", "x^2*y", "x*y^3", "x^2*y^3"}
