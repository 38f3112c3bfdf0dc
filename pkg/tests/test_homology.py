import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mct.errors import NotPrimeError
from mct.fixtures import RP2_FACETS
from mct.homology import (
    _ChainData,
    cone,
    euler_characteristic,
    is_prime,
    rank_mod_p,
    rank_mod_p_sparse,
    reduced_homology_dims,
    relative_homology_dims,
)
from mct.lattice import SimplicialComplex
from oracle_values import RP2_BOUNDARY_RANK_2_F2, RP2_BOUNDARY_RANK_2_F3

RP2 = SimplicialComplex.from_facets(RP2_FACETS)


def test_primes():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(NotPrimeError):
        rank_mod_p([[1]], 4)


def test_rp2_boundary_ranks():
    assert _ChainData(RP2.faces, RP2.vertices, 2).boundary_rank(2) == RP2_BOUNDARY_RANK_2_F2
    assert _ChainData(RP2.faces, RP2.vertices, 3).boundary_rank(2) == RP2_BOUNDARY_RANK_2_F3


def test_rp2_homology_depends_on_characteristic():
    h2 = reduced_homology_dims(RP2, 2)
    h3 = reduced_homology_dims(RP2, 3)
    assert {k: v for k, v in h2.items() if v} == {1: 1, 2: 1}
    assert not any(h3.values())


def test_spheres_and_degenerate_complexes():
    S1 = SimplicialComplex.from_facets([(0, 1), (1, 2), (0, 2)])
    assert {k: v for k, v in reduced_homology_dims(S1, 5).items() if v} == {1: 1}
    assert reduced_homology_dims(SimplicialComplex.empty_face_only(), 2) == {-1: 1}
    assert reduced_homology_dims(SimplicialComplex.void(), 2) == {}


def test_cone_is_acyclic():
    C = cone(RP2, 99)
    assert not any(reduced_homology_dims(C, 2).values())


def test_relative_homology_of_simplex_mod_boundary():
    simplex = SimplicialComplex.from_facets([(0, 1, 2)])
    boundary = SimplicialComplex.from_facets([(0, 1), (1, 2), (0, 2)])
    h = relative_homology_dims(simplex, boundary, 3)
    assert {k: v for k, v in h.items() if v} == {2: 1}


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5),
       st.sampled_from([2, 3, 5, 7]))
def test_dense_and_sparse_rank_agree(rows, p):
    A = np.array(rows, dtype=np.int64)
    sparse = [{c: int(v) for c, v in enumerate(r) if v} for r in rows]
    assert rank_mod_p(A, p) == rank_mod_p_sparse(sparse, p)
    assert rank_mod_p(A, p) <= np.linalg.matrix_rank(A)


@settings(max_examples=40)
@given(st.lists(st.sets(st.integers(0, 5), min_size=1, max_size=4), min_size=1, max_size=6),
       st.sampled_from([2, 3]))
def test_euler_characteristic_matches_homology(facets, p):
    K = SimplicialComplex.from_facets(facets)
    h = reduced_homology_dims(K, p)
    assert euler_characteristic(K) == sum((-1) ** k * v for k, v in h.items())
