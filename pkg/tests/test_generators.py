import json

import numpy as np
import pytest

from mct.errors import SizeLimitError
from mct.fixtures import koszul
from mct.generators import (
    GeneratorSet,
    Polynomial,
    ara_bounds_report,
    generators_from_heights,
    generators_from_rooting,
    normalize_generator,
    verify_radical_equality,
)
from mct.monomials import Monomial, parse_ideal
from conftest import random_ideals


def test_normalize():
    assert normalize_generator(Monomial((0, 1, 1)), 4) == Monomial((0, 3, 1))
    with pytest.raises(ValueError):
        normalize_generator(Monomial((1, 1)), 1)


def test_triangle_generators(triangle):
    R = generators_from_rooting(triangle)
    assert R.to_json()["readable"] == ["x*y + x*z + y*z", "x^2*y*z + x*y^2*z"]
    H = generators_from_heights(triangle)
    assert H.to_json()["readable"] == ["x*y + x*z + y*z", "x*y*z"]


def test_koszul_heights_are_elementary_symmetric():
    H = generators_from_heights(koszul(2))
    assert [len(p.terms) for p in H.polys] == [3, 3, 1]
    assert all(p.has_unit_coefficients() and p.is_homogeneous() for p in H.polys)


def test_reisner_generator_degrees(reisner):
    R = generators_from_rooting(reisner)
    H = generators_from_heights(reisner)
    assert [p.degree for p in R.polys] == [3, 6, 9, 12]
    assert [p.degree for p in H.polys] == [3, 4, 5, 6]
    assert all(p.is_homogeneous() for p in R.polys + H.polys)


def test_verify_detects_wrong_generators(triangle):
    wrong = [Polynomial.sum_of([Monomial((1, 1, 0)), Monomial((0, 1, 1))], 3)]
    rep = verify_radical_equality(triangle, wrong, (2, 3))
    assert not rep.ok
    assert rep.counterexample is not None
    pt = rep.counterexample["point"]
    assert len(pt) == 3


def test_verify_detects_non_certified_term(triangle):
    # x^2 + y^2 + z^2 ... over F_2 vanishes off V(I); the x^2 term is not in sqrt(I)
    bad = [Polynomial.sum_of([Monomial((2, 0, 0)), Monomial((0, 2, 0)), Monomial((0, 0, 2))], 3)]
    rep = verify_radical_equality(triangle, bad, (3,))
    assert not rep.subset_certified


def test_verify_point_cap(reisner):
    H = generators_from_heights(reisner)
    with pytest.raises(SizeLimitError):
        verify_radical_equality(reisner, H, (5,), cap=1000)


@pytest.mark.parametrize("I", random_ideals(51, 12, max_vars=4), ids=str)
def test_both_constructions_random(I):
    for G in (generators_from_rooting(I), generators_from_heights(I)):
        assert verify_radical_equality(I, G, (2, 3)).ok


def test_non_square_free_generators():
    I = parse_ideal("x^2*y, y^3, x*z^2")
    for G in (generators_from_rooting(I), generators_from_heights(I)):
        assert verify_radical_equality(I, G, (2, 3, 5)).ok


def test_json_round_trip(reisner):
    G = generators_from_rooting(reisner)
    back = GeneratorSet.from_json(json.loads(json.dumps(G.to_json())))
    assert back.polys == G.polys and back.variables == G.variables


def test_evaluate_mod():
    p = Polynomial.sum_of([Monomial((2, 1)), Monomial((0, 1))], 2)
    pts = np.array([[1, 1], [2, 1], [2, 2]])
    assert p.evaluate_mod(pts, 3).tolist() == [2, 2, 1]


def test_ara_bounds(triangle, bipartite6):
    rep = ara_bounds_report(triangle)
    assert rep["consistent"]
    assert rep["upper_rooting"] == rep["upper_height"] == 2
    rep = ara_bounds_report(bipartite6)
    assert rep["consistent"] and rep["upper_rooting"] == 3
