import random

import pytest

from mct import fixtures
from mct.config import Config
from mct.generators import Polynomial, verify_radical_equality
from mct.monomials import Monomial, MonomialIdeal, parse_ideal
import oracle_values as ov


def test_reisner_self_validates(reisner):
    assert fixtures.validate_reisner() == []
    assert [g.format(reisner.variables) for g in reisner.generators] == ov.REISNER_GENERATORS


def test_tampered_reisner_fails_validation(reisner):
    tampered = MonomialIdeal(reisner.variables, reisner.generators[:-1])
    failures = fixtures.validate_reisner(tampered)
    assert failures and "10 cubic" in failures[0]


def test_colon_by_x0_is_five_cycle(reisner):
    # (I : x0) should have radical (x1x2, x5x1 + x3x4, x4x5 + x2x3)
    x0 = reisner.index("x0")
    colon = MonomialIdeal(
        reisner.variables,
        tuple(Monomial(tuple(0 if k == x0 else e for k, e in enumerate(g.exponents))) for g in reisner.generators),
    )
    assert str(colon) == "(x1*x2, x1*x5, x2*x3, x3*x4, x4*x5)"
    names = list(reisner.variables)

    def poly(text):
        terms = [parse_ideal(t, names).generators[0] for t in text.split("+")]
        return Polynomial.sum_of(terms, 6)

    polys = [poly("x1*x2"), poly("x5*x1 + x3*x4"), poly("x4*x5 + x2*x3")]
    assert verify_radical_equality(colon, polys, (2, 3, 5)).ok


def test_registry():
    assert set(fixtures.fixture_names()) >= {"reisner", "bipartite6", "z1", "triangle", "principal", "koszul(n)"}
    assert fixtures.get_fixture("koszul(3)").nvars == 4
    assert fixtures.get_fixture("nope") is None


def test_random_ideals_are_reproducible():
    a = [fixtures.random_squarefree_ideal(random.Random(5)) for _ in range(3)]
    b = [fixtures.random_squarefree_ideal(random.Random(5)) for _ in range(3)]
    assert a == b
    I = fixtures.random_monomial_ideal(random.Random(2))
    assert not I.is_zero()


def test_config_env(monkeypatch):
    monkeypatch.setenv("MCT_SEED", "17")
    assert Config.from_env().seed == 17
    assert Config.from_env(seed=3).seed == 3
    monkeypatch.delenv("MCT_SEED")
    assert Config.from_env().seed == 0
