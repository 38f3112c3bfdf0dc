import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mct.errors import ParseError, UnknownVariableError
from mct.monomials import (
    Monomial,
    MonomialIdeal,
    alexander_dual,
    ideal_height,
    intersect,
    minimal_primes,
    minimalize,
    parse_ideal,
    restrict_ideal,
)

exps3 = st.tuples(*[st.integers(0, 4)] * 3)


@given(exps3, exps3)
def test_lcm_gcd_lattice_laws(a, b):
    m, n = Monomial(a), Monomial(b)
    assert m.divides(m.lcm(n)) and n.divides(m.lcm(n))
    assert m.gcd(n).divides(m) and m.gcd(n).divides(n)
    assert (m.lcm(n) * m.gcd(n)) == m * n


@given(st.lists(exps3, min_size=1, max_size=8))
def test_minimalize_is_antichain_generating_same_ideal(gens):
    ms = [Monomial(e) for e in gens]
    mins = minimalize(ms)
    for a in mins:
        assert not any(b != a and b.divides(a) for b in mins)
    for m in ms:
        assert any(g.divides(m) for g in mins)


def test_parse_round_trip():
    I = parse_ideal("x0*x1^2, x2\n x1*x0^3")
    assert I.variables == ("x0", "x1", "x2")
    assert parse_ideal(I.format(), I.variables) == I


def test_parse_natural_sort():
    I = parse_ideal("x10*x2, x1")
    assert I.variables == ("x1", "x2", "x10")


def test_parse_juxtaposition_with_declared_names():
    I = parse_ideal("x0x1, x2x3", ["x0", "x1", "x2", "x3"])
    assert str(I) == "(x0*x1, x2*x3)"


def test_parse_unit_and_errors():
    assert parse_ideal("1, x", ["x"]).is_unit()
    with pytest.raises(ParseError) as e:
        parse_ideal("x^")
    assert e.value.position is not None
    with pytest.raises(ParseError):
        parse_ideal("")
    with pytest.raises(UnknownVariableError):
        parse_ideal("x*w", ["x", "y"])


def test_minimal_primes_triangle(triangle):
    assert minimal_primes(triangle) == {frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})}


def test_bipartite6_has_four_minimal_primes(bipartite6):
    from oracle_values import BIPARTITE6_MIN_PRIMES

    assert {frozenset(P) for P in minimal_primes(bipartite6)} == {frozenset(P) for P in BIPARTITE6_MIN_PRIMES}


def test_alexander_duality_is_involutive(reisner, bipartite6, triangle):
    for I in (reisner, bipartite6, triangle):
        assert alexander_dual(alexander_dual(I)) == I


def test_reisner_height(reisner):
    assert ideal_height(reisner) == 3


def test_intersect_and_restrict():
    x, y = ("x", "y")
    I = parse_ideal("x", [x, y])
    J = parse_ideal("y", [x, y])
    assert str(intersect(I, J)) == "(x*y)"
    K = parse_ideal("x*y, y^2, x^3", [x, y])
    assert str(restrict_ideal(K, "y")) == "(x^3)"
    assert str(restrict_ideal(K, 0)) == "(y^2)"


@settings(max_examples=40)
@given(st.lists(st.sets(st.integers(0, 4), min_size=1, max_size=3), min_size=1, max_size=5))
def test_minimal_primes_are_minimal_covers(edges):
    I = MonomialIdeal(tuple(f"x{i}" for i in range(5)), tuple(Monomial.from_support(e, 5) for e in edges))
    primes = minimal_primes(I)
    for P in primes:
        assert all(g.support & P for g in I.generators)
        for v in P:
            assert not all(g.support & (P - {v}) for g in I.generators)


def test_radical():
    I = parse_ideal("x^2*y, z^3", ["x", "y", "z"])
    assert str(I.radical()) == "(z, x*y)"
    assert I.radical().square_free
