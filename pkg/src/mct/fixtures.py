"""Built-in ideals and seeded random ideal generators."""

from __future__ import annotations

import random
import re
from itertools import combinations

from .monomials import Monomial, MonomialIdeal, intersect

SIX = tuple(f"x{i}" for i in range(6))

# 6-vertex minimal triangulation of RP^2: the cone from vertex 0 over the
# pentagon 1-3-5-2-4 plus the five triangles {i, i+1, i+2} (mod 5, on 1..5).
# In this labelling (I : x0) is the edge ideal of the 5-cycle 1-2-3-4-5.
RP2_FACETS = (
    (0, 1, 3), (0, 3, 5), (0, 2, 5), (0, 2, 4), (0, 1, 4),
    (1, 2, 3), (2, 3, 4), (3, 4, 5), (1, 4, 5), (1, 2, 5),
)

BIPARTITE6 = "x0*x1, x2*x3, x4*x5, x0*x3, x0*x5, x2*x5"


class FixtureValidationError(Exception):
    """A built-in fixture contradicts a value it is pinned to."""


def stanley_reisner_ideal(facets, nvars: int, variables=None) -> MonomialIdeal:
    """Ideal of minimal non-faces of the complex generated by ``facets``."""
    faces = {frozenset(c) for F in facets for k in range(len(F) + 1) for c in combinations(F, k)}
    nonfaces = []
    for k in range(1, nvars + 1):
        for S in combinations(range(nvars), k):
            S = frozenset(S)
            if S not in faces and all(S - {v} in faces for v in S):
                nonfaces.append(Monomial.from_support(S, nvars))
    names = tuple(variables) if variables else tuple(f"x{i}" for i in range(nvars))
    return MonomialIdeal(names, tuple(nonfaces))


def reisner() -> MonomialIdeal:
    return stanley_reisner_ideal(RP2_FACETS, 6, SIX)


def bipartite6() -> MonomialIdeal:
    from .monomials import parse_ideal

    return parse_ideal(BIPARTITE6, SIX)


def z1() -> MonomialIdeal:
    """Union of the 2-dimensional coordinate subspaces of P^5."""
    comps = [
        MonomialIdeal(SIX, tuple(Monomial.from_support({v}, 6) for v in T))
        for T in combinations(range(6), 3)
    ]
    out = comps[0]
    for c in comps[1:]:
        out = intersect(out, c)
    return out


def koszul(n: int) -> MonomialIdeal:
    """The maximal ideal (x0, ..., xn) of a polynomial ring in n + 1 variables."""
    names = tuple(f"x{i}" for i in range(n + 1))
    return MonomialIdeal(names, tuple(Monomial.from_support({i}, n + 1) for i in range(n + 1)))


def triangle() -> MonomialIdeal:
    from .monomials import parse_ideal

    return parse_ideal("x*y, x*z, y*z", ("x", "y", "z"))


def principal() -> MonomialIdeal:
    from .monomials import parse_ideal

    return parse_ideal("x0*x1", ("x0", "x1"))


FIXTURES = {
    "reisner": reisner,
    "bipartite6": bipartite6,
    "z1": z1,
    "triangle": triangle,
    "principal": principal,
}

_KOSZUL_RE = re.compile(r"koszul\((\d+)\)$")


def fixture_names() -> list[str]:
    return sorted(FIXTURES) + ["koszul(n)"]


def get_fixture(name: str) -> MonomialIdeal | None:
    if name in FIXTURES:
        return FIXTURES[name]()
    m = _KOSZUL_RE.match(name)
    if m:
        return koszul(int(m.group(1)))
    return None


def validate_reisner(I: MonomialIdeal | None = None) -> list[str]:
    """Check the Reisner fixture against its four pinned facts; returns the failures."""
    from .betti import betti_gpw, extremal_betti
    from .monomials import ideal_height

    I = I if I is not None else reisner()
    failures = []
    if len(I.generators) != 10 or any(g.degree != 3 for g in I.generators):
        failures.append("expected 10 cubic generators")
    if ideal_height(I) != 3:
        failures.append("expected height I = 3")
    if betti_gpw(I, 2, "quotient").projdim() != 4:
        failures.append("expected projdim R/I = 4 over F_2")
    if extremal_betti(betti_gpw(I, 5, "ideal")) != {(2, 5)}:
        failures.append("expected a single extremal Betti number beta_{2,5}(I) over F_5")
    return failures


def random_squarefree_ideal(rng: random.Random, max_vars: int = 5, max_gens: int = 6) -> MonomialIdeal:
    """Random proper nonzero square-free ideal with 2..max_vars variables."""
    nv = rng.randint(2, max_vars)
    k = rng.randint(1, max_gens)
    gens = []
    for _ in range(k):
        size = rng.randint(1, nv)
        gens.append(Monomial.from_support(rng.sample(range(nv), size), nv))
    return MonomialIdeal(tuple(f"x{i}" for i in range(nv)), tuple(gens))


def random_monomial_ideal(
    rng: random.Random, max_vars: int = 5, max_gens: int = 6, max_exp: int = 3
) -> MonomialIdeal:
    nv = rng.randint(2, max_vars)
    k = rng.randint(1, max_gens)
    gens = []
    for _ in range(k):
        exps = [0] * nv
        for v in rng.sample(range(nv), rng.randint(1, nv)):
            exps[v] = rng.randint(1, max_exp)
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(tuple(f"x{i}" for i in range(nv)), tuple(gens))
