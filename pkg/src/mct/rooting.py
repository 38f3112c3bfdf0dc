"""Rooting maps and rooting complexes on lcm-lattices.

A rooting map sends every non-bottom lattice element ``m`` to an atom
dividing it and is constant on each interval ``[rho(m), m]``.  A set of
atoms ``G`` is unbroken when ``rho(lcm G)`` belongs to ``G``; the rooting
complex collects the atom sets all of whose subsets are unbroken.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .errors import InvalidRootingMapError, LatticeConsistencyError, SizeLimitError
from .lattice import LcmLattice, SimplicialComplex
from .monomials import Monomial, MonomialIdeal, restrict_ideal

DEFAULT_ENUMERATION_CAP = 10**6
DEFAULT_ORDER_SAMPLES = 10_000
DEFAULT_STREAM_LIMIT = 20_000
EXHAUSTIVE_ORDER_ATOMS = 8


@dataclass(frozen=True)
class RootingMap:
    lattice: LcmLattice
    assignment: tuple[int | None, ...]  # element index -> atom index; None at the bottom

    def __call__(self, m: int) -> int:
        a = self.assignment[m]
        if a is None:
            raise KeyError("rooting maps are not defined at the bottom element")
        return a

    def describe(self) -> dict[str, str]:
        L = self.lattice
        return {L.label(m): L.label(a) for m, a in enumerate(self.assignment) if a is not None}


def rooting_from_order(L: LcmLattice, order: Sequence[int | Monomial]) -> RootingMap:
    """rho(m) is the first atom in ``order`` that divides ``m``."""
    idx = [L.index[a] if isinstance(a, Monomial) else a for a in order]
    if sorted(idx) != sorted(L.atoms):
        raise ValueError("order must be a permutation of the atoms")
    assignment: list[int | None] = [None]
    for m in range(1, len(L)):
        assignment.append(next(a for a in idx if L.leq(a, m)))
    return RootingMap(L, tuple(assignment))


def is_rooting_map(L: LcmLattice, rho: RootingMap | Sequence[int | None]) -> bool:
    assignment = rho.assignment if isinstance(rho, RootingMap) else tuple(rho)
    if len(assignment) != len(L):
        return False
    atoms = set(L.atoms)
    for m in range(len(L)):
        if m == L.bottom:
            continue
        a = assignment[m]
        if a not in atoms or not L.leq(a, m):
            return False
        for k in L.interval(a, m):
            if assignment[k] != a:
                return False
    return True


def _check(L: LcmLattice, rho: RootingMap) -> None:
    if rho.lattice is not L and rho.lattice.elements != L.elements:
        raise InvalidRootingMapError("rooting map belongs to another lattice")
    if not is_rooting_map(L, rho):
        raise InvalidRootingMapError("assignment violates the rooting-map axioms")


def candidate_count(L: LcmLattice) -> int:
    """Product over non-bottom elements of the number of atoms dividing them."""
    return math.prod(sum(1 for a in L.atoms if L.leq(a, m)) for m in range(1, len(L)))


def _iter_rooting_maps(L: LcmLattice) -> Iterator[tuple[int | None, ...]]:
    order = sorted(range(1, len(L)), key=lambda m: (L.heights[m], m))
    below = {m: [k for k in range(1, len(L)) if k != m and L.leq(k, m)] for m in order}
    cands = {m: [a for a in L.atoms if L.leq(a, m)] for m in order}
    assignment: list[int | None] = [None] * len(L)

    def ok(m: int, a: int) -> bool:
        # everything strictly below m is already assigned (height order)
        return all(assignment[k] == a for k in below[m] if L.leq(a, k))

    def rec(pos: int):
        if pos == len(order):
            yield tuple(assignment)
            return
        m = order[pos]
        for a in cands[m]:
            if ok(m, a):
                assignment[m] = a
                yield from rec(pos + 1)
        assignment[m] = None

    yield from rec(0)


def enumerate_rooting_maps(L: LcmLattice, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[RootingMap]:
    """Every rooting map of ``L`` exactly once, by backtracking in height order."""
    total = candidate_count(L)
    if total > cap:
        raise SizeLimitError(f"candidate space {total} exceeds cap {cap}")
    for assignment in _iter_rooting_maps(L):
        yield RootingMap(L, assignment)


@dataclass(frozen=True)
class RootingComplex:
    complex: SimplicialComplex  # vertices are atom indices of the lattice
    apex: int

    @property
    def dimension(self) -> int:
        return self.complex.dimension

    def faces_of_dim(self, r: int) -> list[frozenset[int]]:
        return self.complex.faces_of_dim(r)

    def is_cone(self) -> bool:
        return self.complex.is_cone_with_apex(self.apex)


def rooting_complex(L: LcmLattice, rho: RootingMap) -> RootingComplex:
    """Faces are atom sets whose every subset is unbroken (the empty set counts as unbroken)."""
    _check(L, rho)
    atoms = sorted(L.atoms)
    faces: set[frozenset[int]] = {frozenset()}
    level = [frozenset({a}) for a in atoms]  # singletons: rho(a) = a
    while level:
        faces.update(level)
        nxt = set()
        for F in level:
            top = max(F)
            for a in atoms:
                if a <= top:
                    continue
                G = F | {a}
                if all(G - {b} in faces for b in G) and rho(L.join_atoms(G)) in G:
                    nxt.add(G)
        level = list(nxt)
    K = SimplicialComplex(tuple(atoms), frozenset(faces))
    return RootingComplex(K, rho(L.join_atoms(atoms)))


def restriction_check(I: MonomialIdeal, rho: RootingMap, v: str | int) -> bool:
    """Restricting rho to the lattice of ``I`` minus generators divisible by ``v``.

    True when the restriction is a rooting map and its complex is the
    induced subcomplex of the original one on the surviving atoms.
    """
    L = rho.lattice
    Ip = restrict_ideal(I, v)
    if Ip.is_zero():
        return True
    Lp = LcmLattice(Ip)
    try:
        embed = [L.index[m] for m in Lp.elements]
    except KeyError:
        raise LatticeConsistencyError("restricted lattice is not a subset of the lattice") from None
    assignment: list[int | None] = [None]
    for m in range(1, len(Lp)):
        image = L.elements[rho(embed[m])]
        if image not in Lp.index:
            return False
        assignment.append(Lp.index[image])
    rho_p = RootingMap(Lp, tuple(assignment))
    if not is_rooting_map(Lp, rho_p):
        return False
    gamma = rooting_complex(L, rho).complex
    gamma_p = rooting_complex(Lp, rho_p).complex
    induced = gamma.induced(embed[a] for a in Lp.atoms)
    relabelled = frozenset(frozenset(embed[a] for a in F) for F in gamma_p.faces)
    return relabelled == induced.faces


@dataclass(frozen=True)
class MinRootingResult:
    min_dim: int | None
    argmin: dict | None
    exhaustive: bool
    examined: int
    dims: dict[int, int]  # histogram dim -> number of maps seen

    def to_json(self) -> dict:
        return {
            "min_dim": self.min_dim,
            "argmin": self.argmin,
            "exhaustive": self.exhaustive,
            "examined": self.examined,
            "dims": {str(k): v for k, v in sorted(self.dims.items())},
        }


def _order_candidates(L: LcmLattice, samples: int, seed: int) -> tuple[Iterator[tuple[int, ...]], bool]:
    atoms = list(L.atoms)
    if len(atoms) <= EXHAUSTIVE_ORDER_ATOMS:
        return permutations(atoms), True
    rng = random.Random(seed)

    def sampled():
        for _ in range(samples):
            perm = atoms[:]
            rng.shuffle(perm)
            yield tuple(perm)

    return sampled(), False


def min_rooting_dim(
    L: LcmLattice,
    mode: str = "orders",
    budget: int = DEFAULT_ENUMERATION_CAP,
    samples: int = DEFAULT_ORDER_SAMPLES,
    seed: int = 0,
    stream_limit: int = DEFAULT_STREAM_LIMIT,
) -> MinRootingResult:
    """Minimum rooting-complex dimension over all rooting maps or over order-induced ones.

    ``mode="all"`` enumerates every rooting map; if the candidate space
    exceeds ``budget`` it stops after ``min(budget, stream_limit)`` maps and
    flags the result as not exhaustive.  ``mode="orders"`` runs through every atom order up
    to 8 atoms and samples ``samples`` seeded random orders beyond that.
    """
    seen: dict[tuple, int] = {}
    best: tuple[int, tuple] | None = None
    hist: dict[int, int] = {}
    if mode == "all":
        exhaustive = candidate_count(L) <= budget
        source = _iter_rooting_maps(L)
        describe = None
        count = 0
        for assignment in source:
            if not exhaustive and count >= min(budget, stream_limit):
                break
            count += 1
            d = rooting_complex(L, RootingMap(L, assignment)).dimension
            hist[d] = hist.get(d, 0) + 1
            if best is None or d < best[0]:
                best = (d, assignment)
        else:
            exhaustive = True
        if best is None:
            return MinRootingResult(None, None, exhaustive, count, hist)
        describe = {"rooting_map": RootingMap(L, best[1]).describe()}
        return MinRootingResult(best[0], describe, exhaustive, count, hist)
    if mode != "orders":
        raise ValueError(f"unknown mode {mode!r}")
    orders, exhaustive = _order_candidates(L, samples, seed)
    best_order = None
    for order in orders:
        rho = rooting_from_order(L, order)
        if rho.assignment not in seen:
            d = rooting_complex(L, rho).dimension
            seen[rho.assignment] = d
            hist[d] = hist.get(d, 0) + 1
            if best is None or d < best[0]:
                best, best_order = (d, rho.assignment), order
    assert best is not None and best_order is not None
    describe = {
        "order": [L.label(a) for a in best_order],
        "rooting_map": RootingMap(L, best[1]).describe(),
    }
    return MinRootingResult(best[0], describe, exhaustive, len(seen), hist)


def explore(
    L: LcmLattice,
    budget: int = DEFAULT_ENUMERATION_CAP,
    samples: int = DEFAULT_ORDER_SAMPLES,
    seed: int = 0,
    stream_limit: int = DEFAULT_STREAM_LIMIT,
) -> dict:
    """Both minima side by side; a strict gap means order-induced maps are not optimal."""
    res_all = min_rooting_dim(L, "all", budget=budget, seed=seed, stream_limit=stream_limit)
    res_ord = min_rooting_dim(L, "orders", budget=budget, samples=samples, seed=seed)
    strict = (
        res_all.min_dim is not None
        and res_ord.min_dim is not None
        and res_all.min_dim < res_ord.min_dim
    )
    return {
        "min_all": res_all.min_dim,
        "min_orders": res_ord.min_dim,
        "exhaustive_all": res_all.exhaustive,
        "exhaustive_orders": res_ord.exhaustive,
        "strict_gap": strict,
        "maps_examined_all": res_all.examined,
        "maps_examined_orders": res_ord.examined,
        "witness_maps": {"all": res_all.argmin, "orders": res_ord.argmin},
    }
