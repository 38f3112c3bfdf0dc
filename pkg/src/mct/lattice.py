"""Finite posets, lcm-lattices, coordinate intersection lattices and order complexes."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .errors import LatticeConsistencyError, SizeLimitError, DegenerateIdealError
from .monomials import Monomial, MonomialIdeal, _require_square_free, minimal_primes

DEFAULT_LATTICE_CAP = 1 << 16
DENSE_ORDER_LIMIT = 1 << 10
AXIOM_CHECK_LIMIT = 1 << 12  # number of ordered pairs


class Poset:
    """A finite poset on ``elements`` (referred to by index).

    The order is a dense boolean table for up to 1024 elements and is
    otherwise evaluated on demand through ``leq``.
    """

    def __init__(
        self,
        elements: Sequence,
        leq: Callable[[object, object], bool],
        *,
        table: np.ndarray | None = None,
        check: bool = True,
    ):
        self.elements = tuple(elements)
        self._leq_fn = leq
        n = len(self.elements)
        if table is None and n <= DENSE_ORDER_LIMIT:
            table = np.array(
                [[bool(leq(a, b)) for b in self.elements] for a in self.elements], dtype=bool
            ).reshape(n, n)
        self._table = table
        if check and n * n <= AXIOM_CHECK_LIMIT:
            self._check_axioms()

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        if self._table is not None:
            return bool(self._table[i, j])
        return bool(self._leq_fn(self.elements[i], self.elements[j]))

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def _check_axioms(self) -> None:
        n = len(self)
        for i in range(n):
            if not self.leq(i, i):
                raise LatticeConsistencyError(f"order is not reflexive at {self.elements[i]}")
            for j in range(n):
                if i != j and self.leq(i, j) and self.leq(j, i):
                    raise LatticeConsistencyError("order is not antisymmetric")
                if self.leq(i, j):
                    for k in range(n):
                        if self.leq(j, k) and not self.leq(i, k):
                            raise LatticeConsistencyError("order is not transitive")

    def induced(self, indices: Iterable[int]) -> Poset:
        idx = list(indices)
        table = None
        if self._table is not None:
            table = self._table[np.ix_(idx, idx)]
        return Poset([self.elements[i] for i in idx], self._leq_fn, table=table, check=False)

    def up_set(self, i: int, strict: bool = False) -> list[int]:
        return [j for j in range(len(self)) if self.leq(i, j) and not (strict and j == i)]

    def down_set(self, i: int, strict: bool = False) -> list[int]:
        return [j for j in range(len(self)) if self.leq(j, i) and not (strict and j == i)]

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        """Indices sorted so that every element comes after all elements below it."""
        n = len(self)
        return tuple(sorted(range(n), key=lambda i: sum(self.leq(j, i) for j in range(n))))

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        n = len(self)
        out = []
        for i in range(n):
            for j in range(n):
                if self.lt(i, j) and not any(
                    self.lt(i, k) and self.lt(k, j) for k in range(n)
                ):
                    out.append((i, j))
        return tuple(out)

    def heights_from(self, bottom: int) -> list[int]:
        """Longest-chain length from ``bottom`` to each element (-1 if not above it)."""
        h = [-1] * len(self)
        for i in self.linear_extension:
            if i == bottom:
                h[i] = 0
            elif self.leq(bottom, i):
                h[i] = 1 + max(h[j] for j in self.down_set(i, strict=True) if h[j] >= 0)
        return h


@dataclass(frozen=True)
class SimplicialComplex:
    """Finite abstract simplicial complex stored as its full face list.

    ``faces`` contains the empty face unless the complex is void.
    """

    vertices: tuple[Hashable, ...]
    faces: frozenset[frozenset]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable], vertices: Sequence | None = None) -> SimplicialComplex:
        faces: set[frozenset] = set()
        for F in facets:
            F = tuple(F)
            for k in range(len(F) + 1):
                faces.update(frozenset(c) for c in combinations(F, k))
        if vertices is None:
            vertices = sorted({v for F in faces for v in F}, key=repr)
        return cls(tuple(vertices), frozenset(faces))

    @classmethod
    def void(cls) -> SimplicialComplex:
        return cls((), frozenset())

    @classmethod
    def empty_face_only(cls) -> SimplicialComplex:
        return cls((), frozenset({frozenset()}))

    def is_void(self) -> bool:
        return not self.faces

    @property
    def dimension(self) -> int:
        if not self.faces:
            return -2
        return max(len(F) for F in self.faces) - 1

    def faces_of_dim(self, k: int) -> list[frozenset]:
        return [F for F in self.faces if len(F) == k + 1]

    def f_vector(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for F in self.faces:
            out[len(F) - 1] = out.get(len(F) - 1, 0) + 1
        return dict(sorted(out.items()))

    @cached_property
    def facets(self) -> tuple[frozenset, ...]:
        fs = sorted(self.faces, key=len, reverse=True)
        out: list[frozenset] = []
        for F in fs:
            if not any(F < G for G in out):
                out.append(F)
        return tuple(out)

    def is_closed(self) -> bool:
        return all(F - {v} in self.faces for F in self.faces for v in F)

    def is_subcomplex_of(self, other: SimplicialComplex) -> bool:
        return self.faces <= other.faces

    def induced(self, vertex_subset: Iterable) -> SimplicialComplex:
        S = frozenset(vertex_subset)
        return SimplicialComplex(
            tuple(v for v in self.vertices if v in S),
            frozenset(F for F in self.faces if F <= S),
        )

    def is_cone_with_apex(self, apex) -> bool:
        """Every maximal face contains ``apex``."""
        return bool(self.faces) and all(apex in F for F in self.facets)


class LcmLattice(Poset):
    """The lcm-lattice of a monomial ideal: all lcms of subsets of its generators.

    Element 0 is the bottom (the monomial 1); the atoms are the generators.
    """

    def __init__(self, ideal: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP):
        if ideal.is_zero() or ideal.is_unit():
            raise DegenerateIdealError(f"lcm-lattice needs a proper nonzero ideal, got {ideal}")
        self.ideal = ideal
        n = ideal.nvars
        one = Monomial.one(n)
        gens = ideal.generators
        seen = {one}
        frontier = [one]
        while frontier:
            nxt = []
            for e in frontier:
                for g in gens:
                    m = e.lcm(g)
                    if m not in seen:
                        seen.add(m)
                        nxt.append(m)
                        if len(seen) > cap:
                            raise SizeLimitError(f"lcm-lattice exceeds {cap} elements")
            frontier = nxt
        elems = sorted(seen, key=Monomial.grlex_key)
        exps = np.array([m.exponents for m in elems], dtype=np.int64).reshape(len(elems), n)
        table = None
        if len(elems) <= DENSE_ORDER_LIMIT:
            table = np.all(exps[:, None, :] <= exps[None, :, :], axis=2)
        self._exps = exps
        super().__init__(elems, Monomial.divides, table=table, check=True)
        self.index = {m: i for i, m in enumerate(self.elements)}
        self._join_cache: dict[frozenset[int], int] = {}
        self._interval_cache: dict[tuple[int, int], list[int]] = {}
        self.bottom = 0
        self.atoms = tuple(self.index[g] for g in gens)
        self.top = self.index[max(elems, key=Monomial.grlex_key)]
        self.heights = tuple(self._compute_heights())
        if sorted(i for i, h in enumerate(self.heights) if h == 1) != sorted(self.atoms):
            raise LatticeConsistencyError("height-1 elements differ from the generators")

    def _compute_heights(self) -> list[int]:
        h = [0] * len(self)
        # grlex order is a linear extension of divisibility
        for i in range(1, len(self)):
            below = np.all(self._exps[:i] <= self._exps[i], axis=1)
            h[i] = 1 + max(h[j] for j in np.flatnonzero(below))
        return h

    @property
    def nvars(self) -> int:
        return self.ideal.nvars

    def leq(self, i: int, j: int) -> bool:
        if self._table is not None:
            return bool(self._table[i, j])
        return bool(np.all(self._exps[i] <= self._exps[j]))

    def height(self, i: int) -> int:
        return self.heights[i]

    @property
    def lattice_height(self) -> int:
        return self.heights[self.top]

    def join_atoms(self, atom_indices: Iterable[int]) -> int:
        key = frozenset(atom_indices)
        hit = self._join_cache.get(key)
        if hit is None:
            exps = np.zeros(self.nvars, dtype=np.int64)
            for a in key:
                exps = np.maximum(exps, self._exps[a])
            hit = self.index[Monomial(tuple(int(e) for e in exps))]
            self._join_cache[key] = hit
        return hit

    def interval(self, a: int, b: int) -> list[int]:
        hit = self._interval_cache.get((a, b))
        if hit is None:
            hit = [k for k in range(len(self)) if self.leq(a, k) and self.leq(k, b)]
            self._interval_cache[a, b] = hit
        return hit

    def label(self, i: int) -> str:
        return self.elements[i].format(self.ideal.variables)

    def to_json(self) -> dict:
        return {
            "elements": [self.label(i) for i in range(len(self))],
            "covers": [list(c) for c in self.covers],
            "heights": list(self.heights),
        }

    def to_dot(self) -> str:
        lines = ["digraph lcm_lattice {", "  rankdir=BT;"]
        for i in range(len(self)):
            lines.append(f'  n{i} [label="{self.label(i)}"];')
        for i, j in self.covers:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines)


def build_lcm_lattice(I: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> LcmLattice:
    return LcmLattice(I, cap=cap)


def lattice_height(L: LcmLattice) -> int:
    return L.lattice_height


def open_interval(L: Poset, a: int, b: int) -> Poset:
    """Induced poset on the elements strictly between ``a`` and ``b``."""
    if not L.leq(a, b):
        raise ValueError(f"{L.elements[a]} is not below {L.elements[b]}")
    idx = [k for k in range(len(L)) if L.lt(a, k) and L.lt(k, b)]
    return L.induced(idx)


def order_complex(P: Poset) -> SimplicialComplex:
    """Chains of ``P`` as faces on the vertex set ``range(len(P))``."""
    n = len(P)
    order = P.linear_extension
    pos = {v: k for k, v in enumerate(order)}
    succ = {i: [j for j in order if P.lt(i, j)] for i in range(n)}
    faces: set[frozenset] = {frozenset()}
    stack = [((i,), i) for i in order]
    while stack:
        chain, last = stack.pop()
        faces.add(frozenset(chain))
        for j in succ[last]:
            stack.append((chain + (j,), j))
    return SimplicialComplex(tuple(sorted(range(n), key=pos.__getitem__)), frozenset(faces))


class IntersectionLattice(Poset):
    """Intersection lattice of the coordinate arrangement V(I) in k^(n+1).

    Each element is stored as its set of vanishing coordinates; subspace
    inclusion ``v <= w`` is the reverse inclusion of those sets.  Only
    nonempty intersections of components appear (no ambient-space element).
    """

    def __init__(self, ideal: MonomialIdeal):
        _require_square_free(ideal)
        if ideal.is_zero() or ideal.is_unit():
            raise DegenerateIdealError(f"arrangement needs a proper nonzero ideal, got {ideal}")
        self.ideal = ideal
        comps = sorted(minimal_primes(ideal), key=lambda P: (len(P), sorted(P)))
        self.components = tuple(comps)
        elems = set(comps)
        frontier = set(comps)
        while frontier:
            nxt = set()
            for e in frontier:
                for c in comps:
                    u = e | c
                    if u not in elems:
                        elems.add(u)
                        nxt.add(u)
            frontier = nxt
        ordered = sorted(elems, key=lambda P: (-len(P), sorted(P)))
        super().__init__(ordered, lambda v, w: v >= w)
        self.index = {v: i for i, v in enumerate(self.elements)}

    @property
    def ambient_dim(self) -> int:
        return self.ideal.nvars

    def dim(self, i: int) -> int:
        return self.ambient_dim - len(self.elements[i])

    def codim(self, i: int) -> int:
        return len(self.elements[i])

    @property
    def coatoms(self) -> tuple[int, ...]:
        return tuple(self.index[c] for c in self.components)

    def label(self, i: int) -> str:
        names = self.ideal.variables
        return "V(" + ",".join(names[k] for k in sorted(self.elements[i])) + ")"


def build_intersection_lattice(I: MonomialIdeal) -> IntersectionLattice:
    return IntersectionLattice(I)


def duality_mu(LA: IntersectionLattice, Ldual: LcmLattice) -> dict[int, int]:
    """The order-reversing bijection L_A -> L_{I^vee} minus its bottom.

    ``v`` goes to the product of the coordinates vanishing on it.
    """
    n = LA.ambient_dim
    mu: dict[int, int] = {}
    for i, v in enumerate(LA.elements):
        m = Monomial.from_support(v, n)
        if m not in Ldual.index:
            raise LatticeConsistencyError(f"{LA.label(i)} has no dual element")
        mu[i] = Ldual.index[m]
    if sorted(mu.values()) != list(range(1, len(Ldual))):
        raise LatticeConsistencyError("duality map is not onto the non-bottom dual elements")
    for i in range(len(LA)):
        for j in range(len(LA)):
            if LA.leq(i, j) != Ldual.leq(mu[j], mu[i]):
                raise LatticeConsistencyError("duality map is not order-reversing")
    return mu


def lattice_json(L: LcmLattice) -> str:
    return json.dumps(L.to_json(), indent=2)
