"""Homogeneous generators up to radical built from the lcm-lattice, and their verification.

Two constructions: one polynomial per face dimension of a rooting complex,
and one polynomial per height stratum of the lattice.  Verification is a
syntactic containment certificate plus exhaustive point counts over small
prime fields.  The point counts are evidence, not a proof over the
algebraic closure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import SizeLimitError
from .homology import require_prime
from .lattice import LcmLattice
from .monomials import Monomial, MonomialIdeal
from .rooting import RootingMap, rooting_complex, rooting_from_order

DEFAULT_POINT_CAP = 10**8
_BLOCK = 1 << 15


@dataclass(frozen=True)
class Polynomial:
    nvars: int
    terms: dict[Monomial, int] = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "terms", {m: c for m, c in self.terms.items() if c})

    @classmethod
    def sum_of(cls, monomials: Iterable[Monomial], nvars: int) -> Polynomial:
        terms: dict[Monomial, int] = {}
        for m in monomials:
            terms[m] = terms.get(m, 0) + 1
        return cls(nvars, terms)

    @property
    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def has_unit_coefficients(self) -> bool:
        return all(c == 1 for c in self.terms.values())

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0].grlex_key())

    def format(self, variables: Sequence[str]) -> str:
        parts = []
        for m, c in self.sorted_terms():
            s = m.format(variables)
            parts.append(s if c == 1 else f"{c}*{s}")
        return " + ".join(parts) if parts else "0"

    def evaluate_mod(self, points: np.ndarray, q: int) -> np.ndarray:
        """Values mod ``q`` at each row of ``points`` (entries already reduced mod q)."""
        out = np.zeros(points.shape[0], dtype=np.int64)
        if not self.terms:
            return out
        maxdeg = max(max(m.exponents) for m in self.terms)
        powers = [np.ones_like(points)]
        for _ in range(maxdeg):
            powers.append((powers[-1] * points) % q)
        for m, c in self.terms.items():
            val = np.full(points.shape[0], c % q, dtype=np.int64)
            for v, e in enumerate(m.exponents):
                if e:
                    val = (val * powers[e][:, v]) % q
            out = (out + val) % q
        return out

    def to_json(self) -> list:
        return [[list(m.exponents), c] for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list, nvars: int) -> Polynomial:
        terms: dict[Monomial, int] = {}
        for exps, c in data:
            m = Monomial(tuple(int(e) for e in exps))
            if m.nvars != nvars:
                raise ValueError(f"term {exps} does not have {nvars} exponents")
            terms[m] = terms.get(m, 0) + int(c)
        return cls(nvars, terms)


@dataclass(frozen=True)
class GeneratorSet:
    tag: str  # "rooting" or "height"
    variables: tuple[str, ...]
    polys: tuple[Polynomial, ...]
    d: int | tuple[int, ...] | None
    bound: int
    annotations: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "variables": list(self.variables),
            "d": list(self.d) if isinstance(self.d, tuple) else self.d,
            "bound": self.bound,
            "polys": [p.to_json() for p in self.polys],
            "readable": [p.format(self.variables) for p in self.polys],
            "annotations": list(self.annotations),
        }

    @classmethod
    def from_json(cls, data: dict, variables: Sequence[str] | None = None) -> GeneratorSet:
        names = tuple(data.get("variables") or variables or ())
        if not names:
            raise ValueError("generator file carries no variable list")
        polys = tuple(Polynomial.from_json(p, len(names)) for p in data["polys"])
        d = data.get("d")
        if isinstance(d, list):
            d = tuple(d)
        return cls(data.get("tag", "custom"), names, polys, d, int(data.get("bound", len(polys))))


def normalize_generator(f: Monomial, d: int) -> Monomial:
    """Pad ``f`` to degree ``d`` with powers of its first support variable."""
    if f.is_one():
        raise ValueError("cannot normalize the unit monomial")
    if d < f.degree:
        raise ValueError(f"target degree {d} is below deg f = {f.degree}")
    first = min(f.support)
    exps = list(f.exponents)
    exps[first] += d - f.degree
    return Monomial(tuple(exps))


def generators_from_rooting(
    I: MonomialIdeal, rho: RootingMap | None = None, d: int | None = None
) -> GeneratorSet:
    """g_r = sum over r-faces F of the rooting complex of prod_{f in F} normalized f.

    Without ``rho`` the map induced by the grlex order of the generators is used.
    """
    L = rho.lattice if rho is not None else LcmLattice(I)
    if rho is None:
        rho = rooting_from_order(L, L.atoms)
    maxdeg = max(g.degree for g in I.generators)
    if d is None:
        d = maxdeg
    if d < maxdeg:
        raise ValueError(f"d = {d} is below the largest generator degree {maxdeg}")
    gamma = rooting_complex(L, rho)
    bar = {a: normalize_generator(L.elements[a], d) for a in L.atoms}
    n = I.nvars
    polys = []
    for r in range(gamma.dimension + 1):
        prods = []
        for F in gamma.faces_of_dim(r):
            m = Monomial.one(n)
            for a in F:
                m = m * bar[a]
            prods.append(m)
        polys.append(Polynomial.sum_of(prods, n))
    notes = []
    if not all(p.has_unit_coefficients() for p in polys):
        notes.append("some face products coincide; coefficients above 1 were kept")
    return GeneratorSet("rooting", I.variables, tuple(polys), d, gamma.dimension + 1, tuple(notes))


def generators_from_heights(I: MonomialIdeal, d_vec: Sequence[int] | None = None) -> GeneratorSet:
    """g_r = sum of the normalized lattice elements of height r, r = 1..height L."""
    L = LcmLattice(I)
    h = L.lattice_height
    strata: dict[int, list[int]] = {r: [] for r in range(1, h + 1)}
    for k in range(1, len(L)):
        strata[L.heights[k]].append(k)
    need = tuple(max(L.elements[k].degree for k in strata[r]) for r in range(1, h + 1))
    if d_vec is None:
        d_vec = need
    d_vec = tuple(d_vec)
    if len(d_vec) != h:
        raise ValueError(f"need {h} degrees, got {len(d_vec)}")
    for r, (got, lo) in enumerate(zip(d_vec, need), start=1):
        if got < lo:
            raise ValueError(f"d_{r} = {got} is below the largest degree {lo} at height {r}")
    polys = tuple(
        Polynomial.sum_of((normalize_generator(L.elements[k], d_vec[r - 1]) for k in strata[r]), I.nvars)
        for r in range(1, h + 1)
    )
    notes = (
        f"{h} polynomials; the stated bound 1 + height L = {h + 1} is one more than the count emitted",
    )
    return GeneratorSet("height", I.variables, polys, d_vec, h, notes)


@dataclass(frozen=True)
class VerificationReport:
    subset_certified: bool
    fields_checked: tuple[int, ...]
    equal_over: dict[int, bool] = field(hash=False)
    counterexamples: dict[int, dict] = field(hash=False)

    @property
    def equal_over_each_Fq(self) -> bool:
        return all(self.equal_over.values())

    @property
    def counterexample(self) -> dict | None:
        for q in self.fields_checked:
            if q in self.counterexamples:
                return self.counterexamples[q]
        return None

    @property
    def ok(self) -> bool:
        return self.subset_certified and self.equal_over_each_Fq

    def to_json(self) -> dict:
        return {
            "subset_certified": self.subset_certified,
            "fields_checked": list(self.fields_checked),
            "equal_over": {str(q): v for q, v in self.equal_over.items()},
            "equal_over_each_Fq": self.equal_over_each_Fq,
            "counterexample": self.counterexample,
            "ok": self.ok,
        }


def _in_variety(I: MonomialIdeal, points: np.ndarray) -> np.ndarray:
    """Points where every generator of I has a vanishing support variable."""
    inside = np.ones(points.shape[0], dtype=bool)
    zero = points == 0
    for g in I.generators:
        sup = sorted(g.support)
        inside &= zero[:, sup].any(axis=1) if sup else False
    return inside


def verify_radical_equality(
    I: MonomialIdeal,
    G: GeneratorSet | Sequence[Polynomial],
    primes: Sequence[int] = (2, 3, 5),
    cap: int = DEFAULT_POINT_CAP,
) -> VerificationReport:
    """Check V(I) = V(G) syntactically (one inclusion) and by exhaustive evaluation over F_q."""
    polys = list(G.polys if isinstance(G, GeneratorSet) else G)
    n = I.nvars
    primes = tuple(primes)
    if not primes:
        raise ValueError("need at least one prime")
    for q in primes:
        require_prime(q)
        if q**n > cap:
            raise SizeLimitError(f"{q}^{n} points exceed the evaluation cap {cap}")
    rad = I.radical()
    certified = all(rad.contains(m.radical()) for p in polys for m in p.terms)
    equal: dict[int, bool] = {}
    bad: dict[int, dict] = {}
    for q in primes:
        total = q**n
        equal[q] = True
        for start in range(0, total, _BLOCK):
            idx = np.arange(start, min(start + _BLOCK, total), dtype=np.int64)
            # lexicographic order: first coordinate most significant
            pts = np.stack([(idx // q ** (n - 1 - v)) % q for v in range(n)], axis=1)
            on_g = np.ones(len(idx), dtype=bool)
            for p in polys:
                on_g &= p.evaluate_mod(pts, q) == 0
            mismatch = np.flatnonzero(on_g != _in_variety(I, pts))
            if mismatch.size:
                k = mismatch[0]
                equal[q] = False
                bad[q] = {
                    "q": q,
                    "point": [int(x) for x in pts[k]],
                    "kills_generators": bool(on_g[k]),
                    "on_variety": bool(not on_g[k]),
                }
                break
    return VerificationReport(certified, primes, equal, bad)


def ara_bounds_report(
    I: MonomialIdeal,
    chars: Sequence[int] = (2, 3, 5),
    ells: Sequence[int] = (2, 3, 5),
    samples: int = 2_000,
    seed: int = 0,
) -> dict:
    """Upper and lower bounds on the (homogeneous) arithmetic rank of I.

    Cohomological lower bounds only depend on the radical, so they are
    computed for sqrt(I).  The etale bound is a constant-sheaf lower bound
    on etcd and therefore only valid for l different from char k.
    """
    from .etale import CITATIONS, qccd_complement, top_degree_projective
    from .rooting import min_rooting_dim

    L = LcmLattice(I)
    rooted = min_rooting_dim(L, "orders", samples=samples, seed=seed)
    rad = I.radical()
    n = I.nvars - 1
    lower_qccd = {str(p): qccd_complement(rad, p) + 1 for p in chars}
    lower_etale = {str(l): top_degree_projective(rad, l) - n + 1 for l in ells}
    upper = {"upper_rooting": 1 + rooted.min_dim, "upper_height": L.lattice_height}
    lowers = list(lower_qccd.values()) + list(lower_etale.values())
    return {
        **upper,
        "upper_rooting_exhaustive": rooted.exhaustive,
        "lower_qccd": lower_qccd,
        "lower_etale": lower_etale,
        "consistent": min(upper.values()) >= max(lowers),
        "provenance": {
            "upper_rooting": "1 + min dim of order-induced rooting complexes (all orders up to 8 atoms, seeded sample beyond)",
            "upper_height": "number of height-strata polynomials (= height of the lcm-lattice)",
            "lower_qccd": "qccd(U) + 1 per field characteristic; " + CITATIONS["cd_projdim"],
            "lower_etale": "top constant-sheaf degree of P^n minus V(I) - n + 1 per l (valid for l != char k); "
            + CITATIONS["ara_lower"],
        },
    }
