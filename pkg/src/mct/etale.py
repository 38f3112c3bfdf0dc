"""Constant-coefficient cohomology of coordinate subspace arrangement complements.

For a square-free monomial ideal I in k[x_0..x_n] the top nonvanishing
degree of H^r(A^{n+1} minus V(I), Z/l) is max{i + j : beta_{i,j}(I) != 0}
over F_l.  The projective complement drops that degree by one.  Everything
here is exact combinatorics; nothing claims to compute an etale
cohomological dimension, only constant-sheaf lower bounds for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .betti import BettiTable, betti_gpw
from .errors import DegenerateIdealError
from .homology import relative_homology_dims, require_prime, reduced_homology_dims
from .lattice import IntersectionLattice, SimplicialComplex, order_complex
from .monomials import MonomialIdeal, _require_square_free, minimal_primes

HEURISTIC_CHAR0_PRIME = 32003

CITATIONS = {
    "constant_sheaf": "top H^r(A^{n+1} \\ Z, Z/l) = max{i+j : beta_{i,j}(J) != 0} over F_l (J square-free)",
    "cone_shift": "H^{>=t+1}(X' \\ Z') = 0 iff H^{>=t}(X \\ Z) = 0 for affine cones over projective X, Z",
    "cd_projdim": "cd(I, R) = projdim R/I for square-free monomial I (Lyubeznik 1984)",
    "cd_qccd": "cd(I, R) = qccd(X \\ Z) + 1",
    "conjecture": "Lyubeznik's conjecture: etcd(U) >= qccd(U) + dim U",
    "witness": "Z contained in Z_1 gives etcd_l(P^n \\ Z) >= top nonvanishing H^r(P^n \\ Z_1, Z/l)",
    "vanishing_criterion": (
        "etcd_l(P^n \\ Z) <= 2n - 3 when (1) local arithmetic rank bounds hold off the generic "
        "points, (2) components are analytically irreducible at the vertex and meet pairwise, "
        "(3) H^{>=2n-2}(P^n \\ Z, Z/l) = 0"
    ),
    "ara_lower": "arank I >= qccd(U) + 1 and arank I >= etcd(U) - dim U + 1",
}


@dataclass(frozen=True)
class CohomologyProfile:
    ell: int
    dims: dict[int, int] = field(hash=False)
    top_affine: int
    top_projective: int

    def __post_init__(self):
        if self.dims:
            if max(r for r, d in self.dims.items() if d) != self.top_affine:
                raise ValueError("top_affine is not the top nonzero degree of dims")

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "dims": {str(r): d for r, d in sorted(self.dims.items())},
            "top_affine": self.top_affine,
            "top_projective": self.top_projective,
            "citations": [CITATIONS["constant_sheaf"], CITATIONS["cone_shift"]],
        }


def _prep(I: MonomialIdeal, ell: int) -> None:
    require_prime(ell)
    _require_square_free(I)
    if I.is_zero() or I.is_unit():
        raise DegenerateIdealError(f"need a proper nonzero ideal, got {I}")


def top_degree_affine(I: MonomialIdeal, ell: int, table: BettiTable | None = None) -> int:
    _prep(I, ell)
    T = table if table is not None else betti_gpw(I, ell, "ideal")
    return max(i + j for i, j in T.as_subject("ideal").graded)


def top_degree_projective(I: MonomialIdeal, ell: int, table: BettiTable | None = None) -> int:
    return top_degree_affine(I, ell, table) - 1


def yan_cohomology(I: MonomialIdeal, ell: int) -> CohomologyProfile:
    """All dims of H^r(A^{n+1} minus V(I), Z/l) from the intersection lattice.

    For each intersection ``v`` of codimension c, the pair
    (Delta(L_{>=v}), Delta(L_{>v})) contributes its relative homology in
    degree 2c - r - 1 to H^r.  The ambient space is not a lattice element;
    it contributes the constant class in H^0.
    """
    _prep(I, ell)
    LA = IntersectionLattice(I)
    dims: dict[int, int] = {0: 1}
    for v in range(len(LA)):
        up = LA.up_set(v)
        K = order_complex(LA.induced(up))
        # chains of L_{>v} are the chains of L_{>=v} avoiding v
        apex = up.index(v)
        K0 = SimplicialComplex(K.vertices, frozenset(F for F in K.faces if apex not in F))
        c = LA.codim(v)
        for deg, d in relative_homology_dims(K, K0, ell).items():
            if d:
                r = 2 * c - deg - 1
                dims[r] = dims.get(r, 0) + d
    dims = {r: d for r, d in sorted(dims.items()) if d}
    top = max(dims)
    return CohomologyProfile(ell, dims, top, top - 1)


def yan_cohomology_via_links(I: MonomialIdeal, ell: int) -> dict[int, int]:
    """Same dims through the cone reduction H_{k+1}(cone, X) = H~_k(X)."""
    _prep(I, ell)
    LA = IntersectionLattice(I)
    dims: dict[int, int] = {0: 1}
    for v in range(len(LA)):
        K = order_complex(LA.induced(LA.up_set(v, strict=True)))
        c = LA.codim(v)
        for deg, d in reduced_homology_dims(K, ell).items():
            if d:
                r = 2 * c - deg - 2
                dims[r] = dims.get(r, 0) + d
    return {r: d for r, d in sorted(dims.items()) if d}


def _char_prime(char_k: int) -> tuple[int, bool]:
    """Field characteristic to compute over, and whether the value is heuristic."""
    if char_k == 0:
        return HEURISTIC_CHAR0_PRIME, True
    require_prime(char_k)
    return char_k, False


def cohdim_monomial(I: MonomialIdeal, char_k: int) -> int:
    """cd(I, R) = projdim R/sqrt(I) over a field of characteristic ``char_k``.

    ``char_k = 0`` is computed over F_32003 and is a heuristic stand-in.
    """
    p, _ = _char_prime(char_k)
    rad = I.radical()
    return betti_gpw(rad, p, "quotient").projdim()


def qccd_complement(I: MonomialIdeal, char_k: int) -> int:
    return cohdim_monomial(I, char_k) - 1


def witness_is_valid(I: MonomialIdeal, witness: MonomialIdeal) -> bool:
    """V(witness) contains V(I): every witness generator lies in sqrt(I)."""
    if witness.variables != I.variables:
        return False
    rad = I.radical()
    return all(rad.contains(g.radical()) for g in witness.generators)


@dataclass(frozen=True)
class ConjectureReport:
    char_k: int
    char_k_heuristic: bool
    n: int
    qccd: int
    dimU: int
    lhs: int
    lower_bounds: dict[int, dict] = field(hash=False)
    lower_bound: int | None
    theory_upper_bound: int | None
    annotations: tuple[str, ...]
    citations: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "char_k": self.char_k,
            "char_k_heuristic": self.char_k_heuristic,
            "n": self.n,
            "qccd": self.qccd,
            "dimU": self.dimU,
            "lhs": self.lhs,
            "lower_bounds": {str(l): v for l, v in sorted(self.lower_bounds.items())},
            "lower_bound": self.lower_bound,
            "theory_upper_bound": self.theory_upper_bound,
            "annotations": list(self.annotations),
            "citations": list(self.citations),
        }


def conjecture_probe(
    I: MonomialIdeal,
    char_k: int,
    ells: list[int] | tuple[int, ...] = (2, 3, 5),
    witness: MonomialIdeal | None = None,
) -> ConjectureReport:
    """Compare qccd(U) + dim U with constant-sheaf lower bounds on etcd(U), U = P^n minus V(I)."""
    _require_square_free(I)
    if witness is not None:
        _require_square_free(witness)
        if not witness_is_valid(I, witness):
            raise ValueError(f"witness {witness} does not cut out a superset of V(I)")
    n = I.nvars - 1
    _, heuristic = _char_prime(char_k)
    qccd = qccd_complement(I, char_k)
    lhs = n + qccd
    bounds: dict[int, dict] = {}
    notes: list[str] = []
    cites = [CITATIONS["cd_projdim"], CITATIONS["cd_qccd"], CITATIONS["conjecture"],
             CITATIONS["constant_sheaf"], CITATIONS["cone_shift"]]
    theory_ub = None
    for ell in ells:
        require_prime(ell)
        if ell == char_k:
            notes.append(f"l={ell} skipped: equals the field characteristic")
            continue
        own = top_degree_projective(I, ell)
        entry = {"own": own, "bound": own, "witness": None}
        if witness is not None:
            w = top_degree_projective(witness, ell)
            entry["witness"] = w
            entry["bound"] = max(own, w)
        hyp = check_hypotheses_subschLSTCI(I, ell)
        entry["hypotheses"] = hyp
        if hyp["pairwise_intersections"] and hyp["const_cohomology"]:
            entry["theory_upper_bound"] = 2 * n - 3
            theory_ub = 2 * n - 3 if theory_ub is None else max(theory_ub, 2 * n - 3)
        bounds[ell] = entry
    if witness is not None:
        cites.append(CITATIONS["witness"])
    lower = max((e["bound"] for e in bounds.values()), default=None)
    if theory_ub is not None:
        cites.append(CITATIONS["vanishing_criterion"])
        ells_ok = [l for l, e in bounds.items() if "theory_upper_bound" in e]
        notes.append(
            f"hypotheses (2),(3) verified for l in {ells_ok}; hypothesis (1) is not computed. "
            f"If it holds, etcd_l(U) <= {theory_ub} for those l"
        )
        if lhs > theory_ub:
            notes.append(
                f"conjecture-violating gap: qccd(U) + dim U = {lhs} > {theory_ub} "
                "(annotation from the cited vanishing criterion, not a computed fact)"
            )
    if lower is not None and lhs > lower:
        notes.append(f"qccd(U) + dim U = {lhs} exceeds every computed constant-sheaf lower bound ({lower})")
    if heuristic:
        notes.append(f"char 0 emulated over F_{HEURISTIC_CHAR0_PRIME}; qccd is heuristic")
    return ConjectureReport(
        char_k=char_k,
        char_k_heuristic=heuristic,
        n=n,
        qccd=qccd,
        dimU=n,
        lhs=lhs,
        lower_bounds=bounds,
        lower_bound=lower,
        theory_upper_bound=theory_ub,
        annotations=tuple(notes),
        citations=tuple(cites),
    )


def check_hypotheses_subschLSTCI(I: MonomialIdeal, ell: int) -> dict:
    """Computable hypotheses (2) and (3) of the 2n-3 vanishing criterion for P^n minus V(I)."""
    _prep(I, ell)
    nv = I.nvars
    n = nv - 1
    full = frozenset(range(nv))
    primes = sorted(minimal_primes(I), key=lambda P: (len(P), sorted(P)))
    names = I.variables
    disjoint = [
        [[names[k] for k in sorted(P)], [names[k] for k in sorted(Q)]]
        for a, P in enumerate(primes)
        for Q in primes[a + 1:]
        if P | Q == full
    ]
    top_proj = top_degree_projective(I, ell)
    return {
        "pairwise_intersections": not disjoint,
        "disjoint_pairs": disjoint,
        "const_cohomology": top_proj <= 2 * n - 3,
        "top_projective": top_proj,
        "threshold": 2 * n - 3,
        "no_point_components": all(len(P) <= n for P in primes),
        "local_ara": "not computed",
    }
