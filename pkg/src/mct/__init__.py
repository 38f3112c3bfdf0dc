"""Combinatorics of monomial ideals: lcm-lattices, Betti numbers, constant-sheaf
cohomology of coordinate arrangement complements, rooting maps and generators
up to radical."""

from .betti import BettiTable, betti_gpw, betti_taylor_oracle, extremal_betti
from .etale import conjecture_probe, top_degree_affine, top_degree_projective, yan_cohomology
from .generators import generators_from_heights, generators_from_rooting, verify_radical_equality
from .lattice import LcmLattice, build_lcm_lattice
from .monomials import Monomial, MonomialIdeal, parse_ideal
from .rooting import enumerate_rooting_maps, min_rooting_dim, rooting_complex

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "LcmLattice", "Monomial", "MonomialIdeal",
    "betti_gpw", "betti_taylor_oracle", "build_lcm_lattice", "conjecture_probe",
    "enumerate_rooting_maps", "extremal_betti", "generators_from_heights",
    "generators_from_rooting", "min_rooting_dim", "parse_ideal", "rooting_complex",
    "top_degree_affine", "top_degree_projective", "verify_radical_equality", "yan_cohomology",
]
