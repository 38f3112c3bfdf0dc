"""Frozen reference values.

Values tagged PUBLISHED were checked by hand against the published statements; values
tagged DERIVED were computed once by hand or by an independent route and
then frozen here.  Tests compare live computations against this module.
"""

# PUBLISHED: height I = 3, projdim R/I = 4, extremal sets, top degrees, probe arithmetic
REISNER_HEIGHT = 3
REISNER_PROJDIM_QUOTIENT_F2 = 4
REISNER_EXTREMAL = {2: {(2, 6), (3, 6)}, 3: {(2, 5)}, 5: {(2, 5)}, 7: {(2, 5)}}
REISNER_TOP_AFFINE = {2: 9, 5: 7}
REISNER_TOP_PROJECTIVE = {2: 8, 5: 6}
REISNER_PROBE_LHS = 8
REISNER_PROBE_LOWER = 7
REISNER_THEORY_UPPER = 7

# PUBLISHED: single extremal (2,4), H^{>=7} vanishes, disjoint pair of planes
BIPARTITE6_EXTREMAL = {(2, 4)}
BIPARTITE6_TOP_AFFINE = 6
BIPARTITE6_DISJOINT = [[["x0", "x2", "x4"], ["x1", "x3", "x5"]]]

# DERIVED: GPW on the lcm-lattice, confirmed by the Taylor strand oracle
REISNER_GRADED_IDEAL_F2 = {(0, 3): 10, (1, 4): 15, (2, 5): 6, (2, 6): 1, (3, 6): 1}
REISNER_GRADED_IDEAL_F5 = {(0, 3): 10, (1, 4): 15, (2, 5): 6}
REISNER_LATTICE_SIZE = 33
REISNER_LATTICE_HEIGHT = 4
REISNER_GENERATORS = [
    "x0*x1*x2", "x0*x1*x5", "x0*x2*x3", "x0*x3*x4", "x0*x4*x5",
    "x1*x2*x4", "x1*x3*x4", "x1*x3*x5", "x2*x3*x5", "x2*x4*x5",
]
REISNER_YAN_F2 = {0: 1, 5: 10, 6: 15, 7: 6, 8: 1, 9: 1}
REISNER_YAN_F5 = {0: 1, 5: 10, 6: 15, 7: 6}

BIPARTITE6_GRADED = {(0, 2): 6, (1, 3): 8, (2, 4): 3}
BIPARTITE6_MIN_PRIMES = [{0, 2, 4}, {0, 2, 5}, {0, 3, 5}, {1, 3, 5}]
BIPARTITE6_ROOTING_MAPS = 312

Z1_GRADED = {(0, 4): 15, (1, 5): 24, (2, 6): 10}
Z1_TOP_PROJECTIVE = 7

TRIANGLE_GRADED = {(0, 2): 3, (1, 3): 2}
TRIANGLE_ROOTING_MAPS = 3
BOOLEAN3_ROOTING_MAPS = 6  # koszul(2): one per atom order

# DERIVED: boundary matrix ranks of the minimal RP^2 (f = 6, 15, 10)
RP2_BOUNDARY_RANK_2_F2 = 9
RP2_BOUNDARY_RANK_2_F3 = 10
