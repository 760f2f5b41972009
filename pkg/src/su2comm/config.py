"""Numerical tolerances shared by the geometric modules.

Every function that compares against a tolerance accepts an override
keyword, so these are only defaults.
"""

EPS_ALG = 1e-12   # unit norm, sign decisions
EPS_REL = 1e-9    # level-set membership
EPS_ARC = 1e-6    # arc-length bookkeeping
EPS_ON = 1e-6     # point-on-wave test (spherical distance)
N_KNOTS = 1024
T_GRID = 50
