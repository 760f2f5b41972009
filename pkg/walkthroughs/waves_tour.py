"""Walk through the wave curves and the level-set homeomorphism.

Run with  python3 walkthroughs/waves_tour.py
"""
import math

import numpy as np

from su2comm.comm_geom import level_residual
from su2comm.homeo import pair_distance, phi_fwd, phi_inv
from su2comm.quat_core import commutator, haar_sample, projectivize
from su2comm.waves import WaveId, cached_table, eval_arc, eval_arc_sphere, great_circle_oracle, hausdorff, table_for

theta = 0.8

# each wave closes up after one turn of the normalized arc parameter
for P in (0.9, 0.4, -0.4):
    tab = cached_table(WaveId.of(theta, P))
    print(f"P={P:+.1f}  knots={tab.n_knots}  length={tab.total_length:.6f}")

# the images are great circles, so the samples sit on the oracle
tab = cached_table(WaveId.of(theta, 0.4))
s = np.linspace(0.0, 2 * math.pi, 9)
gap = np.abs(np.linalg.norm(np.array([eval_arc_sphere(tab, x) for x in s]) - great_circle_oracle(theta, 0.4, s), axis=1))
print(f"largest gap to the great circle: {gap.max():.2e}")
print("first samples on the cylinder:")
for x in s[:3]:
    c = eval_arc(tab, x)
    print(f"  s={x:.3f}  phi={c.phi:+.4f}  Q={c.Q:+.4f}")

# shrinking theta, the P = 1/sqrt(2) wave approaches the square wave
s = np.linspace(0.0, 2 * math.pi, 20001)
sq = eval_arc_sphere(table_for(0.0, 1 / math.sqrt(2)), s)
for t in (0.2, 0.05, 0.01, 0.001):
    sm = eval_arc_sphere(table_for(t, 1 / math.sqrt(2)), s)
    print(f"theta={t:<5} Hausdorff on the sphere to the square wave: {hausdorff(sq, sm):.4f}")

# a random point of RP^3 lands on the level set and comes back
rng = np.random.default_rng(7)
p = projectivize(haar_sample(rng))
g, h = phi_inv(theta, p)
back = phi_inv(theta, phi_fwd(theta, g, h))
print("level residual of the image pair:", f"{level_residual(theta, g, h):.2e}")
print("commutator:", commutator(g, h))
print("round trip distance:", f"{pair_distance((g, h), back):.2e}")
