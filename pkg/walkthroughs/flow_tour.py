"""Gradient flow of f(g, h) = Re tr [g, h] on SU(2) x SU(2).

Run with  python3 walkthroughs/flow_tour.py
"""
import numpy as np

from su2comm.gradflow import Direction, FlowConfig, dnu_matrix, f_value, flow
from su2comm.quat_core import GroupElement, haar_sample

rng = np.random.default_rng(3)
g, h = haar_sample(rng), haar_sample(rng)
print(f"start: f = {f_value(g, h):+.6f}, rank of dnu = {np.linalg.matrix_rank(dnu_matrix(g, h), tol=1e-8)}")

# a commuting pair is critical, so the rank drops
e = GroupElement.of(0.6, 0.8)
print(f"commuting pair: rank of dnu = {np.linalg.matrix_rank(dnu_matrix(e, e), tol=1e-8)}")

for direction in (Direction.ASCEND, Direction.DESCEND):
    trace = flow(g, h, FlowConfig(direction=direction, method="rk4", step=0.05))
    print(f"{direction.value:8s} f -> {trace.final_f:+.8f} after {trace.n_steps} steps ({trace.terminated_by.value})")

# ascending from many starts lands on the maximum f = 2
ends = [flow(haar_sample(rng), haar_sample(rng), FlowConfig(method="rk4", step=0.05)).final_f for _ in range(20)]
print("ascending ends, min and max:", f"{min(ends):.8f}", f"{max(ends):.8f}")
