"""Mayer-Vietoris tables for the bundled scenarios.

Run with  python3 walkthroughs/cohomology_tour.py
"""
from su2comm.homalg.report import solve_all_bundled
from su2comm.homalg.ring import bernoulli, thaddeus_check, wall_invariants

for name, rep in solve_all_bundled().items():
    print(f"== {name} ({rep['route']} route)")
    print("   F2 dims:", rep["f2_dims"])
    print("   integral:", rep["table"])
    if "total" in rep:
        print(f"   {rep['total']['name']}:", rep["total"]["table"])
    if rep["kernels"]:
        print("   kernels:", rep["kernels"])
    if rep["cokernels"]:
        print("   cokernels:", rep["cokernels"])
    print("   checks:", "all ok" if rep["ok"] else rep["checks"])

print("B_2, B_4, B_6 =", bernoulli(2), bernoulli(4), bernoulli(6))
print("volume check for m=3, g=2:", thaddeus_check(3, 2))
print("Wall invariants for (2, 12, 2):", wall_invariants(2, 12, 2))
