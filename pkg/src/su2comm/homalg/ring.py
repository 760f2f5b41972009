"""Ring-level checks: Gysin sequence, duality pairing, Thaddeus and Wall numbers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..errors import DualityFailure, UnresolvedExtension
from .groups import GradedGroup, canonical, hom_cokernel, hom_kernel
from .snf import det


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2, from sum_{k<=n} C(n+1, k) B_k = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    return -sum((comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0)) / (n + 1)


def thaddeus_check(m: int, g: int) -> Fraction:
    """Coefficient of z in x^m on the moduli space of genus g."""
    k = m - g + 1
    if k < 0:
        raise ValueError("need m >= g - 1")
    return (Fraction((-1) ** g * 2 ** (2 * g - 2) * factorial(m), factorial(k))
            * (2 ** k - 2) * bernoulli(k))


# ---------------------------------------------------------------- Gysin

def gysin_solve(base: GradedGroup, euler: dict[int, list[list[int]]]) -> GradedGroup:
    """Cohomology of a circle bundle from the base and cup product with e.

    euler[q] is the matrix of e : H^q(B) -> H^{q+2}(B).  Each degree sits in
    0 -> coker(e on H^{q-2}) -> H^q(E) -> ker(e on H^{q-1}) -> 0, which splits
    when the kernel is free.
    """
    def e_map(q):
        src, tgt = base[q], base[q + 2]
        m = euler.get(q)
        if m is None:
            m = [[0] * len(src) for _ in tgt]
        return m, src, tgt

    table = {}
    for q in range(base.top + 2):
        C = hom_cokernel(*e_map(q - 2)) if q >= 2 else base[q]
        K = hom_kernel(*e_map(q - 1)) if q >= 1 else ()
        if any(K) and C:
            raise UnresolvedExtension(f"degree {q}: kernel part has torsion")
        table[q] = canonical(C + K)
    return GradedGroup.of(table)


def gysin_lambda(lam: int) -> GradedGroup:
    """Base <1, x, y, z> in degrees 0, 2, 4, 6 with x.1 = x, x.x = lam y, x.y = z."""
    base = GradedGroup.of({0: [0], 2: [0], 4: [0], 6: [0]})
    return gysin_solve(base, {0: [[1]], 2: [[lam]], 4: [[1]]})


def solve_lambda(h4: tuple[int, ...], search: range = range(1, 65)) -> int:
    hits = [lam for lam in search if gysin_lambda(lam)[4] == canonical(h4)]
    if len(hits) != 1:
        raise UnresolvedExtension(f"{len(hits)} values of lambda give H^4 = {h4}")
    return hits[0]


# ---------------------------------------------------------------- duality

Product = dict[tuple[str, str], dict[str, int]]


def ring_table_check(generators: dict[str, int], products: Product,
                     fundamental_degree: int = 6) -> bool:
    """Graded commutativity, vanishing odd squares and a unimodular pairing.

    Products not listed (in either order) are zero.  Raises DualityFailure
    with the lower degree of a degenerate pairing block.
    """
    n = fundamental_degree
    top = [g for g, d in generators.items() if d == n]
    if len(top) != 1:
        raise DualityFailure(n, f"expected one generator in degree {n}, got {len(top)}")
    z = top[0]

    for (a, b), val in products.items():
        da, db = generators[a], generators[b]
        if da % 2 and a == b and any(val.values()):
            return False
        rev = products.get((b, a))
        if rev is not None and a != b:
            sign = (-1) ** (da * db)
            keys = set(val) | set(rev)
            if any(val.get(k, 0) != sign * rev.get(k, 0) for k in keys):
                return False

    def coeff(a: str, b: str) -> int:
        if (a, b) in products:
            return products[(a, b)].get(z, 0)
        if (b, a) in products:
            return (-1) ** (generators[a] * generators[b]) * products[(b, a)].get(z, 0)
        return 0

    for q in range(1, n // 2 + 1):
        left = sorted(g for g, d in generators.items() if d == q)
        right = sorted(g for g, d in generators.items() if d == n - q)
        if len(left) != len(right):
            raise DualityFailure(q, f"ranks {len(left)} and {len(right)} differ")
        if not left:
            continue
        M = [[coeff(a, b) for b in right] for a in left]
        if abs(det(M)) != 1:
            raise DualityFailure(q, f"pairing determinant {det(M)}")
    return True


def atiyah_ring(lam: int = 4, s12: int = 1) -> tuple[dict[str, int], Product]:
    """Generators and products of H^*(A): s1 s2 = s3 s4 = x y = z, x^2 = lam y."""
    gens = {"x": 2, "s1": 3, "s2": 3, "s3": 3, "s4": 3, "y": 4, "z": 6}
    prods: Product = {
        ("s1", "s2"): {"z": s12},
        ("s3", "s4"): {"z": 1},
        ("x", "y"): {"z": 1},
        ("x", "x"): {"y": lam},
    }
    return gens, prods


# ---------------------------------------------------------------- Wall

@dataclass(frozen=True)
class WallInvariants:
    d: int
    p: int
    congruence_ok: bool


def wall_invariants(c1_coeff: int, c2_coeff: int, cube_coeff: int) -> WallInvariants:
    """c1 = c1_coeff x, c2 = c2_coeff y, x^3 = cube_coeff z and x y = z.

    p1 = c1^2 - 2 c2, so x p1 = (c1_coeff^2 cube_coeff - 2 c2_coeff) z.
    """
    d = cube_coeff
    p = c1_coeff ** 2 * cube_coeff - 2 * c2_coeff
    return WallInvariants(d, p, (p - 4 * d) % 24 == 0)
