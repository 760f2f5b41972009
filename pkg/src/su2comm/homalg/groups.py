"""Graded finitely generated abelian groups as invariant-factor tables.

A degree holds a tuple of invariant factors: d >= 2 for Z/d, 0 for Z.
Torsion factors come first in divisibility order, then the free summands.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from ..errors import UnresolvedExtension
from .snf import integer_nullspace, invariant_factors_of_cokernel, subquotient


def canonical(factors: Iterable[int]) -> tuple[int, ...]:
    """Invariant-factor form of a direct sum of cyclic groups."""
    fs = [int(f) for f in factors]
    if any(f < 0 for f in fs):
        raise ValueError(f"negative factor in {fs}")
    free = sum(1 for f in fs if f == 0)
    tors = [f for f in fs if f >= 2]
    if tors:
        diag = [[tors[i] if i == j else 0 for j in range(len(tors))] for i in range(len(tors))]
        tors = [f for f in invariant_factors_of_cokernel(diag, len(tors)) if f != 0]
    return tuple(tors) + (0,) * free


def group_str(factors: tuple[int, ...]) -> str:
    if not factors:
        return "0"
    parts = []
    free = factors.count(0)
    if free:
        parts.append("Z" if free == 1 else f"Z^{free}")
    tors: dict[int, int] = {}
    for f in factors:
        if f:
            tors[f] = tors.get(f, 0) + 1
    for d, k in sorted(tors.items()):
        parts.append(f"Z/{d}" if k == 1 else f"(Z/{d})^{k}")
    return " + ".join(parts)


@dataclass(frozen=True)
class GradedGroup:
    groups: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, table: Mapping[int, Iterable[int]] | Iterable[Iterable[int]]) -> "GradedGroup":
        if isinstance(table, Mapping):
            items = {int(k): canonical(v) for k, v in table.items()}
            top = max(items, default=-1)
            return cls(tuple(items.get(q, ()) for q in range(top + 1)))._trim()
        return cls(tuple(canonical(v) for v in table))._trim()

    def _trim(self) -> "GradedGroup":
        g = list(self.groups)
        while g and not g[-1]:
            g.pop()
        return GradedGroup(tuple(g))

    @property
    def top(self) -> int:
        return len(self.groups) - 1

    def __getitem__(self, q: int) -> tuple[int, ...]:
        return self.groups[q] if 0 <= q < len(self.groups) else ()

    def rank(self, q: int) -> int:
        return self[q].count(0)

    def torsion(self, q: int) -> tuple[int, ...]:
        return tuple(f for f in self[q] if f)

    def f2_dim(self, q: int) -> int:
        """dim H^q(-; F2) by universal coefficients."""
        even = lambda fs: sum(1 for f in fs if f and f % 2 == 0)  # noqa: E731
        return self.rank(q) + even(self.torsion(q)) + even(self.torsion(q + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * self.rank(q) for q in range(len(self.groups)))

    def __add__(self, other: "GradedGroup") -> "GradedGroup":
        n = max(len(self.groups), len(other.groups))
        return GradedGroup.of([self[q] + other[q] for q in range(n)])

    def reduced(self) -> "GradedGroup":
        """Drop one free summand in degree 0."""
        g = list(self.groups)
        if g and 0 in g[0]:
            d0 = list(g[0])
            d0.remove(0)
            g[0] = tuple(d0)
        return GradedGroup(tuple(g))._trim()

    def table(self, lo: int = 0, hi: int | None = None) -> list[str]:
        hi = self.top if hi is None else hi
        return [group_str(self[q]) for q in range(lo, hi + 1)]

    def to_json(self) -> dict[str, list[int]]:
        return {str(q): list(f) for q, f in enumerate(self.groups)}

    def __str__(self) -> str:
        return "(" + ", ".join(self.table()) + ")"


def suspension_shift(g: GradedGroup, k: int) -> GradedGroup:
    """Reduced cohomology of the k-fold suspension."""
    r = g.reduced()
    return GradedGroup.of({q + k: r[q] for q in range(r.top + 1)})


def wedge_sum(summands: list[GradedGroup]) -> GradedGroup:
    """Reduced cohomology of a wedge from the reduced pieces."""
    out = GradedGroup(())
    for s in summands:
        out = out + s.reduced()
    return out


def assemble_decomposition(core: GradedGroup, wedge_summands: list[GradedGroup],
                           range_: tuple[int, int]) -> GradedGroup:
    """Add the reduced summands strictly inside (lo, hi); core alone at the ends and outside."""
    lo, hi = range_
    w = wedge_sum(wedge_summands)
    n = max(core.top, w.top) + 1
    return GradedGroup.of([core[q] + (w[q] if lo < q < hi else ()) for q in range(n)])


def hom_kernel(M: list[list[int]], src: tuple[int, ...], tgt: tuple[int, ...]) -> tuple[int, ...]:
    """ker(f) for f : (+Z/d_j) -> (+Z/e_i) with matrix M in the cyclic generators."""
    n, m = len(src), len(tgt)
    if n == 0:
        return ()
    E = [[tgt[i] if i == k else 0 for k in range(m)] for i in range(m)]
    A = [list(M[i]) + [-x for x in E[i]] for i in range(m)] if m else []
    if m:
        N = integer_nullspace(A, n + m)
        L = [row for row in N[:n]]
    else:
        L = [[int(i == j) for j in range(n)] for i in range(n)]
    D = [[src[i] if i == j else 0 for j in range(n)] for i in range(n)]
    return canonical(subquotient(L, D, n))


def hom_cokernel(M: list[list[int]], src: tuple[int, ...], tgt: tuple[int, ...]) -> tuple[int, ...]:
    m = len(tgt)
    if m == 0:
        return ()
    E = [[tgt[i] if i == k else 0 for k in range(m)] for i in range(m)]
    A = [list(M[i]) + E[i] for i in range(m)]
    return canonical(invariant_factors_of_cokernel(A, m))


def is_homomorphism(M, src, tgt) -> bool:
    for j, d in enumerate(src):
        if d == 0:
            continue
        for i, e in enumerate(tgt):
            x = d * M[i][j]
            if (e == 0 and x != 0) or (e and x % e):
                return False
    return True


def _two_power(n: int) -> int | None:
    e = 0
    while n > 1 and n % 2 == 0:
        n //= 2
        e += 1
    return e if n == 1 else None


def _partitions(n: int, max_part: int | None = None):
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p,) + rest


def resolve_extension(order: int, f2_rank: int) -> tuple[int, ...]:
    """The abelian 2-group of the given order with f2_rank cyclic summands."""
    e = _two_power(order)
    if e is None:
        raise UnresolvedExtension(f"order {order} is not a power of 2")
    if order == 1:
        if f2_rank != 0:
            raise UnresolvedExtension("trivial group has F2-rank 0")
        return ()
    hits = [p for p in _partitions(e) if len(p) == f2_rank]
    if len(hits) != 1:
        raise UnresolvedExtension(
            f"{len(hits)} abelian groups of order {order} have {f2_rank} cyclic summands")
    return canonical(2 ** k for k in hits[0])


__all__ = [
    "GradedGroup",
    "assemble_decomposition",
    "canonical",
    "group_str",
    "hom_cokernel",
    "hom_kernel",
    "is_homomorphism",
    "resolve_extension",
    "suspension_shift",
    "wedge_sum",
]
