"""Truncated polynomial algebras over F2, for expanding multiplicative maps.

Used to turn generator images such as "w' -> v + t" into the full
basis-labeled maps stored in scenario files.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

Monomial = tuple[int, ...]
Poly = frozenset  # of Monomial, F2 coefficients


@dataclass(frozen=True)
class TruncatedAlgebra:
    """F2[x_1, ..., x_n] / (x_i^{h_i}) with graded variables (name, degree, height)."""

    variables: tuple[tuple[str, int, int], ...]

    def degree(self, m: Monomial) -> int:
        return sum(e * d for e, (_, d, _) in zip(m, self.variables))

    def label(self, m: Monomial) -> str:
        parts = []
        for e, (name, _, _) in zip(m, self.variables):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "".join(parts) or "1"

    def basis(self) -> dict[int, list[str]]:
        out: dict[int, list[tuple[Monomial, str]]] = {}
        for m in product(*(range(h) for _, _, h in self.variables)):
            out.setdefault(self.degree(m), []).append((m, self.label(m)))
        # within a degree, higher powers of earlier variables first
        return {q: [lab for m, lab in sorted(v, key=lambda p: tuple(-e for e in p[0]))]
                for q, v in sorted(out.items())}

    def mul(self, a: Poly, b: Poly) -> Poly:
        acc: set[Monomial] = set()
        for x in a:
            for y in b:
                m = tuple(i + j for i, j in zip(x, y))
                if any(e >= h for e, (_, _, h) in zip(m, self.variables)):
                    continue
                acc ^= {m}
        return frozenset(acc)

    def power(self, a: Poly, k: int) -> Poly:
        out: Poly = frozenset({(0,) * len(self.variables)})
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def parse(self, text: str) -> Poly:
        """'s + t^2', 'st^3v', '0' or '1'."""
        names = [n for n, _, _ in self.variables]
        pat = re.compile("|".join(sorted(map(re.escape, names), key=len, reverse=True)))
        acc: set[Monomial] = set()
        for term in text.replace(" ", "").split("+"):
            if term in ("", "0"):
                continue
            m = [0] * len(names)
            pos = 0
            if term != "1":
                while pos < len(term):
                    hit = pat.match(term, pos)
                    if not hit:
                        raise ValueError(f"cannot parse {term!r}")
                    pos = hit.end()
                    e = 1
                    ex = re.compile(r"\^(\d+)").match(term, pos)
                    if ex:
                        e, pos = int(ex.group(1)), ex.end()
                    m[names.index(hit.group())] += e
            mt = tuple(m)
            if any(e >= h for e, (_, _, h) in zip(mt, self.variables)):
                continue
            acc ^= {mt}
        return frozenset(acc)

    def labels(self, p: Poly) -> list[str]:
        return [self.label(m) for m in sorted(p, key=lambda m: tuple(-e for e in m))]


def product_basis(families: list[list[tuple[str, int, str]]], target: TruncatedAlgebra):
    """All products of one element per family.

    Each family lists (label, degree, image text).  Returns a dict degree ->
    labels and a dict label -> image labels in target.
    """
    basis: dict[int, list[str]] = {}
    images: dict[str, list[str]] = {}
    for combo in product(*families):
        deg = sum(d for _, d, _ in combo)
        lab = "".join(lab for lab, _, _ in combo if lab != "1") or "1"
        img: Poly = frozenset({(0,) * len(target.variables)})
        for _, _, text in combo:
            img = target.mul(img, target.parse(text))
        basis.setdefault(deg, []).append(lab)
        images[lab] = target.labels(img)
    return {q: basis[q] for q in sorted(basis)}, images
