"""Scenario data: named F2 bases, restriction maps, Bocksteins, integral data.

A scenario describes one Mayer-Vietoris square X = U u V, U n V ~ B, with
either the union X or the piece U unknown.  Maps are given on basis labels
as F2 sums, Bocksteins likewise.  Integral data, when present, lists the
invariant factors of U, V, B per degree and the integer matrix of
rho = (j_U, j_V) : U + V -> B in the chosen cyclic generators.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Mapping

import numpy as np

from ..errors import InconsistentScenario
from .groups import GradedGroup


@dataclass(frozen=True)
class GradedF2Space:
    basis: dict[int, tuple[str, ...]]

    def __post_init__(self):
        seen: set[str] = set()
        for q, labels in self.basis.items():
            if len(set(labels)) != len(labels):
                raise InconsistentScenario(f"repeated label in degree {q}")
            dup = seen & set(labels)
            if dup:
                raise InconsistentScenario(f"label {sorted(dup)[0]!r} used in two degrees")
            seen |= set(labels)

    @classmethod
    def of(cls, table: Mapping) -> "GradedF2Space":
        return cls({int(q): tuple(v) for q, v in table.items()})

    def __getitem__(self, q: int) -> tuple[str, ...]:
        return self.basis.get(q, ())

    def dim(self, q: int) -> int:
        return len(self[q])

    def degree_of(self, label: str) -> int:
        for q, labels in self.basis.items():
            if label in labels:
                return q
        raise InconsistentScenario(f"unknown label {label!r}")

    def vector(self, q: int, labels) -> np.ndarray:
        x = np.zeros(self.dim(q), dtype=np.uint8)
        for lab in labels:
            try:
                x[self[q].index(lab)] ^= 1
            except ValueError:
                raise InconsistentScenario(f"{lab!r} is not a degree-{q} label") from None
        return x

    def labels_of(self, q: int, x) -> list[str]:
        return [lab for lab, c in zip(self[q], x) if c % 2]

    @property
    def top(self) -> int:
        return max(self.basis, default=-1)


@dataclass(frozen=True)
class NamedMap:
    """Map of graded F2 spaces given on basis labels; missing labels map to 0."""

    source: GradedF2Space
    target: GradedF2Space
    images: dict[str, tuple[str, ...]]

    def __post_init__(self):
        for lab, img in self.images.items():
            q = self.source.degree_of(lab)
            self.target.vector(q, img)  # raises on shape mismatch

    def matrix(self, q: int) -> np.ndarray:
        cols = [self.target.vector(q, self.images.get(lab, ())) for lab in self.source[q]]
        if not cols:
            return np.zeros((self.target.dim(q), 0), dtype=np.uint8)
        return np.column_stack(cols).astype(np.uint8)


@dataclass(frozen=True)
class BocksteinData:
    """beta : H^q -> H^{q+1} on a graded F2 space."""

    space: GradedF2Space
    images: dict[str, tuple[str, ...]]

    def __post_init__(self):
        for lab, img in self.images.items():
            q = self.space.degree_of(lab)
            self.space.vector(q + 1, img)

    def matrix(self, q: int) -> np.ndarray:
        cols = [self.space.vector(q + 1, self.images.get(lab, ())) for lab in self.space[q]]
        if not cols:
            return np.zeros((self.space.dim(q + 1), 0), dtype=np.uint8)
        return np.column_stack(cols).astype(np.uint8)

    def square_defect(self) -> int:
        """Number of degrees where beta o beta is nonzero."""
        bad = 0
        for q in range(self.space.top + 1):
            m = (self.matrix(q + 1).astype(int) @ self.matrix(q).astype(int)) % 2
            bad += int(m.any())
        return bad


@dataclass(frozen=True)
class IntegralData:
    """Invariant factors of U, V, B per degree and integer matrices of rho."""

    U: dict[int, tuple[int, ...]]
    V: dict[int, tuple[int, ...]]
    B: dict[int, tuple[int, ...]]
    rho: dict[int, list[list[int]]]

    def shape_check(self) -> None:
        for q, m in self.rho.items():
            rows = len(self.B.get(q, ()))
            cols = len(self.U.get(q, ())) + len(self.V.get(q, ()))
            if len(m) != rows or any(len(r) != cols for r in m):
                raise InconsistentScenario(f"rho in degree {q} should be {rows} x {cols}")

    def matrix(self, q: int) -> list[list[int]]:
        rows = len(self.B.get(q, ()))
        cols = len(self.U.get(q, ())) + len(self.V.get(q, ()))
        return self.rho.get(q, [[0] * cols for _ in range(rows)])

    def source(self, q: int) -> tuple[int, ...]:
        return tuple(self.U.get(q, ())) + tuple(self.V.get(q, ()))


@dataclass(frozen=True)
class Scenario:
    name: str
    degrees: tuple[int, int]
    unknown: str  # "X" (the union) or "U" (a piece)
    spaces: dict[str, GradedF2Space]
    maps: dict[str, NamedMap]
    hints: dict[str, tuple[str, ...]] = field(default_factory=dict)
    restrictions: dict[str, str] = field(default_factory=dict)
    bockstein: dict[str, dict[str, tuple[str, ...]]] = field(default_factory=dict)
    integral_route: str | None = None
    integral: IntegralData | None = None
    decomposition: dict | None = None
    expected: dict = field(default_factory=dict)
    description: str = ""

    def beta(self, space: str) -> BocksteinData:
        return BocksteinData(self.spaces[space], self.bockstein.get(space, {}))


def _table(d: Mapping) -> dict[int, tuple]:
    return {int(q): tuple(v) for q, v in d.items()}


def _expand_multiplicative(d: dict) -> dict:
    """Fill spaces and maps from generator images in a truncated algebra."""
    from .monomials import TruncatedAlgebra, product_basis

    mult = d["multiplicative"]
    alg = TruncatedAlgebra(tuple((n, int(q), int(h)) for n, q, h in mult["B"]["variables"]))
    d = dict(d)
    spaces = dict(d.get("spaces", {}))
    maps = dict(d.get("maps", {}))
    spaces["B"] = alg.basis()
    for side in ("U", "V"):
        if side in mult:
            fams = [[(lab, int(q), img) for lab, q, img in fam] for fam in mult[side]]
            basis, images = product_basis(fams, alg)
            if side == "V":  # keep the two units apart in kernel names
                basis = {q: ["1'" if x == "1" else x for x in v] for q, v in basis.items()}
                images["1'"] = images.pop("1")
            spaces[side] = basis
            maps[f"{side}->B"] = images
    d["spaces"], d["maps"] = spaces, maps
    return d


def scenario_from_dict(d: dict) -> Scenario:
    try:
        if "multiplicative" in d:
            d = _expand_multiplicative(d)
        unknown = d.get("unknown", "X")
        if unknown not in ("X", "U"):
            raise InconsistentScenario(f"unknown must be 'X' or 'U', not {unknown!r}")
        spaces = {k: GradedF2Space.of(v) for k, v in d["spaces"].items()}
        need = ("V", "B") + (("X",) if unknown == "U" else ("U",))
        for k in need:
            if k not in spaces:
                raise InconsistentScenario(f"scenario lacks space {k!r}")
        raw_maps = d.get("maps", {})
        maps = {"V->B": NamedMap(spaces["V"], spaces["B"], _imgs(raw_maps.get("V->B", {})))}
        hints: dict[str, tuple[str, ...]] = {}
        if unknown == "X":
            maps["U->B"] = NamedMap(spaces["U"], spaces["B"], _imgs(raw_maps.get("U->B", {})))
        else:
            hints = _imgs(raw_maps.get("U->B", {}))
        bock = {k: _imgs(v) for k, v in d.get("bockstein", {}).items()}
        for k, v in bock.items():
            if k in spaces:
                BocksteinData(spaces[k], v)
        integral = None
        if "integral_spaces" in d:
            isp = d["integral_spaces"]
            integral = IntegralData(
                U=_table(isp.get("U", {})), V=_table(isp.get("V", {})), B=_table(isp.get("B", {})),
                rho={int(q): [list(map(int, r)) for r in m]
                     for q, m in d.get("integral_maps", {}).get("rho", {}).items()},
            )
            integral.shape_check()
        lo, hi = d.get("degrees", [0, max(s.top for s in spaces.values()) + 1])
        return Scenario(
            name=d["name"], degrees=(int(lo), int(hi)), unknown=unknown, spaces=spaces, maps=maps,
            hints=hints, restrictions=dict(d.get("restrictions", {})), bockstein=bock,
            integral_route=d.get("integral_route"), integral=integral,
            decomposition=d.get("decomposition"), expected=d.get("expected", {}),
            description=d.get("description", ""),
        )
    except KeyError as e:
        raise InconsistentScenario(f"scenario lacks field {e.args[0]!r}") from None


def _imgs(m: Mapping) -> dict[str, tuple[str, ...]]:
    return {k: tuple(v) for k, v in m.items()}


def load_scenario(path: str | Path) -> Scenario:
    text = Path(path).read_text()
    return scenario_from_dict(json.loads(text))


BUNDLED = ("torus_commuting", "atiyah_A", "abar", "mcheck")


def bundled_scenario(name: str) -> Scenario:
    ref = resources.files("su2comm.homalg").joinpath("scenarios", f"{name}.json")
    return scenario_from_dict(json.loads(ref.read_text()))


def expected_group(sc: Scenario, key: str = "integral") -> GradedGroup | None:
    e = sc.expected.get(key)
    return None if e is None else GradedGroup.of({int(q): v for q, v in e.items()})
