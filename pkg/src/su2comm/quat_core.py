"""Quaternions, SU(2) and RP^3.

A quaternion re + x i + y j + z k is also read as z1 + z2 j with the complex
numbers z1 = re + x i and z2 = y + z i.  That complex pair view is what the
level-set formulas use, so both accessors are provided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import EPS_ALG
from .errors import DegenerateElement

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class Quaternion:
    re: float
    x: float
    y: float
    z: float

    @classmethod
    def from_zw(cls, z: complex, w: complex) -> "Quaternion":
        return cls(z.real, z.imag, w.real, w.imag)

    @property
    def zc(self) -> complex:
        return complex(self.re, self.x)

    @property
    def wc(self) -> complex:
        return complex(self.y, self.z)

    def norm(self) -> float:
        return math.sqrt(self.re * self.re + self.x * self.x + self.y * self.y + self.z * self.z)

    def conj(self) -> "Quaternion":
        return Quaternion(self.re, -self.x, -self.y, -self.z)

    def as_array(self) -> np.ndarray:
        return np.array([self.re, self.x, self.y, self.z])

    def __add__(self, o: "Quaternion") -> "Quaternion":
        return Quaternion(self.re + o.re, self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: "Quaternion") -> "Quaternion":
        return Quaternion(self.re - o.re, self.x - o.x, self.y - o.y, self.z - o.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.re, -self.x, -self.y, -self.z)

    def scale(self, c: float) -> "Quaternion":
        return Quaternion(c * self.re, c * self.x, c * self.y, c * self.z)

    def __mul__(self, o: "Quaternion") -> "Quaternion":
        a0, a1, a2, a3 = self.re, self.x, self.y, self.z
        b0, b1, b2, b3 = o.re, o.x, o.y, o.z
        return Quaternion(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )


@dataclass(frozen=True, slots=True)
class GroupElement:
    """Unit quaternion.  Construction renormalizes."""

    q: Quaternion

    def __post_init__(self):
        n = self.q.norm()
        if n == 0.0:
            raise ValueError("zero quaternion is not in SU(2)")
        if abs(n - 1.0) > 0.0:
            object.__setattr__(self, "q", self.q.scale(1.0 / n))

    @classmethod
    def of(cls, re: float, x: float = 0.0, y: float = 0.0, z: float = 0.0) -> "GroupElement":
        return cls(Quaternion(float(re), float(x), float(y), float(z)))

    @classmethod
    def from_zw(cls, z: complex, w: complex) -> "GroupElement":
        return cls(Quaternion.from_zw(complex(z), complex(w)))

    @property
    def z(self) -> complex:
        return self.q.zc

    @property
    def w(self) -> complex:
        return self.q.wc

    @property
    def re(self) -> float:
        return self.q.re

    def vec(self) -> np.ndarray:
        return np.array([self.q.x, self.q.y, self.q.z])

    def as_array(self) -> np.ndarray:
        return self.q.as_array()

    def inv(self) -> "GroupElement":
        return GroupElement(self.q.conj())

    def __neg__(self) -> "GroupElement":
        return GroupElement(-self.q)

    def __mul__(self, o: "GroupElement") -> "GroupElement":
        return mul(self, o)

    def dist(self, o: "GroupElement") -> float:
        return (self.q - o.q).norm()


@dataclass(frozen=True, slots=True)
class LieVector:
    """Pure imaginary quaternion x i + y j + z k."""

    x: float
    y: float
    z: float

    @classmethod
    def from_array(cls, a) -> "LieVector":
        return cls(float(a[0]), float(a[1]), float(a[2]))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def as_quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def scale(self, c: float) -> "LieVector":
        return LieVector(c * self.x, c * self.y, c * self.z)

    def __add__(self, o: "LieVector") -> "LieVector":
        return LieVector(self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: "LieVector") -> "LieVector":
        return LieVector(self.x - o.x, self.y - o.y, self.z - o.z)


@dataclass(frozen=True, slots=True)
class TorusElement:
    """exp(i angle) in the diagonal torus; angle kept in [0, 2pi)."""

    angle: float

    def __post_init__(self):
        object.__setattr__(self, "angle", float(self.angle) % TWO_PI)

    def element(self) -> GroupElement:
        return GroupElement.of(math.cos(self.angle), math.sin(self.angle))

    def unit(self) -> complex:
        return complex(math.cos(self.angle), math.sin(self.angle))

    def __mul__(self, o: "TorusElement") -> "TorusElement":
        return TorusElement(self.angle + o.angle)


def circular_distance(a: float, b: float) -> float:
    d = (a - b) % TWO_PI
    return min(d, TWO_PI - d)


def _canonical_sign(q: Quaternion, eps: float) -> float:
    for c in (q.re, q.x, q.y, q.z):
        if abs(c) > eps:
            return 1.0 if c > 0 else -1.0
    return 1.0


@dataclass(frozen=True, slots=True)
class ProjectivePoint:
    """Class {q, -q} in RP^3, stored through its canonical representative."""

    rep: GroupElement

    def __post_init__(self):
        if _canonical_sign(self.rep.q, EPS_ALG) < 0:
            object.__setattr__(self, "rep", -self.rep)

    def dist(self, o: "ProjectivePoint") -> float:
        a, b = self.rep.as_array(), o.rep.as_array()
        return float(min(np.linalg.norm(a - b), np.linalg.norm(a + b)))

    def __mul__(self, o: "ProjectivePoint") -> "ProjectivePoint":
        return ProjectivePoint(self.rep * o.rep)

    def inv(self) -> "ProjectivePoint":
        return ProjectivePoint(self.rep.inv())


ONE = GroupElement.of(1.0)
I = GroupElement.of(0.0, 1.0)
J = GroupElement.of(0.0, 0.0, 1.0)
K = GroupElement.of(0.0, 0.0, 0.0, 1.0)


def mul(a: GroupElement, b: GroupElement) -> GroupElement:
    return GroupElement(a.q * b.q)


def commutator(g: GroupElement, h: GroupElement) -> GroupElement:
    """[g, h] = g h g^-1 h^-1."""
    return GroupElement(g.q * h.q * g.q.conj() * h.q.conj())


def exp(xi: LieVector) -> GroupElement:
    n = xi.norm()
    if n == 0.0:
        return ONE
    s = math.sin(n) / n
    return GroupElement(Quaternion(math.cos(n), s * xi.x, s * xi.y, s * xi.z))


def log(g: GroupElement, eps: float = EPS_ALG) -> LieVector:
    """Inverse of exp on the open ball |xi| < pi, away from +-1."""
    v = g.vec()
    s = float(np.linalg.norm(v))
    if s <= eps:
        raise DegenerateElement(f"log undefined at {g.re:+.3f}")
    angle = math.atan2(s, g.re)
    return LieVector.from_array(v * (angle / s))


def haar_sample(rng_seed) -> GroupElement:
    """Haar-random element of SU(2).

    rng_seed is an integer seed or an existing numpy Generator (for batches).
    """
    rng = rng_seed if isinstance(rng_seed, np.random.Generator) else np.random.default_rng(rng_seed)
    while True:
        v = rng.standard_normal(4)
        n = np.linalg.norm(v)
        if n > 1e-8:
            return GroupElement(Quaternion(*(float(c) for c in v / n)))


def projectivize(g: GroupElement) -> ProjectivePoint:
    return ProjectivePoint(g)


def torus_translate(t: TorusElement, p: ProjectivePoint) -> ProjectivePoint:
    return ProjectivePoint(t.element() * p.rep)


def conjugate(u: GroupElement, g: GroupElement) -> GroupElement:
    """u g u^-1."""
    return GroupElement(u.q * g.q * u.q.conj())


def ad(g: GroupElement, xi: LieVector) -> LieVector:
    """Adjoint action g xi g^-1 on the Lie algebra."""
    r = g.q * xi.as_quaternion() * g.q.conj()
    return LieVector(r.x, r.y, r.z)


def torus_exp(alpha: float) -> GroupElement:
    return GroupElement.of(math.cos(alpha), math.sin(alpha))
