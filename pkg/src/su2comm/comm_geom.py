"""Level sets of the commutator map on SU(2) x SU(2).

A pair with [g, h] = exp(i theta) can always be written as

    g = P e^{i theta/2} + R a j,    h = Q e^{-i theta/2} + S b j

with R = sqrt(1 - P^2), S = sqrt(1 - Q^2) and |a| = |b| = 1.  The six numbers
are tied together by one complex relation, and solving it for Q gives the
wave function used everywhere else.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .config import EPS_ALG, EPS_REL
from .errors import AmbiguousAtPZero, NotInYTheta, NotOnLevelSet
from .quat_core import GroupElement, TorusElement, commutator


@dataclass(frozen=True)
class ThetaCoords:
    theta: float
    P: float
    Q: float
    a: TorusElement
    b: TorusElement
    a_undetermined: bool = False
    b_undetermined: bool = False

    @property
    def R(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.P * self.P))

    @property
    def S(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.Q * self.Q))

    @property
    def v(self) -> complex:
        return self.a.unit() * self.b.unit().conjugate()

    @property
    def phi(self) -> float:
        return (self.a.angle - self.b.angle) % (2 * math.pi)

    def pair(self) -> tuple[GroupElement, GroupElement]:
        half = cmath.exp(0.5j * self.theta)
        g = GroupElement.from_zw(self.P * half, self.R * self.a.unit())
        h = GroupElement.from_zw(self.Q / half, self.S * self.b.unit())
        return g, h


class PKind(Enum):
    NONZERO = "nonzero"
    ZERO_PLUS = "0+"
    ZERO_MINUS = "0-"


@dataclass(frozen=True)
class ExtendedP:
    """P in [-1, 1] with the two formal signed zeros 0+ and 0-."""

    kind: PKind
    value: float = 0.0

    @classmethod
    def of(cls, value: float, eps: float = EPS_ALG) -> "ExtendedP":
        if abs(value) <= eps:
            raise ValueError("use ExtendedP.zero_plus() or zero_minus() for P = 0")
        return cls(PKind.NONZERO, float(value))

    @classmethod
    def zero_plus(cls) -> "ExtendedP":
        return cls(PKind.ZERO_PLUS)

    @classmethod
    def zero_minus(cls) -> "ExtendedP":
        return cls(PKind.ZERO_MINUS)

    @classmethod
    def parse(cls, text: str) -> "ExtendedP":
        t = text.strip()
        if t in ("0+", "+0"):
            return cls.zero_plus()
        if t in ("0-", "-0"):
            return cls.zero_minus()
        return cls.of(float(t))

    @property
    def sign(self) -> int:
        if self.kind is PKind.ZERO_PLUS:
            return 1
        if self.kind is PKind.ZERO_MINUS:
            return -1
        return 1 if self.value > 0 else -1

    @property
    def is_zero(self) -> bool:
        return self.kind is not PKind.NONZERO

    def label(self) -> str:
        return self.kind.value if self.is_zero else repr(self.value)


def _level(theta: float) -> GroupElement:
    return GroupElement.of(math.cos(theta), math.sin(theta))


def level_residual(theta: float, g: GroupElement, h: GroupElement) -> float:
    """Distance of [g, h] from exp(i theta)."""
    return commutator(g, h).dist(_level(theta))


def to_coords(theta: float, g: GroupElement, h: GroupElement, eps: float = EPS_REL) -> ThetaCoords:
    res = level_residual(theta, g, h)
    if res > eps:
        raise NotOnLevelSet(f"commutator misses exp(i*{theta:.6g}) by {res:.3g}")
    half = cmath.exp(0.5j * theta)
    P = (g.z / half).real
    Q = (h.z * half).real
    Ra, Sb = g.w, h.w
    a_undet = abs(Ra) < EPS_ALG
    b_undet = abs(Sb) < EPS_ALG
    a = TorusElement(0.0 if a_undet else cmath.phase(Ra))
    b = TorusElement(0.0 if b_undet else cmath.phase(Sb))
    return ThetaCoords(theta, max(-1.0, min(1.0, P)), max(-1.0, min(1.0, Q)), a, b, a_undet, b_undet)


def canonical_residual(c: ThetaCoords) -> complex:
    """(PQ - vRS) - e^{i theta}(PQ - conj(v) RS); vanishes exactly on the level set."""
    v = c.v
    pq, rs = c.P * c.Q, c.R * c.S
    return (pq - v * rs) - cmath.exp(1j * c.theta) * (pq - v.conjugate() * rs)


def k_factor(phi, theta):
    """cos(phi) - cot(theta/2) sin(phi).  Works on arrays."""
    return np.cos(phi) - np.sin(phi) / np.tan(0.5 * theta)


def k_factor_ratio(phi, theta):
    """The same quantity written as sin(theta/2 - phi) / sin(theta/2)."""
    return np.sin(0.5 * theta - phi) / np.sin(0.5 * theta)


def q_of(P: float, phi, theta: float, eps: float = EPS_ALG):
    """Q as a function of phi on the level theta, for fixed P != 0.

    The sign factor sgn(P/K) equals sgn(P) * sgn(sin(theta/2 - phi)) because
    sin(theta/2) > 0, so the formula below is continuous through the zeros of
    K and returns exactly 0 at |P| = 1.
    """
    if abs(P) <= eps:
        raise AmbiguousAtPZero("Q is a square wave at P = 0")
    R2 = max(0.0, 1.0 - P * P)
    sn = np.sin(0.5 * theta - np.asarray(phi, dtype=float))
    s2 = math.sin(0.5 * theta)
    R = math.sqrt(R2)
    denom = np.sqrt(R2 * sn * sn + P * P * s2 * s2)
    out = math.copysign(1.0, P) * R * sn / denom
    return float(out) if np.ndim(out) == 0 else out


def s_of(P: float, phi, theta: float):
    """S = sqrt(1 - Q^2) along the wave, written without cancellation near the poles."""
    R2 = max(0.0, 1.0 - P * P)
    sn = np.sin(0.5 * theta - np.asarray(phi, dtype=float))
    s2 = math.sin(0.5 * theta)
    out = abs(P) * s2 / np.sqrt(R2 * sn * sn + P * P * s2 * s2)
    return float(out) if np.ndim(out) == 0 else out


def y_sphere_chart(theta: float, g: GroupElement, eps: float = EPS_REL) -> np.ndarray:
    """g = P e^{i theta/2} + R a j  |->  (R cos alpha, R sin alpha, P)."""
    u = g.z * cmath.exp(-0.5j * theta)
    if abs(u.imag) > eps:
        raise NotInYTheta(f"complex part off the exp(i theta/2) line by {abs(u.imag):.3g}")
    w = g.w
    return np.array([w.real, w.imag, u.real])


def p_zero_fiber_check(a: TorusElement, h: GroupElement, theta: float, eps: float = EPS_REL) -> bool:
    """Whether (a j, h) lies on the level theta."""
    g = GroupElement.from_zw(0.0, a.unit())
    return level_residual(theta, g, h) <= eps


def p_zero_fiber_condition(a: TorusElement, h: GroupElement, theta: float, eps: float = EPS_REL) -> bool:
    """The algebraic criterion for (a j, h): S = 0 or a^2 = b^2 e^{i theta}.

    h is read in the form Q e^{-i theta/2} + S b j, so its complex part must
    sit on the exp(-i theta/2) line.
    """
    if abs((h.z * cmath.exp(0.5j * theta)).imag) > eps:
        return False
    Sb = h.w
    if abs(Sb) <= eps:
        return True
    b = Sb / abs(Sb)
    return abs(a.unit() ** 2 - b * b * cmath.exp(1j * theta)) <= eps
