"""The T-equivariant homeomorphism between X_theta and RP^3.

Write a point of RP^3 as [[z + w j]] with z = Z e^{i zeta}, w = W e^{i omega}.
The inverse map reads off

    P = |z|^2 - |w|^2,    R a = -2 e^{i theta/2} z w,    s = Arg(z / w),

and takes (phi, Q) to be the point at normalized arc length s along the wave
of (theta, P).  Only |z|^2, |w|^2, z w and z/w enter, so the sign of the
representative never matters.  When z w = 0 the wave is the equator and the
angle of b is fixed by continuity instead.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .comm_geom import level_residual
from .config import EPS_ALG, EPS_REL
from .errors import NotOnLevelSet
from .quat_core import (
    GroupElement,
    ProjectivePoint,
    TorusElement,
    conjugate,
    torus_translate,
)
from .waves import arc_param_sphere, eval_arc_sphere, table_for

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PolarRP3:
    Z: float
    W: float
    zeta: float | None
    omega: float | None

    @classmethod
    def of(cls, p: ProjectivePoint, eps: float = EPS_ALG) -> "PolarRP3":
        z, w = p.rep.z, p.rep.w
        Z, W = abs(z), abs(w)
        return cls(Z, W, cmath.phase(z) if Z > eps else None, cmath.phase(w) if W > eps else None)

    @property
    def delta(self) -> float | None:
        if self.zeta is None or self.omega is None:
            return None
        return (self.zeta - self.omega) % TWO_PI


def _pair_from_sphere(theta: float, P: float, Ra: complex, a: complex, X: np.ndarray):
    half = cmath.exp(0.5j * theta)
    g = GroupElement.from_zw(P * half, Ra)
    # S b = a e^{-i phi} S = a (x - i y); this form needs no phi at the poles
    h = GroupElement.from_zw(float(X[2]) / half, a * complex(X[0], -X[1]))
    return g, h


def phi_inv(theta: float, p: ProjectivePoint, eps: float = EPS_ALG) -> tuple[GroupElement, GroupElement]:
    z, w = p.rep.z, p.rep.w
    zw = z * w
    P = abs(z) ** 2 - abs(w) ** 2
    half = cmath.exp(0.5j * theta)
    if abs(zw) > eps:
        Ra = -2.0 * half * zw
        a = Ra / abs(Ra)
        s = cmath.phase(z * w.conjugate()) % TWO_PI
        X = eval_arc_sphere(table_for(theta, P), s)
        return _pair_from_sphere(theta, P, Ra, a, X)
    # z w = 0: g = +-e^{i theta/2}, h = b j with b fixed by continuity
    if abs(z) <= abs(w):
        P, beta = -1.0, 2.0 * cmath.phase(w) + math.pi
    else:
        P, beta = 1.0, 2.0 * cmath.phase(z) + math.pi
    g = GroupElement.from_zw(P * half, 0.0)
    h = GroupElement.from_zw(0.0, cmath.exp(1j * beta))
    return g, h


def phi_fwd(theta: float, g: GroupElement, h: GroupElement, eps: float = EPS_REL) -> ProjectivePoint:
    res = level_residual(theta, g, h)
    if res > eps:
        raise NotOnLevelSet(f"pair misses the level {theta:.6g} by {res:.3g}")
    half = cmath.exp(0.5j * theta)
    P = max(-1.0, min(1.0, (g.z / half).real))
    Ra = g.w
    R = abs(Ra)
    if R <= 2.0 * EPS_ALG:
        beta = cmath.phase(h.w)
        ang = 0.5 * (beta - math.pi)
        if P < 0:
            return ProjectivePoint(GroupElement.from_zw(0.0, cmath.exp(1j * ang)))
        return ProjectivePoint(GroupElement.from_zw(cmath.exp(1j * ang), 0.0))
    a = Ra / R
    Q = (h.z * half).real
    xy = h.w.conjugate() * a
    X = np.array([xy.real, xy.imag, Q])
    X /= np.linalg.norm(X)
    s = arc_param_sphere(table_for(theta, P), X)
    Z = math.sqrt(max(0.0, 0.5 * (1.0 + P)))
    W = math.sqrt(max(0.0, 0.5 * (1.0 - P)))
    arg_zw = cmath.phase(-Ra / half)
    zeta = 0.5 * (arg_zw + s)
    omega = 0.5 * (arg_zw - s)
    return ProjectivePoint(GroupElement.from_zw(Z * cmath.exp(1j * zeta), W * cmath.exp(1j * omega)))


def pair_distance(a: tuple[GroupElement, GroupElement], b: tuple[GroupElement, GroupElement]) -> float:
    return max(a[0].dist(b[0]), a[1].dist(b[1]))


def t_equivariance_defect(theta: float, t: TorusElement, p: ProjectivePoint) -> float:
    """Distance between Phi^-1(t p) and t Phi^-1(p) t^-1."""
    lhs = phi_inv(theta, torus_translate(t, p))
    u = t.element()
    g, h = phi_inv(theta, p)
    return pair_distance(lhs, (conjugate(u, g), conjugate(u, h)))


def phi_pi_orbit(base: tuple[GroupElement, GroupElement], g: GroupElement,
                 eps: float = EPS_REL) -> tuple[GroupElement, GroupElement]:
    """The orbit map g |-> g * g^-1 of the transitive action on X_pi."""
    res = level_residual(math.pi, *base)
    if res > eps:
        raise NotOnLevelSet(f"basepoint misses X_pi by {res:.3g}")
    return conjugate(g, base[0]), conjugate(g, base[1])
