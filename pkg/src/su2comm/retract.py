"""Deformation retractions of the level sets and of the Atiyah space.

r moves a point of X_theta to X_{t theta} keeping P and a, and sliding
(phi, Q) along the waves so that the normalized arc length is preserved.
r' does the same towards X_pi.  Conjugating by a rotation that diagonalizes
the commutator extends both to the W-levels, and pairing r with r' gives the
deformation rho of A = mu^{-1}(-1)/SU(2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize
from scipy.spatial.transform import Rotation

from .comm_geom import level_residual
from .config import EPS_ALG, EPS_REL
from .errors import CentralCommutator, NotOnLevelSet
from .homeo import phi_fwd
from .quat_core import (
    ONE,
    GroupElement,
    LieVector,
    ProjectivePoint,
    Quaternion,
    commutator,
    conjugate,
    exp,
    log,
)
from .waves import arc_param_sphere, eval_arc_sphere, table_for

Quad = tuple[GroupElement, GroupElement, GroupElement, GroupElement]


def mu(reps: Quad) -> GroupElement:
    x, y, x2, y2 = reps
    return commutator(x, y) * commutator(x2, y2)


def mu_residual(reps: Quad) -> float:
    return mu(reps).dist(-ONE)


@dataclass(frozen=True)
class APoint:
    """Representative (x, y, x', y') of a class in A."""

    reps: Quad

    def __post_init__(self):
        res = mu_residual(self.reps)
        if res > EPS_REL:
            raise NotOnLevelSet(f"mu misses -1 by {res:.3g}")

    @property
    def theta(self) -> float:
        c = commutator(self.reps[0], self.reps[1])
        return math.acos(max(-1.0, min(1.0, c.re)))


@dataclass(frozen=True)
class MPoint:
    tuple: Quad

    def __post_init__(self):
        res = mu_residual(self.tuple)
        if res > EPS_REL:
            raise NotOnLevelSet(f"mu misses -1 by {res:.3g}")


def _move_level(g: GroupElement, h: GroupElement, theta: float, theta_new: float,
                eps: float) -> tuple[GroupElement, GroupElement]:
    res = level_residual(theta, g, h)
    if res > eps:
        raise NotOnLevelSet(f"pair misses the level {theta:.6g} by {res:.3g}")
    half = cmath.exp(0.5j * theta)
    P = max(-1.0, min(1.0, (g.z / half).real))
    Ra = g.w
    R = abs(Ra)
    # at |P| = 1 the angle a is free; the output does not depend on it
    a = Ra / R if R > EPS_ALG else 1.0 + 0.0j
    Q = (h.z * half).real
    xy = h.w.conjugate() * a
    X = np.array([xy.real, xy.imag, Q])
    X /= np.linalg.norm(X)
    s = arc_param_sphere(table_for(theta, P), X)
    Y = eval_arc_sphere(table_for(theta_new, P), s)
    half_new = cmath.exp(0.5j * theta_new)
    g2 = GroupElement.from_zw(P * half_new, Ra)
    h2 = GroupElement.from_zw(float(Y[2]) / half_new, a * complex(Y[0], -Y[1]))
    return g2, h2


def retract_r(g: GroupElement, h: GroupElement, theta: float, t: float,
              eps: float = EPS_REL) -> tuple[GroupElement, GroupElement]:
    """X_theta -> X_{t theta}; t = 1 is the identity, t = 0 lands on commuting pairs."""
    if t == 1.0:
        return g, h
    return _move_level(g, h, theta, t * theta, eps)


def retract_r_prime(g: GroupElement, h: GroupElement, theta: float, t: float,
                    eps: float = EPS_REL) -> tuple[GroupElement, GroupElement]:
    """X_theta -> X_{t theta + (1-t) pi}; t = 0 lands on X_pi."""
    if t == 1.0:
        return g, h
    return _move_level(g, h, theta, t * theta + (1.0 - t) * math.pi, eps)


def diagonalize_commutator(x: GroupElement, y: GroupElement,
                           eps: float = EPS_REL) -> tuple[GroupElement, float]:
    """u with u [x,y] u^-1 = e^{i theta}, theta in (0, pi).

    u is the rotation along the geodesic taking the commutator's axis to +i,
    or j when the axis is -i.
    """
    c = commutator(x, y)
    v = c.vec()
    nv = float(np.linalg.norm(v))
    if nv <= eps:
        raise CentralCommutator(f"commutator is {c.re:+.3f}")
    theta = math.atan2(nv, c.re)
    n = v / nv
    if n[0] <= -1.0 + 1e-12:
        return GroupElement.of(0.0, 0.0, 1.0), theta
    cr = np.cross(n, [1.0, 0.0, 0.0])
    u = GroupElement(Quaternion(1.0 + float(n[0]), *(float(c) for c in cr)))
    return u, theta


def _conj_pair(u: GroupElement, pair):
    return tuple(conjugate(u, e) for e in pair)


def retract_rw(x: GroupElement, y: GroupElement, t: float) -> tuple[GroupElement, GroupElement]:
    u, theta = diagonalize_commutator(x, y)
    g, h = _conj_pair(u, (x, y))
    return _conj_pair(u.inv(), retract_r(g, h, theta, t))


def retract_rw_prime(x: GroupElement, y: GroupElement, t: float) -> tuple[GroupElement, GroupElement]:
    u, theta = diagonalize_commutator(x, y)
    g, h = _conj_pair(u, (x, y))
    return _conj_pair(u.inv(), retract_r_prime(g, h, theta, t))


def normalize_apoint(ap: APoint) -> tuple[GroupElement, Quad, float]:
    """u and the conjugated representative with [x, y] = e^{i theta}."""
    u, theta = diagonalize_commutator(ap.reps[0], ap.reps[1])
    return u, _conj_pair(u, ap.reps), theta


def rho(ap: APoint, t: float) -> APoint:
    """Deformation of A_{(0,pi)} towards A_0: r on (x, y), r' on (x', y')."""
    u, (x, y, x2, y2), theta = normalize_apoint(ap)
    if t == 1.0:
        return ap
    g, h = retract_r(x, y, theta, t)
    g2, h2 = retract_r_prime(x2, y2, math.pi - theta, t)
    return APoint(_conj_pair(u.inv(), (g, h, g2, h2)))


def rho_extended(ap: APoint, t: float, eps: float = EPS_REL) -> APoint:
    """rho, extended by the identity over A_0."""
    c = commutator(ap.reps[0], ap.reps[1])
    if c.dist(ONE) <= eps:
        return ap
    return rho(ap, t)


def centralizer_homotopy_j1(g: GroupElement, t: float,
                            default_axis=(1.0, 0.0, 0.0)) -> tuple[GroupElement, GroupElement]:
    """(g, 1) -> (g, exp(pi t xi/|xi|)) with xi = log g.

    At g = +-1 the axis is undefined; default_axis is used there.
    """
    try:
        xi = log(g)
        n = xi.as_array() / xi.norm()
    except Exception:
        n = np.asarray(default_axis, dtype=float)
    return g, exp(LieVector.from_array(math.pi * t * n))


def _proj_product_inv(p2: ProjectivePoint, p: ProjectivePoint) -> ProjectivePoint:
    return ProjectivePoint(p2.rep.inv() * p.rep)


def transition_tau(ap: APoint) -> ProjectivePoint:
    """Phi_pi(r'(x', y', 0))^-1 Phi_pi(r'(x, y, 0)) on the normalized representative."""
    _, (x, y, x2, y2), theta = normalize_apoint(ap)
    p = phi_fwd(math.pi, *retract_r_prime(x, y, theta, 0.0))
    p2 = phi_fwd(math.pi, *retract_r_prime(x2, y2, math.pi - theta, 0.0))
    return _proj_product_inv(p2, p)


def transition_tau_homotoped(ap: APoint) -> ProjectivePoint:
    """Phi_{pi-theta}(x', y')^-1 Phi_theta(x, y) on the normalized representative."""
    _, (x, y, x2, y2), theta = normalize_apoint(ap)
    return _proj_product_inv(phi_fwd(math.pi - theta, x2, y2), phi_fwd(theta, x, y))


_HURWITZ = None


def _hurwitz_units() -> list[GroupElement]:
    global _HURWITZ
    if _HURWITZ is None:
        units = []
        for k in range(4):
            for s in (1.0, -1.0):
                c = [0.0] * 4
                c[k] = s
                units.append(GroupElement.of(*c))
        for signs in np.ndindex(2, 2, 2, 2):
            units.append(GroupElement.of(*(0.5 if b == 0 else -0.5 for b in signs)))
        _HURWITZ = units
    return _HURWITZ


def _conj_dist(u: GroupElement, a: Quad, b: Quad) -> float:
    return max(conjugate(u, ai).dist(bi) for ai, bi in zip(a, b))


def _rotvec_to_group(r: np.ndarray) -> GroupElement:
    return exp(LieVector.from_array(0.5 * np.asarray(r)))


def class_distance(a: APoint, b: APoint) -> float:
    """min over u of max_k |u a_k u^-1 - b_k|, by grid + Kabsch seed + local polish."""
    A, B = a.reps, b.reps
    seeds = list(_hurwitz_units())
    va = np.array([e.vec() for e in A])
    vb = np.array([e.vec() for e in B])
    if np.linalg.norm(va) > 1e-12 and np.linalg.norm(vb) > 1e-12:
        rot, _ = Rotation.align_vectors(vb, va)
        x, y, z, w = rot.as_quat()
        seeds.append(GroupElement.of(w, x, y, z))
    seeds.sort(key=lambda u: _conj_dist(u, A, B))
    best = _conj_dist(seeds[0], A, B)
    for u0 in seeds[:3]:
        def obj(r, u0=u0):
            return _conj_dist(_rotvec_to_group(r) * u0, A, B)

        res = minimize(obj, np.zeros(3), method="Nelder-Mead",
                       options={"xatol": 1e-12, "fatol": 1e-14, "initial_simplex": 0.05 * np.vstack([np.zeros(3), np.eye(3)]),
                                "maxiter": 4000})
        best = min(best, float(res.fun))
    return best


def random_apoint(rng: np.random.Generator, theta: float | None = None) -> APoint:
    """A point of A_theta built from the homeomorphisms and a random rotation."""
    from .homeo import phi_inv
    from .quat_core import haar_sample, projectivize

    if theta is None:
        theta = float(rng.uniform(0.05, math.pi - 0.05))
    x, y = phi_inv(theta, projectivize(haar_sample(rng)))
    x2, y2 = phi_inv(math.pi - theta, projectivize(haar_sample(rng)))
    u = haar_sample(rng)
    return APoint(_conj_pair(u, (x, y, x2, y2)))
