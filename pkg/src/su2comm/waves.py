"""Waves in the (phi, Q) cylinder and their arc-length parametrizations.

For fixed (theta, P) the points (phi, Q) allowed on the level set form one
period of a wave.  Under pi(phi, Q) = (S cos phi, S sin phi, Q) the wave lands
on S^2, and the homeomorphism parametrizes that image by normalized arc
length starting at pi(theta/2, 0).  Square waves (P -> 0+- or theta = 0) are
the great circle through the poles and pi(theta/2, 0).

Orientation: for P > 0 the curve leaves (theta/2, 0) with phi decreasing and
Q rising, for P < 0 with phi increasing and Q rising.  Square waves of either
sign leave (theta/2, 0) towards the north pole.  This is the only choice that
makes the parametrization continuous in P (including across P = 0 and at
|P| = 1, where the wave flattens to the equator).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .comm_geom import ExtendedP, q_of, s_of
from .config import EPS_ALG, EPS_ARC, EPS_ON, N_KNOTS
from .errors import DegenerateWave, NotOnWave, SquareWaveRequested

TWO_PI = 2.0 * math.pi
MAX_DEPTH = 60


@dataclass(frozen=True)
class WaveId:
    theta: float
    p: ExtendedP

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi + 1e-12:
            raise ValueError(f"theta={self.theta} outside [0, pi]")
        if self.theta <= EPS_ALG and not self.p.is_zero and abs(abs(self.p.value) - 1.0) <= EPS_ALG:
            raise DegenerateWave("the wave (theta=0, |P|=1) degenerates")

    @classmethod
    def of(cls, theta: float, P: float, zero_sign: int = 1) -> "WaveId":
        """Wave id from a plain float; P = 0 becomes 0+ (or 0- if zero_sign < 0)."""
        if abs(P) <= EPS_ALG:
            return cls(theta, ExtendedP.zero_plus() if zero_sign >= 0 else ExtendedP.zero_minus())
        return cls(theta, ExtendedP.of(P))

    @property
    def is_square(self) -> bool:
        return self.p.is_zero or self.theta <= EPS_ALG

    @property
    def sign(self) -> int:
        return self.p.sign


@dataclass(frozen=True)
class CylinderPoint:
    phi: float
    Q: float

    def __post_init__(self):
        if abs(self.Q) > 1.0 + 1e-12:
            raise ValueError(f"|Q| = {abs(self.Q)} > 1")
        object.__setattr__(self, "Q", max(-1.0, min(1.0, float(self.Q))))


@dataclass(frozen=True, eq=False)
class ArcTable:
    """Knots of the image curve with their normalized arc parameter.

    s runs over [0, 2pi]; phi is unwrapped along the curve; pts are the
    sphere images of (phi, Q).
    """

    wave: WaveId
    s: np.ndarray
    phi: np.ndarray
    Q: np.ndarray
    pts: np.ndarray
    total_length: float
    seg_len: np.ndarray = field(repr=False)

    @property
    def n_knots(self) -> int:
        return len(self.s)


def project_to_sphere(c: CylinderPoint) -> np.ndarray:
    S = math.sqrt(max(0.0, 1.0 - c.Q * c.Q))
    return np.array([S * math.cos(c.phi), S * math.sin(c.phi), c.Q])


def _project_many(phi: np.ndarray, Q: np.ndarray, S: np.ndarray | None = None) -> np.ndarray:
    if S is None:
        S = np.sqrt(np.clip(1.0 - Q * Q, 0.0, None))
    return np.column_stack([S * np.cos(phi), S * np.sin(phi), Q])


def sphere_to_cylinder(X: np.ndarray, phi_default: float) -> CylinderPoint:
    """Inverse of pi; at the poles phi is undefined and phi_default is used."""
    x, y, q = (float(c) for c in X)
    if math.hypot(x, y) <= 1e-14:
        return CylinderPoint(phi_default % TWO_PI, math.copysign(1.0, q))
    return CylinderPoint(math.atan2(y, x) % TWO_PI, q)


def _angles(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Geodesic distance between rows of A and B on the unit sphere."""
    cr = np.linalg.norm(np.cross(A, B), axis=-1)
    dt = np.einsum("ij,ij->i", A, B)
    return np.arctan2(cr, dt)


def wave_q(w: WaveId, phi):
    if w.is_square:
        raise SquareWaveRequested(f"wave {w} is a square wave")
    return q_of(w.p.value, phi, w.theta)


def square_q(w: WaveId, phi):
    """Limit square wave: sgn(P) sgn(sin(theta/2 - phi)), 0 at the jumps."""
    return w.sign * np.sign(np.sin(0.5 * w.theta - np.asarray(phi, dtype=float)))


def _smooth_knots(w: WaveId, n_knots: int, max_gap: float):
    P, theta = w.p.value, w.theta
    sigma = 1.0 if P > 0 else -1.0
    phi = 0.5 * theta - sigma * np.linspace(0.0, TWO_PI, n_knots + 1)
    Q = np.asarray(q_of(P, phi, theta))
    Q[0] = Q[-1] = 0.0
    X = _project_many(phi, Q, np.asarray(s_of(P, phi, theta)))
    for _ in range(MAX_DEPTH):
        gaps = _angles(X[:-1], X[1:])
        bad = np.nonzero(gaps > max_gap)[0]
        if bad.size == 0:
            break
        mids = 0.5 * (phi[bad] + phi[bad + 1])
        Qm = np.asarray(q_of(P, mids, theta))
        phi = np.insert(phi, bad + 1, mids)
        Q = np.insert(Q, bad + 1, Qm)
        X = np.insert(X, bad + 1, _project_many(mids, Qm, np.asarray(s_of(P, mids, theta))), axis=0)
    return phi, Q, X


def _square_knots(w: WaveId, n_knots: int):
    """The great circle through pi(theta/2, 0) and the north pole."""
    t = np.linspace(0.0, TWO_PI, n_knots + 1)
    c2, s2 = math.cos(0.5 * w.theta), math.sin(0.5 * w.theta)
    e1 = np.array([c2, s2, 0.0])
    X = np.outer(np.cos(t), e1) + np.outer(np.sin(t), [0.0, 0.0, 1.0])
    X[-1] = e1
    # the horizontal part of the square wave collapses to the pole; on the
    # way down phi has advanced by pi in the orientation direction
    back = (t > 0.5 * math.pi) & (t < 1.5 * math.pi)
    phi = np.where(back, 0.5 * w.theta - w.sign * math.pi, 0.5 * w.theta)
    phi[-1] = 0.5 * w.theta - w.sign * TWO_PI
    return phi, X[:, 2].copy(), X


def build_arc_table(w: WaveId, n_knots: int = N_KNOTS) -> ArcTable:
    if n_knots < 64:
        raise ValueError("n_knots must be at least 64")
    if w.is_square:
        phi, Q, X = _square_knots(w, n_knots)
    else:
        phi, Q, X = _smooth_knots(w, n_knots, 2.0 * TWO_PI / n_knots)
    seg = _angles(X[:-1], X[1:])
    keep = np.concatenate([[True], seg > 0.0])
    phi, Q, X = phi[keep], Q[keep], X[keep]
    seg = _angles(X[:-1], X[1:])
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    total = float(cum[-1])
    s = cum * (TWO_PI / total)
    s[-1] = TWO_PI
    return ArcTable(w, s, phi, Q, X, total, seg)


@lru_cache(maxsize=8192)
def _cached(theta_key: float, kind: str, p_key: float, n_knots: int) -> ArcTable:
    if kind == "nonzero":
        p = ExtendedP.of(p_key)
    elif kind == "0+":
        p = ExtendedP.zero_plus()
    else:
        p = ExtendedP.zero_minus()
    return build_arc_table(WaveId(theta_key, p), n_knots)


def cached_table(w: WaveId, n_knots: int = N_KNOTS) -> ArcTable:
    """Arc table through a cache keyed by (theta, P) rounded to 1e-12."""
    return _cached(round(w.theta, 12), w.p.kind.value, round(w.p.value, 12), n_knots)


def table_for(theta: float, P: float, n_knots: int = N_KNOTS) -> ArcTable:
    """Table used by the homeomorphism and the retractions.

    P = 0 uses the 0+ square wave.  theta = 0 uses the meridian square wave,
    which is also the limit used for |P| = 1 at theta = 0.
    """
    if theta <= EPS_ALG:
        return cached_table(WaveId(0.0, ExtendedP.zero_plus()), n_knots)
    return cached_table(WaveId.of(theta, P), n_knots)


def _slerp_from(A: np.ndarray, B: np.ndarray, ang: np.ndarray) -> np.ndarray:
    d = B - np.einsum("ij,ij->i", A, B)[:, None] * A
    nd = np.linalg.norm(d, axis=1)
    nd[nd == 0.0] = 1.0
    d = d / nd[:, None]
    return np.cos(ang)[:, None] * A + np.sin(ang)[:, None] * d


def eval_arc_sphere(tab: ArcTable, s) -> np.ndarray:
    """Point of the image curve at normalized arc length s (scalar or array)."""
    s_arr = np.atleast_1d(np.asarray(s, dtype=float)) % TWO_PI
    idx = np.clip(np.searchsorted(tab.s, s_arr, side="right") - 1, 0, len(tab.s) - 2)
    ang = (s_arr - tab.s[idx]) * (tab.total_length / TWO_PI)
    out = _slerp_from(tab.pts[idx], tab.pts[idx + 1], ang)
    out /= np.linalg.norm(out, axis=1)[:, None]
    return out[0] if np.ndim(s) == 0 else out


def eval_arc(tab: ArcTable, s: float) -> CylinderPoint:
    s = float(s) % TWO_PI
    X = eval_arc_sphere(tab, s)
    idx = int(np.clip(np.searchsorted(tab.s, s, side="right") - 1, 0, len(tab.s) - 2))
    return sphere_to_cylinder(X, tab.phi[idx])


def arc_param_sphere(tab: ArcTable, X: np.ndarray, eps: float = EPS_ON) -> float:
    """Normalized arc parameter of a sphere point on the curve, in [0, 2pi)."""
    X = np.asarray(X, dtype=float)
    A, B = tab.pts[:-1], tab.pts[1:]
    n = np.cross(A, B)
    nn = np.linalg.norm(n, axis=1)
    n = n / nn[:, None]
    perp = np.abs(n @ X)
    # angle from A towards B in the segment's plane
    tvec = np.cross(n, A)
    u = np.arctan2(tvec @ X, A @ X)
    L = tab.seg_len
    inside = (u >= -1e-12) & (u <= L + 1e-12)
    dA = np.arccos(np.clip(A @ X, -1.0, 1.0))
    dist = np.where(inside, np.arcsin(np.clip(perp, 0.0, 1.0)), dA)
    k = int(np.argmin(dist))
    if dist[k] > eps:
        raise NotOnWave(f"point is {dist[k]:.3g} away from wave {tab.wave}")
    off = float(np.clip(u[k], 0.0, L[k])) if inside[k] else 0.0
    s = tab.s[k] + off * TWO_PI / tab.total_length
    return float(s % TWO_PI)


def arc_param(tab: ArcTable, c: CylinderPoint, eps: float = EPS_ON) -> float:
    return arc_param_sphere(tab, project_to_sphere(c), eps)


def psi_map(w_from: WaveId, w_to: WaveId, c: CylinderPoint, n_knots: int = N_KNOTS) -> CylinderPoint:
    """Move c along w_from to w_to preserving normalized arc length."""
    if w_from.p != w_to.p:
        raise ValueError("psi_map needs the same P on both waves")
    s = arc_param(cached_table(w_from, n_knots), c)
    return eval_arc(cached_table(w_to, n_knots), s)


def sample_curve(w: WaveId, n_samples: int) -> tuple[np.ndarray, np.ndarray]:
    """(phi, Q) with phi uniform on [0, 2pi); square waves as their limit step function."""
    phi = np.linspace(0.0, TWO_PI, n_samples, endpoint=False)
    if w.is_square:
        return phi, np.asarray(square_q(w, phi), dtype=float)
    return phi, np.asarray(wave_q(w, phi), dtype=float)


def square_polyline(w: WaveId, n_per_side: int = 200) -> np.ndarray:
    """Square wave as a cylinder polyline including its vertical jumps.

    Returned over phi in [theta/2 - pi, theta/2 + pi], so the jumps sit at the
    ends and in the middle.
    """
    h = 0.5 * w.theta
    sgn = float(w.sign)
    rise = sgn * np.linspace(-1.0, 1.0, n_per_side)
    left = np.column_stack([np.full(n_per_side, h - math.pi), rise])
    top = np.column_stack([np.linspace(h - math.pi, h, n_per_side), np.full(n_per_side, sgn)])
    mid = np.column_stack([np.full(n_per_side, h), rise[::-1]])
    bot = np.column_stack([np.linspace(h, h + math.pi, n_per_side), np.full(n_per_side, -sgn)])
    right = np.column_stack([np.full(n_per_side, h + math.pi), rise])
    return np.vstack([left, top, mid, bot, right])


def smooth_polyline(w: WaveId, n: int = 4000) -> np.ndarray:
    """Smooth wave over phi in [theta/2 - pi, theta/2 + pi]."""
    phi = np.linspace(0.5 * w.theta - math.pi, 0.5 * w.theta + math.pi, n)
    return np.column_stack([phi, wave_q(w, phi)])


def signed_area(tab: ArcTable) -> float:
    """-integral of Q dphi over the first half of the curve (s in [0, pi]).

    Positive means the upper hump is traversed right to left, which is the
    counterclockwise sense of the cylinder picture.
    """
    if tab.wave.is_square:
        return float(tab.wave.sign) * math.pi
    m = tab.s <= math.pi + 1e-12
    phi, Q = tab.phi[m], tab.Q[m]
    return float(-np.sum(0.5 * (Q[1:] + Q[:-1]) * np.diff(phi)))


def total_length_check(w: WaveId, n_knots: int = N_KNOTS) -> float:
    """|L(n) - L(2n)|, the doubling check on the numerical length."""
    return abs(build_arc_table(w, n_knots).total_length - build_arc_table(w, 2 * n_knots).total_length)


def great_circle_oracle(theta: float, P: float, s) -> np.ndarray:
    """Closed form of the arc-length parametrization (test oracle).

    The image of every wave is a great circle with normal
    n = (-R sin(theta/2), R cos(theta/2), P sin(theta/2)) through
    e1 = pi(theta/2, 0), so gamma(s) = cos(s) e1 + sin(s) (e1 x n)/|n|.
    """
    c2, s2 = math.cos(0.5 * theta), math.sin(0.5 * theta)
    R = math.sqrt(max(0.0, 1.0 - P * P))
    e1 = np.array([c2, s2, 0.0])
    if theta <= EPS_ALG or abs(P) <= EPS_ALG:
        d = np.array([0.0, 0.0, 1.0])
    else:
        d = np.cross(e1, [-R * s2, R * c2, P * s2])
        d /= np.linalg.norm(d)
    s = np.asarray(s, dtype=float)
    return np.multiply.outer(np.cos(s), e1) + np.multiply.outer(np.sin(s), d)


def hausdorff(A: np.ndarray, B: np.ndarray) -> float:
    """Symmetric Hausdorff distance between two point clouds (rows)."""
    from scipy.spatial import cKDTree

    da, _ = cKDTree(B).query(A)
    db, _ = cKDTree(A).query(B)
    return float(max(da.max(), db.max()))


__all__ = [
    "WaveId", "CylinderPoint", "ArcTable", "wave_q", "square_q", "project_to_sphere",
    "build_arc_table", "cached_table", "table_for", "eval_arc", "eval_arc_sphere",
    "arc_param", "arc_param_sphere", "psi_map", "sample_curve", "signed_area",
    "great_circle_oracle", "hausdorff", "EPS_ARC",
]
