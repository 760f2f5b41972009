"""The trace functional f = 2 Re [g, h], its gradient, and a discrete flow.

Tangent vectors at (g, h) are left translated: (u, v) stands for
(g u, h v).  The metric on each factor is B(u, v) = -2 Re(u v) = 2 u.v, for
which {i, j, k}/sqrt(2) is orthonormal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .quat_core import GroupElement, LieVector, ad, commutator, exp

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class TangentPair:
    u: LieVector
    v: LieVector

    def as_array(self) -> np.ndarray:
        return np.concatenate([self.u.as_array(), self.v.as_array()])

    @classmethod
    def from_array(cls, a) -> "TangentPair":
        return cls(LieVector.from_array(a[:3]), LieVector.from_array(a[3:]))

    def norm(self) -> float:
        """Norm for the metric B (twice the Euclidean norm squared, rooted)."""
        return math.sqrt(2.0) * float(np.linalg.norm(self.as_array()))


class Direction(str, Enum):
    ASCEND = "ascend"
    DESCEND = "descend"


class Termination(str, Enum):
    GRAD_TOL = "GradTol"
    F_TOL = "FTol"
    MAX_STEPS = "MaxSteps"


@dataclass(frozen=True)
class FlowConfig:
    step: float = 0.02
    max_steps: int = 50_000
    grad_tol: float = 1e-8
    f_tol: float = 1e-8
    direction: Direction = Direction.ASCEND
    method: str = "euler"  # or "rk4"

    def __post_init__(self):
        if self.step <= 0 or self.grad_tol <= 0 or self.f_tol <= 0 or self.max_steps < 0:
            raise ValueError("step and tolerances must be positive")
        object.__setattr__(self, "direction", Direction(self.direction))
        if self.method not in ("euler", "rk4"):
            raise ValueError(f"unknown method {self.method!r}")


@dataclass
class FlowTrace:
    states: list = field(default_factory=list)  # ((g, h), f, |grad f|)
    steps: list = field(default_factory=list)   # accepted step sizes
    terminated_by: Termination = Termination.MAX_STEPS

    @property
    def final_f(self) -> float:
        return self.states[-1][1]

    @property
    def final_pair(self) -> tuple[GroupElement, GroupElement]:
        return self.states[-1][0]

    @property
    def n_steps(self) -> int:
        return len(self.steps)


def f_value(g: GroupElement, h: GroupElement) -> float:
    return 2.0 * commutator(g, h).re


def _sub(a: LieVector, b: LieVector) -> LieVector:
    return LieVector(a.x - b.x, a.y - b.y, a.z - b.z)


def dnu(g: GroupElement, h: GroupElement, tp: TangentPair) -> LieVector:
    """(u^{h^-1} - u + v - v^{g^-1})^{hg} with x^k = Ad(k) x."""
    u, v = tp.u, tp.v
    inner = _sub(ad(h.inv(), u), u) + _sub(v, ad(g.inv(), v))
    return ad(h * g, inner)


def df(g: GroupElement, h: GroupElement, tp: TangentPair) -> float:
    """tr(nu dnu) = 2 Re(nu dnu)."""
    nu = commutator(g, h)
    d = dnu(g, h, tp).as_quaternion()
    return 2.0 * (nu.q * d).re


def _basis() -> list[TangentPair]:
    out = []
    for k in range(6):
        e = np.zeros(6)
        e[k] = 1.0 / SQRT2
        out.append(TangentPair.from_array(e))
    return out


_BASIS = _basis()


def metric_B(a: TangentPair, b: TangentPair) -> float:
    return 2.0 * float(a.as_array() @ b.as_array())


def grad_f(g: GroupElement, h: GroupElement) -> TangentPair:
    """Solve B(grad f, e_k) = df(e_k) over the 6 basis vectors."""
    gram = np.array([[metric_B(a, b) for b in _BASIS] for a in _BASIS])
    rhs = np.array([df(g, h, e) for e in _BASIS])
    coef = np.linalg.solve(gram, rhs)
    vec = sum(c * e.as_array() for c, e in zip(coef, _BASIS))
    return TangentPair.from_array(vec)


def grad_f_closed_form(g: GroupElement, h: GroupElement) -> TangentPair:
    """Closed form used as an oracle: with vec(.) the imaginary part,

    grad_u = -vec(h g^-1 h^-1 g - g^-1 h^-1 g h)
    grad_v = -vec(g^-1 h^-1 g h - h^-1 g h g^-1).
    """
    gi, hi = g.inv().q, h.inv().q
    gq, hq = g.q, h.q
    a = hq * gi * hi * gq - gi * hi * gq * hq
    b = gi * hi * gq * hq - hi * gq * hq * gi
    return TangentPair(LieVector(-a.x, -a.y, -a.z), LieVector(-b.x, -b.y, -b.z))


def _advance(g: GroupElement, h: GroupElement, tp: TangentPair, dt: float):
    return g * exp(tp.u.scale(dt)), h * exp(tp.v.scale(dt))


def _direction_field(cfg: FlowConfig, g: GroupElement, h: GroupElement) -> TangentPair:
    gr = grad_f(g, h)
    if cfg.direction is Direction.DESCEND:
        return TangentPair(gr.u.scale(-1.0), gr.v.scale(-1.0))
    return gr


def _rk4_field(cfg: FlowConfig, g, h, dt) -> TangentPair:
    k1 = _direction_field(cfg, g, h).as_array()
    k2 = _direction_field(cfg, *_advance(g, h, TangentPair.from_array(k1), 0.5 * dt)).as_array()
    k3 = _direction_field(cfg, *_advance(g, h, TangentPair.from_array(k2), 0.5 * dt)).as_array()
    k4 = _direction_field(cfg, *_advance(g, h, TangentPair.from_array(k3), dt)).as_array()
    return TangentPair.from_array((k1 + 2 * k2 + 2 * k3 + k4) / 6.0)


def flow(g: GroupElement, h: GroupElement, cfg: FlowConfig = FlowConfig()) -> FlowTrace:
    """Discrete gradient flow with exponential steps and step halving.

    A step is accepted when f does not decrease by more than 1e-12 (ascend),
    resp. does not increase (descend).  The step size is reset to cfg.step
    after every accepted step.
    """
    sign = 1.0 if cfg.direction is Direction.ASCEND else -1.0
    target = 2.0 * sign
    f = f_value(g, h)
    gr = grad_f(g, h)
    trace = FlowTrace()
    trace.states.append(((g, h), f, gr.norm()))
    while True:
        if abs(f - target) < cfg.f_tol:
            trace.terminated_by = Termination.F_TOL
            return trace
        if gr.norm() < cfg.grad_tol:
            trace.terminated_by = Termination.GRAD_TOL
            return trace
        if trace.n_steps >= cfg.max_steps:
            trace.terminated_by = Termination.MAX_STEPS
            return trace
        dt = cfg.step
        while True:
            d = _rk4_field(cfg, g, h, dt) if cfg.method == "rk4" else (
                gr if sign > 0 else TangentPair(gr.u.scale(-1.0), gr.v.scale(-1.0)))
            g2, h2 = _advance(g, h, d, dt)
            f2 = f_value(g2, h2)
            if sign * (f2 - f) >= -1e-12 or dt < 1e-14:
                break
            dt *= 0.5
        g, h, f = g2, h2, f2
        gr = grad_f(g, h)
        trace.steps.append(dt)
        trace.states.append(((g, h), f, gr.norm()))


def path_point(trace: FlowTrace, k: int, tau: float, cfg: FlowConfig = FlowConfig()):
    """Point at fraction tau in [0, 1] of the k-th accepted Euler step."""
    (g, h), _, _ = trace.states[k]
    gr = grad_f(g, h)
    if cfg.direction is Direction.DESCEND:
        gr = TangentPair(gr.u.scale(-1.0), gr.v.scale(-1.0))
    return _advance(g, h, gr, tau * trace.steps[k])


def dnu_matrix(g: GroupElement, h: GroupElement) -> np.ndarray:
    """3 x 6 matrix of dnu in the coordinate basis of the Lie algebra pair."""
    cols = []
    for k in range(6):
        e = np.zeros(6)
        e[k] = 1.0
        cols.append(dnu(g, h, TangentPair.from_array(e)).as_array())
    return np.column_stack(cols)
