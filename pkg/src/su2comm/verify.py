"""Named invariant suites, each reporting its largest observed defect."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from .comm_geom import canonical_residual, k_factor, k_factor_ratio, level_residual, q_of, to_coords
from .homeo import phi_fwd, phi_inv, t_equivariance_defect
from .quat_core import (
    ONE,
    LieVector,
    TorusElement,
    commutator,
    exp,
    haar_sample,
    log,
    projectivize,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_defect: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.max_defect <= self.tol)

    def to_json(self) -> dict:
        d = asdict(self)
        d["pass"] = self.passed
        return d


def _check(name: str, defects, tol: float, override: float | None) -> CheckResult:
    d = float(np.max(np.asarray(defects, dtype=float))) if len(defects) else 0.0
    return CheckResult(name, d, tol if override is None else override)


def suite_quat(rng: np.random.Generator, tol: float | None = None, n: int = 500) -> list[CheckResult]:
    gs = [haar_sample(rng) for _ in range(n)]
    hs = [haar_sample(rng) for _ in range(n)]
    assoc = [((g * h) * k).dist(g * (h * k)) for g, h, k in zip(gs, hs, gs[1:] + gs[:1])]
    inv = [(g * g.inv()).dist(ONE) for g in gs]
    roundtrip = []
    for g in gs:
        try:
            roundtrip.append(exp(log(g)).dist(g))
        except Exception:
            pass
    xs = [LieVector.from_array(rng.normal(size=3)) for _ in range(n)]
    exp_norm = [abs(float(np.linalg.norm(exp(x).as_array())) - 1.0) for x in xs]
    return [
        _check("associativity", assoc, 1e-12, tol),
        _check("inverse", inv, 1e-12, tol),
        _check("exp_log_roundtrip", roundtrip, 1e-10, tol),
        _check("exp_unit_norm", exp_norm, 1e-12, tol),
    ]


def suite_geom(rng: np.random.Generator, tol: float | None = None, n: int = 500) -> list[CheckResult]:
    level, canon, kdiff = [], [], []
    for _ in range(n):
        theta = float(rng.uniform(0.05, math.pi))
        g, h = phi_inv(theta, projectivize(haar_sample(rng)))
        level.append(level_residual(theta, g, h))
        canon.append(abs(canonical_residual(to_coords(theta, g, h))))
        phi = float(rng.uniform(0.0, 2 * math.pi))
        kdiff.append(abs(k_factor(phi, theta) - k_factor_ratio(phi, theta)))
    qdiff = []
    for _ in range(n):
        theta = float(rng.uniform(0.05, math.pi))
        P = float(rng.uniform(-0.99, 0.99))
        if abs(P) < 1e-3:
            continue
        phi = float(rng.uniform(0.0, 2 * math.pi))
        Q = q_of(P, phi, theta)
        R, S = math.sqrt(1 - P * P), math.sqrt(max(0.0, 1 - Q * Q))
        v = complex(math.cos(phi), math.sin(phi))
        pq, rs = P * Q, R * S
        qdiff.append(abs((pq - v * rs) - complex(math.cos(theta), math.sin(theta)) * (pq - v.conjugate() * rs)))
    return [
        _check("phi_inv_level", level, 1e-7, tol),
        _check("canonical_relation", canon, 1e-8, tol),
        _check("q_formula_on_level", qdiff, 1e-8, tol),
        _check("k_closed_forms", kdiff, 1e-12, tol),
    ]


def suite_homeo(rng: np.random.Generator, tol: float | None = None, n: int = 300) -> list[CheckResult]:
    rt, eq = [], []
    for _ in range(n):
        theta = float(rng.choice([0.3, math.pi / 2, math.pi]))
        p = projectivize(haar_sample(rng))
        rt.append(phi_fwd(theta, *phi_inv(theta, p)).dist(p))
        eq.append(t_equivariance_defect(theta, TorusElement(float(rng.uniform(0, 2 * math.pi))), p))
    return [
        _check("roundtrip", rt, 1e-6, tol),
        _check("t_equivariance", eq, 1e-7, tol),
    ]


def suite_retract(rng: np.random.Generator, tol: float | None = None, n: int = 20) -> list[CheckResult]:
    from .quat_core import conjugate
    from .retract import APoint, mu_residual, random_apoint, retract_r, retract_r_prime, rho, transition_tau

    lv, mu_d, tau_d = [], [], []
    for _ in range(n):
        theta = float(rng.uniform(0.1, math.pi - 0.1))
        g, h = phi_inv(theta, projectivize(haar_sample(rng)))
        t = float(rng.uniform(0.0, 1.0))
        lv.append(level_residual(t * theta, *retract_r(g, h, theta, t)))
        lv.append(level_residual(t * theta + (1 - t) * math.pi, *retract_r_prime(g, h, theta, t)))
    for _ in range(max(2, n // 5)):
        ap = random_apoint(rng)
        for t in np.linspace(0.0, 1.0, 6):
            mu_d.append(mu_residual(rho(ap, float(t)).reps))
        u = TorusElement(float(rng.uniform(0, 2 * math.pi))).element()
        ap2 = APoint(tuple(conjugate(u, e) for e in ap.reps))
        tau_d.append(transition_tau(ap).dist(transition_tau(ap2)))
    return [
        _check("retraction_levels", lv, 1e-7, tol),
        _check("rho_preserves_mu", mu_d, 1e-6, tol),
        _check("tau_representative_invariance", tau_d, 1e-6, tol),
    ]


def suite_flow(rng: np.random.Generator, tol: float | None = None, n: int = 10) -> list[CheckResult]:
    from .gradflow import FlowConfig, TangentPair, _advance, dnu, flow, grad_f, grad_f_closed_form

    grad_d, ratio_d, conv_d = [], [], []
    for _ in range(n):
        g, h = haar_sample(rng), haar_sample(rng)
        grad_d.append(float(np.max(np.abs(grad_f(g, h).as_array() - grad_f_closed_form(g, h).as_array()))))
        tp = TangentPair.from_array(rng.normal(size=6))
        exact = dnu(g, h, tp).as_array()
        errs = []
        for eps in (1e-3, 5e-4):
            g2, h2 = _advance(g, h, tp, eps)
            nu0, nu1 = commutator(g, h), commutator(g2, h2)
            fd = (nu0.inv() * nu1).vec() / eps
            errs.append(float(np.linalg.norm(fd - exact)))
        ratio_d.append(abs(errs[0] / errs[1] - 2.0))
        tr = flow(g, h, FlowConfig())
        conv_d.append(abs(tr.final_f - 2.0))
    return [
        _check("grad_closed_form", grad_d, 1e-10, tol),
        _check("dnu_richardson_ratio", ratio_d, 0.1, tol),
        _check("flow_reaches_f2", conv_d, 1e-6, tol),
    ]


def suite_homalg(rng: np.random.Generator, tol: float | None = None, n: int = 200) -> list[CheckResult]:
    from .homalg import smith_normal_form, solve_all_bundled, thaddeus_check
    from .homalg.snf import det, matmul

    out = []
    for name, rep in solve_all_bundled().items():
        # the collapsed Atiyah space is an intermediate, not one of the six tables
        prefix = "intermediate" if name == "atiyah_A" else "table"
        out.append(_check(f"{prefix}_{name}", [0.0 if rep["checks"].get("expected_match") else 1.0], 0.0, None))
        if "total" in rep:
            out.append(_check(f"table_{rep['total']['name']}",
                              [0.0 if rep["checks"].get("expected_total_match") else 1.0], 0.0, None))
    snf_bad = []
    for _ in range(n):
        m, k = int(rng.integers(1, 9)), int(rng.integers(1, 9))
        A = rng.integers(-20, 21, size=(m, k)).tolist()
        r = smith_normal_form(A)
        ok = matmul(matmul(r.U, A), r.V) == r.D and abs(det(r.U)) == 1 and abs(det(r.V)) == 1
        snf_bad.append(0.0 if ok else 1.0)
    out.append(_check("snf_postconditions", snf_bad, 0.0, None))
    out.append(_check("thaddeus_3_2", [abs(float(thaddeus_check(3, 2)) - 4.0)], 0.0, None))
    return out


SUITES: dict[str, Callable] = {
    "quat": suite_quat,
    "geom": suite_geom,
    "homeo": suite_homeo,
    "retract": suite_retract,
    "flow": suite_flow,
    "homalg": suite_homalg,
}


def run_suites(names: list[str], seed: int, tol: float | None = None) -> dict[str, list[CheckResult]]:
    out = {}
    for name in names:
        rng = np.random.default_rng([seed, list(SUITES).index(name)])
        out[name] = SUITES[name](rng, tol)
    return out

