import math

import numpy as np
import pytest

from su2comm.comm_geom import level_residual
from su2comm.errors import CentralCommutator, NotOnLevelSet
from su2comm.homeo import pair_distance, phi_inv
from su2comm.quat_core import (
    ONE,
    GroupElement,
    TorusElement,
    commutator,
    conjugate,
    haar_sample,
    projectivize,
)
from su2comm.retract import (
    APoint,
    MPoint,
    centralizer_homotopy_j1,
    class_distance,
    diagonalize_commutator,
    mu_residual,
    random_apoint,
    retract_r,
    retract_r_prime,
    retract_rw,
    retract_rw_prime,
    rho,
    rho_extended,
    transition_tau,
    transition_tau_homotoped,
)

I = GroupElement.of(0, 1, 0, 0)
J = GroupElement.of(0, 0, 1, 0)


def _level_pair(rng, theta):
    return phi_inv(theta, projectivize(haar_sample(rng)))


def _conj(u, quad):
    return tuple(conjugate(u, e) for e in quad)


def test_retract_r_endpoints(rng):
    g, h = _level_pair(rng, 1.3)
    assert retract_r(g, h, 1.3, 1.0) == (g, h)
    assert commutator(*retract_r(g, h, 1.3, 0.0)).dist(ONE) < 1e-7
    g, h = _level_pair(rng, math.pi)
    assert level_residual(math.pi / 2, *retract_r(g, h, math.pi, 0.5)) < 1e-7


def test_retract_r_prime(rng):
    g, h = _level_pair(rng, math.pi / 3)
    assert retract_r_prime(g, h, math.pi / 3, 1.0) == (g, h)
    assert commutator(*retract_r_prime(g, h, math.pi / 3, 0.0)).dist(-ONE) < 1e-7
    g, h = _level_pair(rng, math.pi)
    for t in (0.0, 0.3, 0.8):
        assert level_residual(math.pi, *retract_r_prime(g, h, math.pi, t)) < 1e-7


def test_retract_levels(rng):
    for _ in range(200):
        theta = float(rng.uniform(0.05, math.pi))
        t = float(rng.uniform(0, 1))
        g, h = _level_pair(rng, theta)
        assert level_residual(t * theta, *retract_r(g, h, theta, t)) < 1e-7
        assert level_residual(t * theta + (1 - t) * math.pi, *retract_r_prime(g, h, theta, t)) < 1e-7


def test_retract_off_level():
    with pytest.raises(NotOnLevelSet):
        retract_r(I, I, 1.0, 0.5)


def test_retract_t_equivariant(rng):
    for _ in range(100):
        theta = float(rng.uniform(0.1, math.pi))
        t = float(rng.uniform(0, 1))
        u = TorusElement(float(rng.uniform(0, 2 * math.pi))).element()
        g, h = _level_pair(rng, theta)
        lhs = retract_r(conjugate(u, g), conjugate(u, h), theta, t)
        rhs = tuple(conjugate(u, e) for e in retract_r(g, h, theta, t))
        assert pair_distance(lhs, rhs) < 1e-6


def test_diagonalize(rng):
    g, h = _level_pair(rng, 1.0)
    u, theta = diagonalize_commutator(g, h)
    assert u.dist(ONE) < 1e-12 and theta == pytest.approx(1.0)
    x, y = J, TorusElement(0.2).element()
    u, theta = diagonalize_commutator(x, y)
    assert conjugate(u, commutator(x, y)).dist(GroupElement.of(math.cos(theta), math.sin(theta))) < 1e-9
    with pytest.raises(CentralCommutator):
        diagonalize_commutator(I, I)


def test_rw_equivariance(rng):
    for _ in range(100):
        x, y = haar_sample(rng), haar_sample(rng)
        u = haar_sample(rng)
        t = float(rng.uniform(0, 1))
        for fn in (retract_rw, retract_rw_prime):
            lhs = fn(conjugate(u, x), conjugate(u, y), t)
            rhs = tuple(conjugate(u, e) for e in fn(x, y, t))
            assert pair_distance(lhs, rhs) < 1e-6
    x, y = haar_sample(rng), haar_sample(rng)
    assert pair_distance(retract_rw(x, y, 1.0), (x, y)) < 1e-12
    assert commutator(*retract_rw(x, y, 0.0)).dist(ONE) < 1e-6


def test_rho(rng):
    ap = random_apoint(rng)
    assert class_distance(rho(ap, 1.0), ap) < 1e-7
    end = rho(ap, 0.0).reps
    assert commutator(end[0], end[1]).dist(ONE) < 1e-6
    assert commutator(end[2], end[3]).dist(-ONE) < 1e-6
    for t in np.linspace(0, 1, 50):
        assert mu_residual(rho(ap, float(t)).reps) < 1e-6
        assert rho(ap, float(t)).theta == pytest.approx(t * ap.theta, abs=1e-6)


def test_rho_extended_identity_on_a0(rng):
    x = haar_sample(rng)
    x2, y2 = I, J
    ap = APoint((x, x, x2, y2))
    assert rho_extended(ap, 0.3) is ap


def test_apoint_rejects_off_mu():
    with pytest.raises(NotOnLevelSet):
        APoint((I, J, I, J))
    with pytest.raises(NotOnLevelSet):
        MPoint((I, J, I, J))


def test_j1():
    g, h = centralizer_homotopy_j1(I, 0.0)
    assert g == I and h.dist(ONE) < 1e-15
    g, h = centralizer_homotopy_j1(I, 1.0)
    assert h.dist(-ONE) < 1e-12
    assert centralizer_homotopy_j1(ONE, 0.5)[1].dist(I) < 1e-12


def test_j1_commutes(rng):
    for _ in range(100):
        g = haar_sample(rng)
        if min(g.dist(ONE), g.dist(-ONE)) < 1e-3:
            continue
        for t in np.linspace(0, 1, 11):
            assert commutator(*centralizer_homotopy_j1(g, float(t))).dist(ONE) < 1e-10


def test_tau_invariance(rng):
    for _ in range(30):
        ap = random_apoint(rng)
        u = TorusElement(float(rng.uniform(0, 2 * math.pi))).element()
        ap2 = APoint(_conj(u, ap.reps))
        assert transition_tau(ap).dist(transition_tau(ap2)) < 1e-6
        assert transition_tau_homotoped(ap).dist(transition_tau_homotoped(ap2)) < 1e-6


def test_tau_homotoped_unwinds(rng):
    for _ in range(20):
        theta = float(rng.uniform(0.1, math.pi - 0.1))
        p, p2 = projectivize(haar_sample(rng)), projectivize(haar_sample(rng))
        ap = APoint(phi_inv(theta, p) + phi_inv(math.pi - theta, p2))
        want = projectivize(p2.rep.inv() * p.rep)
        assert transition_tau_homotoped(ap).dist(want) < 1e-6


def test_tau_continuity(rng):
    p, p2 = projectivize(haar_sample(rng)), projectivize(haar_sample(rng))
    prev = None
    for theta in 1.0 + 1e-4 * np.arange(6):
        ap = APoint(phi_inv(theta, p) + phi_inv(math.pi - theta, p2))
        cur = (transition_tau(ap), transition_tau_homotoped(ap))
        if prev is not None:
            assert cur[0].dist(prev[0]) < 1e-3 and cur[1].dist(prev[1]) < 1e-3
        prev = cur


def test_class_distance(rng):
    a = random_apoint(rng)
    assert class_distance(a, a) < 1e-9
    u = haar_sample(rng)
    assert class_distance(a, APoint(_conj(u, a.reps))) < 1e-4
    b = random_apoint(rng)
    assert class_distance(a, b) > 1e-2
