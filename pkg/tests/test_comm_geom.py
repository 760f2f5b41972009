import cmath
import math

import numpy as np
import pytest

from su2comm.comm_geom import (
    ExtendedP,
    ThetaCoords,
    canonical_residual,
    k_factor,
    k_factor_ratio,
    level_residual,
    p_zero_fiber_check,
    p_zero_fiber_condition,
    q_of,
    to_coords,
    y_sphere_chart,
)
from su2comm.errors import AmbiguousAtPZero, NotInYTheta, NotOnLevelSet
from su2comm.homeo import phi_inv
from su2comm.quat_core import GroupElement, TorusElement, haar_sample, projectivize

I = GroupElement.of(0, 1, 0, 0)
J = GroupElement.of(0, 0, 1, 0)


def _pair(theta, P, a, Q, b):
    half = cmath.exp(0.5j * theta)
    R, S = math.sqrt(1 - P * P), math.sqrt(1 - Q * Q)
    return GroupElement.from_zw(P * half, R * a), GroupElement.from_zw(Q / half, S * b)


def test_to_coords_i_j():
    # i is the north pole of Y_pi, so P = 1 and a is undetermined
    c = to_coords(math.pi, I, J)
    assert c.P == pytest.approx(1.0)
    assert c.a_undetermined
    assert c.Q == pytest.approx(0.0, abs=1e-15)
    assert c.S == pytest.approx(1.0)
    assert c.b.angle == pytest.approx(0.0)


def test_to_coords_off_level():
    # a torus partner commutes with e^{i theta/2}; j does not (it gives e^{i theta})
    theta = 0.8
    g = GroupElement.from_zw(cmath.exp(0.5j * theta), 0)
    with pytest.raises(NotOnLevelSet):
        to_coords(theta, g, TorusElement(1.3).element())
    assert level_residual(theta, g, J) < 1e-15


def test_to_coords_reconstructs(rng):
    for _ in range(100):
        theta = float(rng.uniform(0.1, math.pi))
        g, h = phi_inv(theta, projectivize(haar_sample(rng)))
        g2, h2 = to_coords(theta, g, h).pair()
        assert max(g.dist(g2), h.dist(h2)) < 1e-12
        assert abs(canonical_residual(to_coords(theta, g, h))) < 1e-9


def test_canonical_residual_examples():
    r = 1 / math.sqrt(2)
    c = ThetaCoords(math.pi, r, r, TorusElement(0.0), TorusElement(0.0))
    assert abs(canonical_residual(c)) < 1e-15
    c = ThetaCoords(0.9, 1.0, 0.0, TorusElement(0.3), TorusElement(1.1))
    assert abs(canonical_residual(c)) < 1e-15


def test_k_factor():
    for theta in (0.2, 1.0, math.pi):
        assert k_factor(0.0, theta) == pytest.approx(1.0)
        assert k_factor(theta / 2, theta) == pytest.approx(0.0, abs=1e-15)
    phi = np.linspace(0, 2 * math.pi, 10_000)
    for theta in (0.1, 1.3, math.pi):
        assert np.max(np.abs(k_factor(phi, theta) - k_factor_ratio(phi, theta))) < 1e-12


def test_q_of_examples():
    r = 1 / math.sqrt(2)
    for theta in (0.3, 1.7, math.pi):
        assert q_of(r, 0.0, theta) == pytest.approx(r)
        assert q_of(1.0, 0.4, theta) == 0.0
        assert q_of(-1.0, 0.4, theta) == 0.0
        assert q_of(0.4, theta / 2, theta) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(AmbiguousAtPZero):
        q_of(0.0, 1.0, 1.0)


def test_q_of_on_level(rng):
    worst = 0.0
    for _ in range(10_000):
        theta = float(rng.uniform(0.1, math.pi))
        P = float(rng.uniform(0.05, 0.95)) * float(rng.choice([-1, 1]))
        phi = float(rng.uniform(0, 2 * math.pi))
        if min(abs(math.remainder(phi - theta / 2, math.pi)), 1.0) < 1e-3:
            continue
        Q = q_of(P, phi, theta)
        g, h = _pair(theta, P, 1.0, Q, cmath.exp(-1j * phi))
        worst = max(worst, level_residual(theta, g, h))
        k = k_factor(phi, theta)
        if Q != 0 and k != 0:
            assert math.copysign(1, Q) == math.copysign(1, P * k)
    assert worst < 1e-8


def test_y_sphere_chart():
    theta = 1.1
    half = cmath.exp(0.5j * theta)
    assert np.allclose(y_sphere_chart(theta, GroupElement.from_zw(half, 0)), [0, 0, 1])
    assert np.allclose(y_sphere_chart(theta, GroupElement.from_zw(-half, 0)), [0, 0, -1])
    assert np.allclose(y_sphere_chart(theta, J), [1, 0, 0])
    with pytest.raises(NotInYTheta):
        y_sphere_chart(theta, I)


def test_y_sphere_chart_unit(rng):
    for _ in range(200):
        theta = float(rng.uniform(0.1, math.pi))
        g, _ = phi_inv(theta, projectivize(haar_sample(rng)))
        assert abs(np.linalg.norm(y_sphere_chart(theta, g)) - 1) < 1e-12


def test_p_zero_fiber():
    theta = 0.9
    a = TorusElement(0.4)
    assert p_zero_fiber_check(a, GroupElement.from_zw(cmath.exp(-0.5j * theta), 0), theta)
    b = a.unit() * cmath.exp(-0.5j * theta)
    assert p_zero_fiber_check(a, GroupElement.from_zw(0, b), theta)
    assert not p_zero_fiber_check(TorusElement(0.0), J, math.pi / 2)


def test_p_zero_fiber_condition_agrees(rng):
    for _ in range(300):
        theta = float(rng.uniform(0.1, math.pi))
        a = TorusElement(float(rng.uniform(0, 2 * math.pi)))
        Q = float(rng.choice([0.0, 1.0, float(rng.uniform(-1, 1))]))
        beta = float(rng.uniform(0, 2 * math.pi))
        if rng.random() < 0.5:
            beta = a.angle - theta / 2 + math.pi * float(rng.integers(0, 2))
        h = GroupElement.from_zw(Q * cmath.exp(-0.5j * theta),
                                 math.sqrt(1 - Q * Q) * cmath.exp(1j * beta))
        assert p_zero_fiber_check(a, h, theta) == p_zero_fiber_condition(a, h, theta)


def test_extended_p():
    assert ExtendedP.parse("0+").sign == 1 and ExtendedP.parse("0+").is_zero
    assert ExtendedP.parse("0-").sign == -1
    assert ExtendedP.parse("-0.3").sign == -1
    with pytest.raises(ValueError):
        ExtendedP.parse("abc")
