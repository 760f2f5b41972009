import math

import numpy as np
import pytest

from su2comm.comm_geom import ExtendedP
from su2comm.errors import DegenerateWave, NotOnWave, SquareWaveRequested
from su2comm.waves import (
    CylinderPoint,
    WaveId,
    arc_param,
    arc_param_sphere,
    build_arc_table,
    eval_arc,
    eval_arc_sphere,
    great_circle_oracle,
    hausdorff,
    project_to_sphere,
    psi_map,
    sample_curve,
    signed_area,
    table_for,
    total_length_check,
    wave_q,
)

R2 = 1 / math.sqrt(2)


def test_wave_q_examples():
    assert wave_q(WaveId.of(1.2, R2), 0.0) == pytest.approx(R2)
    phi = np.linspace(0, 2 * math.pi, 500)
    assert np.max(np.abs(wave_q(WaveId.of(math.pi, 0.99), phi))) < 0.15
    assert np.all(wave_q(WaveId.of(0.7, 1.0), phi) == 0.0)
    with pytest.raises(SquareWaveRequested):
        wave_q(WaveId(0.7, ExtendedP.zero_plus()), 0.1)


def test_degenerate_wave():
    with pytest.raises(DegenerateWave):
        WaveId.of(0.0, 1.0)


def test_project_to_sphere():
    assert np.allclose(project_to_sphere(CylinderPoint(2.3, 1.0)), [0, 0, 1])
    assert np.allclose(project_to_sphere(CylinderPoint(0.0, 0.0)), [1, 0, 0])
    assert np.allclose(project_to_sphere(CylinderPoint(math.pi / 2, 0.6)), [0, 0.8, 0.6])


def test_waves_pass_through_base_points(rng):
    for _ in range(1000):
        theta = float(rng.uniform(0.01, math.pi))
        P = float(rng.uniform(-0.999, 0.999))
        if abs(P) < 1e-6:
            continue
        w = WaveId.of(theta, P)
        assert abs(wave_q(w, theta / 2)) < 1e-12
        assert abs(wave_q(w, theta / 2 + math.pi)) < 1e-12


def test_square_wave_table():
    tab = build_arc_table(WaveId(math.pi, ExtendedP.zero_plus()))
    assert tab.total_length == pytest.approx(2 * math.pi, abs=1e-9)
    c = eval_arc(tab, math.pi)
    assert np.allclose(project_to_sphere(c), project_to_sphere(CylinderPoint(1.5 * math.pi, 0.0)), atol=1e-9)


def test_equator_wave():
    # P = 1 sweeps the equator; P > 0 runs with phi decreasing
    theta = 1.0
    tab = table_for(theta, 1.0)
    assert tab.total_length == pytest.approx(2 * math.pi)
    for s in (0.3, 1.7, 4.0):
        c = eval_arc(tab, s)
        assert c.Q == pytest.approx(0.0, abs=1e-12)
        assert math.remainder(c.phi - (theta / 2 - s), 2 * math.pi) == pytest.approx(0.0, abs=1e-9)


def test_eval_arc_start_and_roundtrip(rng):
    for theta, P in [(0.3, 0.4), (math.pi, -0.8), (2.0, 0.05)]:
        tab = table_for(theta, P)
        c0 = eval_arc(tab, 0.0)
        assert c0.Q == pytest.approx(0.0, abs=1e-12)
        assert math.remainder(c0.phi - theta / 2, 2 * math.pi) == pytest.approx(0.0, abs=1e-12)
        for s in rng.uniform(0, 2 * math.pi, 50):
            assert abs(math.remainder(arc_param(tab, eval_arc(tab, s)) - s, 2 * math.pi)) < 1e-6


def test_symmetric_half_length():
    tab = table_for(math.pi, 0.5)
    assert arc_param(tab, CylinderPoint(1.5 * math.pi, 0.0)) == pytest.approx(math.pi, abs=1e-4)


def test_off_curve():
    with pytest.raises(NotOnWave):
        arc_param(table_for(1.0, 0.5), CylinderPoint(0.0, -0.9))


def test_arc_table_monotone_and_converged():
    for theta, P in [(0.5, R2), (math.pi, 0.99), (1.2, -0.3)]:
        w = WaveId.of(theta, P)
        tab = build_arc_table(w)
        assert np.all(np.diff(tab.s) > 0)
        assert total_length_check(w) < 1e-6


def test_images_are_great_circles(rng):
    # every wave image is a great circle, so the closed form is an oracle
    for _ in range(20):
        theta = float(rng.uniform(0.05, math.pi))
        P = float(rng.uniform(-0.95, 0.95))
        s = np.linspace(0, 2 * math.pi, 97)
        got = eval_arc_sphere(table_for(theta, P), s)
        want = great_circle_oracle(theta, P, s)
        assert np.max(np.linalg.norm(got - want, axis=1)) < 1e-6


def test_orientation():
    assert signed_area(table_for(1.0, 0.4)) > 0
    assert signed_area(table_for(1.0, -0.4)) < 0
    assert signed_area(build_arc_table(WaveId(1.0, ExtendedP.zero_minus()))) < 0


def test_zero_plus_minus_same_image():
    a = build_arc_table(WaveId(1.3, ExtendedP.zero_plus()))
    b = build_arc_table(WaveId(1.3, ExtendedP.zero_minus()))
    s = np.linspace(0, 2 * math.pi, 2001)
    assert hausdorff(eval_arc_sphere(a, s), eval_arc_sphere(b, s)) < 1e-2
    # pointwise: every sample of one image lies on the other within 1e-6
    for X in eval_arc_sphere(b, s[::10]):
        arc_param_sphere(a, X, eps=1e-6)
    # the images are one meridian circle; check it exactly on both
    for tab in (a, b):
        X = eval_arc_sphere(tab, s)
        n = np.array([-math.sin(0.65), math.cos(0.65), 0.0])
        assert np.max(np.abs(X @ n)) < 1e-6


def test_psi_map():
    P = 0.4
    w1, w2, w3 = WaveId.of(0.5, P), WaveId.of(1.5, P), WaveId.of(2.8, P)
    c = eval_arc(table_for(0.5, P), 1.234)
    same = psi_map(w1, w1, c)
    assert np.allclose(project_to_sphere(same), project_to_sphere(c), atol=1e-6)
    base = psi_map(w1, w2, CylinderPoint(0.25, 0.0))
    assert np.allclose(project_to_sphere(base), project_to_sphere(CylinderPoint(0.75, 0.0)), atol=1e-6)
    direct = psi_map(w1, w3, c)
    composed = psi_map(w2, w3, psi_map(w1, w2, c))
    assert np.linalg.norm(project_to_sphere(direct) - project_to_sphere(composed)) < 1e-5
    with pytest.raises(ValueError):
        psi_map(w1, WaveId.of(1.0, 0.3), c)


def test_sample_curve_square():
    phi, Q = sample_curve(WaveId(math.pi, ExtendedP.zero_plus()), 8)
    assert len(phi) == 8 and set(np.unique(Q)) <= {-1.0, 0.0, 1.0}
