from fractions import Fraction

import pytest

from su2comm.errors import DualityFailure, UnresolvedExtension
from su2comm.homalg.groups import GradedGroup
from su2comm.homalg.ring import (
    atiyah_ring,
    bernoulli,
    gysin_lambda,
    gysin_solve,
    ring_table_check,
    solve_lambda,
    thaddeus_check,
    wall_invariants,
)


def test_bernoulli_small():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_against_sympy():
    sympy = pytest.importorskip("sympy")
    for n in range(2, 30):
        assert bernoulli(n) == Fraction(str(sympy.bernoulli(n)))


def test_thaddeus():
    assert thaddeus_check(3, 2) == 4
    # x^3 = x (x^2) = x (4 y) = 4 z
    gens, prods = atiyah_ring()
    assert prods[("x", "x")]["y"] * prods[("x", "y")]["z"] == thaddeus_check(3, 2)
    with pytest.raises(ValueError):
        thaddeus_check(0, 3)


def test_gysin():
    assert gysin_lambda(4) == GradedGroup.of({0: [0], 4: [4], 7: [0]})
    assert gysin_lambda(1)[4] == ()
    assert solve_lambda((4,)) == 4
    with pytest.raises(UnresolvedExtension):
        solve_lambda((3, 3))


def test_gysin_unresolved():
    base = GradedGroup.of({0: [0], 1: [2], 2: [0]})
    with pytest.raises(UnresolvedExtension):
        gysin_solve(base, {0: [[2]]})


def test_ring_table():
    assert ring_table_check(*atiyah_ring())
    assert ring_table_check(*atiyah_ring(lam=2))
    with pytest.raises(DualityFailure) as e:
        ring_table_check(*atiyah_ring(s12=0))
    assert e.value.degree == 3


def test_ring_table_signs():
    gens, prods = atiyah_ring()
    prods = dict(prods)
    prods[("s2", "s1")] = {"z": 1}  # odd classes must anticommute
    assert not ring_table_check(gens, prods)
    gens, prods = atiyah_ring()
    prods = dict(prods)
    prods[("s1", "s1")] = {"z": 1}
    assert not ring_table_check(gens, prods)


def test_wall():
    w = wall_invariants(2, 12, 4)
    assert (w.d, w.p, w.congruence_ok) == (4, -8, True)
    assert wall_invariants(0, 0, 6).congruence_ok
    assert not wall_invariants(0, 0, 1).congruence_ok
    # the x^2 = 2 y variant: p = -16 and -16 - 8 = -24, so the congruence holds
    w = wall_invariants(2, 12, 2)
    assert (w.p, w.congruence_ok) == (-16, True)
    assert not wall_invariants(2, 11, 4).congruence_ok
