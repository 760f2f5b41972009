import pytest

from su2comm.homalg.snf import (
    det,
    integer_nullspace,
    invariant_factors_of_cokernel,
    inverse_unimodular,
    matmul,
    smith_normal_form,
    subquotient,
)

sympy = pytest.importorskip("sympy")


def _check_post(A, r):
    assert matmul(matmul(r.U, A), r.V) == r.D
    assert abs(det(r.U)) == 1 and abs(det(r.V)) == 1
    d = r.diagonal
    for i, row in enumerate(r.D):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    nz = [x for x in d if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert d[len(nz):] == [0] * (len(d) - len(nz))


def test_examples():
    r = smith_normal_form([[2, 0], [0, 3]])
    assert r.diagonal == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == [0, 0]
    r = smith_normal_form([[1, 0], [0, 1]])
    assert r.diagonal == [1, 1]


def test_random_postconditions(rng):
    for _ in range(300):
        m, n = int(rng.integers(1, 9)), int(rng.integers(1, 9))
        A = rng.integers(-20, 21, size=(m, n)).tolist()
        r = smith_normal_form(A)
        _check_post(A, r)


def test_against_sympy(rng):
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    for _ in range(40):
        m, n = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        A = rng.integers(-9, 10, size=(m, n)).tolist()
        S = sympy_snf(sympy.Matrix(A), domain=sympy.ZZ)
        want = sorted(abs(int(S[i, i])) for i in range(min(m, n)))
        assert sorted(smith_normal_form(A).diagonal) == want


def test_big_integers():
    A = [[10**30, 2], [4, 6]]
    r = smith_normal_form(A)
    _check_post(A, r)
    assert r.diagonal[0] == 2


def test_det():
    assert det([[2, 1], [1, 1]]) == 1
    assert det([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0
    A = [[3, 1, 4], [1, 5, 9], [2, 6, 5]]
    assert det(A) == int(sympy.Matrix(A).det())


def test_cokernel_and_nullspace():
    assert sorted(invariant_factors_of_cokernel([[2, 0], [0, 4]], 2)) == [2, 4]
    assert invariant_factors_of_cokernel([[1, 0]], 1) == []
    assert invariant_factors_of_cokernel([[0, 0]], 1) == [0]
    N = integer_nullspace([[1, 2, 3]], 3)  # basis vectors are the columns
    assert len(N) == 3 and len(N[0]) == 2
    for v in zip(*N):
        assert sum(a * b for a, b in zip([1, 2, 3], v)) == 0


def test_inverse_unimodular(rng):
    r = smith_normal_form(rng.integers(-5, 6, size=(4, 4)).tolist())
    Ui = inverse_unimodular(r.U)
    assert matmul(r.U, Ui) == [[int(i == j) for j in range(4)] for i in range(4)]


def test_subquotient():
    # <e1, e2> / <2 e1, 4 e2> = Z/2 + Z/4
    assert subquotient([[1, 0], [0, 1]], [[2, 0], [0, 4]], 2) == [2, 4]
