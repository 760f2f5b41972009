"""Smith normal form over the integers, exact (Python ints)."""

from __future__ import annotations

from dataclasses import dataclass

Matrix = list[list[int]]


@dataclass(frozen=True)
class SNFResult:
    D: Matrix
    U: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def det(a: Matrix) -> int:
    """Exact determinant by fraction-free elimination (Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(A) -> SNFResult:
    """U A V = D with U, V unimodular and d1 | d2 | ... on the diagonal."""
    a = [[int(x) for x in row] for row in A]
    m = len(a)
    n = len(a[0]) if m else 0
    U, V = identity(m), identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row_dst += c * row_src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    for t in range(min(m, n)):
        # pick the smallest nonzero entry of the trailing block as pivot
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    add_row(t, i, -q)
                if a[i][t] != 0:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    add_col(t, j, -q)
                if a[t][j] != 0:
                    done = False
            if not done:
                continue
            # enforce divisibility into the rest of the block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if best is None:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
    return SNFResult(a, U, V)


def invariant_factors_of_cokernel(A: Matrix, n_rows: int) -> list[int]:
    """Z^n_rows / (column span of A) as invariant factors (0 for Z)."""
    if n_rows == 0:
        return []
    if not A or not A[0]:
        return [0] * n_rows
    d = smith_normal_form(A).diagonal
    out = [x for x in d if x not in (0, 1)]
    out += [0] * (n_rows - sum(1 for x in d if x != 0))
    return out


def integer_nullspace(A: Matrix, n_cols: int) -> Matrix:
    """Basis of {x in Z^n : A x = 0}, as columns of the returned n x k matrix."""
    if not A:
        return identity(n_cols)
    r = smith_normal_form(A)
    k = r.rank
    return [[r.V[i][j] for j in range(k, n_cols)] for i in range(n_cols)]


def lattice_basis(G: Matrix, n: int) -> Matrix:
    """Basis (n x r columns) of the lattice spanned by the columns of G."""
    if not G or not G[0]:
        return [[] for _ in range(n)]
    r = smith_normal_form(G)
    Uinv = inverse_unimodular(r.U)
    d = r.diagonal
    k = r.rank
    return [[Uinv[i][j] * d[j] for j in range(k)] for i in range(n)]


def inverse_unimodular(U: Matrix) -> Matrix:
    """Exact inverse of a unimodular matrix by integer Gauss-Jordan."""
    n = len(U)
    a = [row[:] + [int(i == j) for j in range(n)] for i, row in enumerate(U)]
    for c in range(n):
        p = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[p] = a[p], a[c]
        while any(a[i][c] != 0 for i in range(c + 1, n)):
            for i in range(c + 1, n):
                if a[i][c] != 0 and abs(a[i][c]) < abs(a[c][c]):
                    a[c], a[i] = a[i], a[c]
            for i in range(c + 1, n):
                q = a[i][c] // a[c][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[c])]
        if a[c][c] < 0:
            a[c] = [-x for x in a[c]]
        assert a[c][c] == 1, "matrix is not unimodular"
    for c in range(n - 1, -1, -1):
        for i in range(c):
            q = a[i][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def subquotient(L_gens: Matrix, K_gens: Matrix, n: int) -> list[int]:
    """Invariant factors of L / K for lattices K <= L <= Z^n given by generator columns."""
    B = lattice_basis(L_gens, n)
    r = len(B[0]) if B and B[0] else 0
    if r == 0:
        return []
    if not K_gens or not K_gens[0]:
        return [0] * r
    # coordinates of K in the basis B: solve B C = K over Z via the SNF of B
    snf = smith_normal_form(B)
    UK = matmul(snf.U, K_gens)
    d = snf.diagonal
    Y = []
    for i in range(r):
        row = []
        for x in UK[i]:
            if x % d[i]:
                raise ValueError("K is not contained in L")
            row.append(x // d[i])
        Y.append(row)
    for i in range(r, n):
        if any(UK[i]):
            raise ValueError("K is not contained in L")
    # B = U^-1 D V^-1, so C = V Y
    C = matmul([row[:r] for row in snf.V[:r]], Y)
    return invariant_factors_of_cokernel(C, r)
