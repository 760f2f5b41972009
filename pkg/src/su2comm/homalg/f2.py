"""Linear algebra over F2 on small dense 0/1 matrices."""

from __future__ import annotations

import numpy as np


def as_f2(a) -> np.ndarray:
    return (np.asarray(a, dtype=np.int64) % 2).astype(np.uint8)


def rref(a) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = as_f2(a).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hit = np.nonzero(m[r:, c])[0]
        if hit.size == 0:
            continue
        p = r + int(hit[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] ^= m[r]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a)[1])


def nullspace(a) -> np.ndarray:
    """Basis of {x : a x = 0}, one vector per row."""
    a = as_f2(a)
    rows, cols = a.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    if rows == 0:
        return np.eye(cols, dtype=np.uint8)
    m, piv = rref(a)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        x = np.zeros(cols, dtype=np.uint8)
        x[f] = 1
        for i, p in enumerate(piv):
            x[p] = m[i, f]
        basis.append(x)
    return np.array(basis, dtype=np.uint8).reshape(len(basis), cols)


def in_span(vectors, x) -> bool:
    """Whether x is a combination of the given vectors (rows)."""
    vectors = as_f2(vectors)
    x = as_f2(x)
    if vectors.size == 0:
        return not x.any()
    return rank(vectors) == rank(np.vstack([vectors, x]))


def mat_mul(a, b) -> np.ndarray:
    return (as_f2(a).astype(np.int64) @ as_f2(b).astype(np.int64) % 2).astype(np.uint8)


def solve(a, b) -> np.ndarray | None:
    """Some x with a x = b, or None when b is not in the column span."""
    a = as_f2(a)
    b = as_f2(b)
    rows, cols = a.shape
    if cols == 0:
        return np.zeros(0, dtype=np.uint8) if not b.any() else None
    m, piv = rref(np.column_stack([a, b]))
    if cols in piv:
        return None
    x = np.zeros(cols, dtype=np.uint8)
    for i, p in enumerate(piv):
        x[p] = m[i, cols]
    return x
