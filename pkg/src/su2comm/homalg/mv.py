"""Mayer-Vietoris solving over F2 and Z.

The sequence is

    ... -> H^q(X) -> H^q(U) + H^q(V) --rho_q--> H^q(B) --delta--> H^{q+1}(X) -> ...

With X unknown, H^q(X) = ker rho_q + delta(coker rho_{q-1}).  With U unknown
the scenario supplies X, V, B, the map V -> B and the images of the
U-classes that reach B ("hints"); then

    dim H^q(U) = dim X_q - dim B_{q-1} + dim I_{q-1} + dim I_q - dim V_q,

where I_q is the span of the hints and of j_V(V_q), assumed to be the whole
image of rho_q.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InconsistentScenario, UnresolvedExtension
from . import f2
from .groups import GradedGroup, canonical, hom_cokernel, hom_kernel, is_homomorphism, resolve_extension
from .scenario import GradedF2Space, Scenario


@dataclass
class MVF2Result:
    scenario: str
    unknown: str
    dims: dict[int, int]
    generators: dict[int, list[str]]
    kernels: dict[int, list[str]] = field(default_factory=dict)
    cokernels: dict[int, list[str]] = field(default_factory=dict)
    alternating_sum: int = 0
    # union case: per degree, kernel vectors in U+V and cokernel reps in B
    _ker_vecs: dict[int, np.ndarray] = field(default_factory=dict, repr=False)
    _coker_vecs: dict[int, np.ndarray] = field(default_factory=dict, repr=False)

    def space(self) -> GradedF2Space:
        return GradedF2Space({q: tuple(v) for q, v in self.generators.items() if v})

    def dims_tuple(self, lo: int, hi: int) -> tuple[int, ...]:
        return tuple(self.dims.get(q, 0) for q in range(lo, hi + 1))


def _rho(sc: Scenario, q: int) -> np.ndarray:
    jU = sc.maps["U->B"].matrix(q)
    jV = sc.maps["V->B"].matrix(q)
    return np.hstack([jU, jV]).astype(np.uint8)


def _greedy_cokernel(image: np.ndarray, n: int) -> list[int]:
    """Indices of target basis vectors completing the column span of image, in order."""
    cols = [image[:, k] for k in range(image.shape[1])] if image.size else []
    chosen: list[int] = []
    span = np.array(cols, dtype=np.uint8).reshape(len(cols), n)
    r = f2.rank(span) if len(cols) else 0
    for i in range(n):
        e = np.zeros(n, dtype=np.uint8)
        e[i] = 1
        trial = np.vstack([span, e]) if span.size else e.reshape(1, n)
        r2 = f2.rank(trial)
        if r2 > r:
            span, r = trial, r2
            chosen.append(i)
    return chosen


def _formal_sum(labels: list[str]) -> str:
    return " + ".join(labels) if labels else "0"


def _degree_range(sc: Scenario) -> range:
    top = max(s.top for s in sc.spaces.values())
    return range(0, top + 2)


def _solve_union(sc: Scenario) -> MVF2Result:
    U, V, B = sc.spaces["U"], sc.spaces["V"], sc.spaces["B"]
    out = MVF2Result(sc.name, "X", {}, {})
    prev_coker: list[str] = []
    for q in _degree_range(sc):
        rho = _rho(sc, q)
        nb = B.dim(q)
        ker = f2.nullspace(rho) if rho.shape[1] else np.zeros((0, 0), dtype=np.uint8)
        src_labels = list(U[q]) + list(V[q])
        ker_names = [_formal_sum([lab for lab, c in zip(src_labels, v) if c]) for v in ker]
        idx = _greedy_cokernel(rho, nb) if nb else []
        coker_names = [B[q][i] for i in idx]
        out.kernels[q] = ker_names
        out.cokernels[q] = coker_names
        out._ker_vecs[q] = ker
        cv = np.zeros((len(idx), nb), dtype=np.uint8)
        for r, i in enumerate(idx):
            cv[r, i] = 1
        out._coker_vecs[q] = cv
        gens = ker_names + [f"delta({c})" for c in prev_coker]
        out.dims[q] = len(gens)
        out.generators[q] = gens
        prev_coker = coker_names
    out.alternating_sum = _alternating(sc, out)
    return out


def _hint_degree(B: GradedF2Space, lab: str, img: tuple[str, ...]) -> int:
    if not img:
        raise InconsistentScenario(f"hint {lab!r} maps to 0; its degree is unknown")
    degs = {B.degree_of(x) for x in img}
    if len(degs) != 1:
        raise InconsistentScenario(f"image of {lab!r} is not homogeneous")
    return degs.pop()


def _solve_piece(sc: Scenario) -> MVF2Result:
    X, V, B = sc.spaces["X"], sc.spaces["V"], sc.spaces["B"]
    jV = sc.maps["V->B"]
    hint_deg = {lab: _hint_degree(B, lab, img) for lab, img in sc.hints.items()}
    out = MVF2Result(sc.name, "U", {}, {})
    dim_I: dict[int, int] = {}
    new_hints: dict[int, list[str]] = {}
    ker_jV: dict[int, int] = {}
    for q in _degree_range(sc):
        mv = jV.matrix(q)
        cols = [mv[:, k] for k in range(mv.shape[1])]
        rv = f2.rank(np.array(cols).reshape(len(cols), B.dim(q))) if cols else 0
        ker_jV[q] = V.dim(q) - rv
        span = np.array(cols, dtype=np.uint8).reshape(len(cols), B.dim(q))
        r = rv
        new_hints[q] = []
        for lab, d in hint_deg.items():
            if d != q:
                continue
            x = B.vector(q, sc.hints[lab])
            trial = np.vstack([span, x]) if span.size else x.reshape(1, -1)
            r2 = f2.rank(trial)
            if r2 > r:
                span, r = trial, r2
                new_hints[q].append(lab)
        dim_I[q] = r
    for q in _degree_range(sc):
        lost = B.dim(q - 1) - dim_I.get(q - 1, 0)  # dim image of delta into X_q
        K = X.dim(q) - lost
        if K < 0:
            raise InconsistentScenario(
                f"degree {q}: delta would have to be injective on a {lost}-dim space into {X.dim(q)} dims")
        n_from_X = K - ker_jV[q]
        if n_from_X < 0:
            raise InconsistentScenario(f"degree {q}: kernel of j_V exceeds the image of X")
        dim_U = K + dim_I[q] - V.dim(q)
        names = [sc.restrictions.get(x, f"i*({x})") for x in X[q][:n_from_X]] + new_hints[q]
        if len(names) != dim_U:
            raise InconsistentScenario(f"degree {q}: {len(names)} names for dimension {dim_U}")
        out.dims[q] = dim_U
        out.generators[q] = names
        out.kernels[q] = [f"i*({x})" for x in X[q][:K]]
        out.cokernels[q] = []
    out.alternating_sum = _alternating(sc, out)
    return out


def _alternating(sc: Scenario, res: MVF2Result) -> int:
    """Sum over q of (-1)^q (X_q - U_q - V_q + B_q); zero for an exact sequence."""
    sp = dict(sc.spaces)
    total = 0
    for q in _degree_range(sc):
        x = res.dims.get(q, 0) if res.unknown == "X" else sp["X"].dim(q)
        u = res.dims.get(q, 0) if res.unknown == "U" else sp["U"].dim(q)
        total += (-1) ** q * (x - u - sp["V"].dim(q) + sp["B"].dim(q))
    return total


def mv_solve_f2(sc: Scenario) -> MVF2Result:
    res = _solve_union(sc) if sc.unknown == "X" else _solve_piece(sc)
    if res.alternating_sum != 0:
        raise InconsistentScenario(f"alternating sum of dimensions is {res.alternating_sum}")
    return res


# ---------------------------------------------------------------- Bocksteins

def union_bockstein(sc: Scenario, res: MVF2Result) -> dict[int, np.ndarray]:
    """Matrices of beta on the solved H^*(X; F2) basis (kernel classes first).

    On delta(x) it is delta(beta x).  On a kernel class k it is the lift of
    beta k, which is well defined only when coker rho_q = 0.
    """
    U, V = sc.spaces["U"], sc.spaces["V"]
    bU, bV, bB = sc.beta("U"), sc.beta("V"), sc.beta("B")
    out: dict[int, np.ndarray] = {}
    for q in _degree_range(sc):
        n_src, n_tgt = res.dims.get(q, 0), res.dims.get(q + 1, 0)
        m = np.zeros((n_tgt, n_src), dtype=np.uint8)
        ker_q, ker_next = res._ker_vecs.get(q), res._ker_vecs.get(q + 1)
        nk_next = 0 if ker_next is None else ker_next.shape[0]
        n_ker = 0 if ker_q is None else ker_q.shape[0]
        for j in range(n_ker):
            v = ker_q[j]
            nu = U.dim(q)
            bk = np.concatenate([f2.mat_mul(bU.matrix(q), v[:nu]) if nu else np.zeros(U.dim(q + 1), np.uint8),
                                 f2.mat_mul(bV.matrix(q), v[nu:]) if V.dim(q) else np.zeros(V.dim(q + 1), np.uint8)])
            if not bk.any():
                coef = np.zeros(nk_next, dtype=np.uint8)
            else:
                coef = f2.solve(ker_next.T, bk) if nk_next else None
                if coef is None:
                    raise InconsistentScenario(f"beta of kernel class in degree {q} leaves the kernel")
            if len(res.cokernels.get(q, [])):
                raise UnresolvedExtension(
                    f"beta of {res.kernels[q][j]!r} is defined only up to delta(coker rho_{q})")
            m[:nk_next, j] = coef
        # delta classes in degree q come from coker rho_{q-1}
        cv = res._coker_vecs.get(q - 1)
        if cv is not None and cv.shape[0]:
            img = _rho(sc, q)
            cnext = res._coker_vecs.get(q)
            for j in range(cv.shape[0]):
                bx = f2.mat_mul(bB.matrix(q - 1), cv[j])
                if not bx.any():
                    continue
                coef = f2.solve(np.hstack([img, cnext.T]), bx)
                m[nk_next:, n_ker + j] = coef[img.shape[1]:]
        out[q] = m
    return out


def piece_bockstein(sc: Scenario, res: MVF2Result) -> dict[int, np.ndarray]:
    sp = res.space()
    beta = sc.bockstein.get("U", {})
    out = {}
    for q in _degree_range(sc):
        m = np.zeros((res.dims.get(q + 1, 0), res.dims.get(q, 0)), dtype=np.uint8)
        for j, lab in enumerate(sp[q]):
            m[:, j] = sp.vector(q + 1, beta.get(lab, ()))
        out[q] = m
    return out


def piece_naturality(sc: Scenario) -> bool:
    """j_U beta = beta j_U on the hinted classes."""
    B = sc.spaces["B"]
    bB = sc.beta("B")
    betaU = sc.bockstein.get("U", {})
    for lab, img in sc.hints.items():
        q = _hint_degree(B, lab, img)
        lhs = f2.mat_mul(bB.matrix(q), B.vector(q, img))
        rhs = np.zeros(B.dim(q + 1), dtype=np.uint8)
        for y in betaU.get(lab, ()):
            if y in sc.hints:
                rhs ^= B.vector(q + 1, sc.hints[y])
        if (lhs != rhs).any():
            return False
    return True


def integral_from_bockstein(dims: dict[int, int], beta: dict[int, np.ndarray]) -> GradedGroup:
    """Free rank = dim ker beta_q - rank beta_{q-1}; one Z/2 per beta pair.

    Valid when all 2-torsion has order 2 and there is no odd torsion.
    """
    table = {}
    for q in sorted(dims):
        b = beta.get(q)
        rk = f2.rank(b) if b is not None and b.size else 0
        b_prev = beta.get(q - 1)
        rk_prev = f2.rank(b_prev) if b_prev is not None and b_prev.size else 0
        free = dims[q] - rk - rk_prev
        table[q] = [0] * free + [2] * rk_prev
    return GradedGroup.of(table)


def bockstein_check(sp: GradedF2Space, beta: dict[int, np.ndarray], integral: GradedGroup) -> bool:
    """beta^2 = 0 and the Z/2 count and free ranks implied by beta match integral."""
    for q in range(sp.top + 2):
        b0, b1 = beta.get(q), beta.get(q + 1)
        if b0 is not None and b1 is not None and b0.size and b1.size:
            if f2.mat_mul(b1, b0).any():
                return False
    for q in range(sp.top + 2):
        b_prev = beta.get(q - 1)
        pairs = f2.rank(b_prev) if b_prev is not None and b_prev.size else 0
        b = beta.get(q)
        rk = f2.rank(b) if b is not None and b.size else 0
        twos = sum(1 for f in integral[q] if f == 2)
        if twos != pairs or integral.rank(q) != sp.dim(q) - rk - pairs:
            return False
    return True


# ---------------------------------------------------------------- integral MV

@dataclass
class MVZResult:
    scenario: str
    groups: GradedGroup
    kernels: dict[int, tuple[int, ...]]
    cokernels: dict[int, tuple[int, ...]]
    route: str
    notes: list[str] = field(default_factory=list)


def _even_count(fs) -> int:
    return sum(1 for f in fs if f and f % 2 == 0)


def mv_solve_z(sc: Scenario, f2res: MVF2Result | None = None) -> MVZResult:
    f2res = f2res or mv_solve_f2(sc)
    route = sc.integral_route or ("integral" if sc.integral else "bockstein")
    if route == "bockstein":
        beta = union_bockstein(sc, f2res) if sc.unknown == "X" else piece_bockstein(sc, f2res)
        g = integral_from_bockstein(f2res.dims, beta)
        return MVZResult(sc.name, g, {}, {}, route)
    if sc.unknown != "X" or sc.integral is None:
        raise InconsistentScenario("integral route needs integral data and an unknown union")
    data = sc.integral
    qs = list(_degree_range(sc))
    kers, cokers = {}, {}
    for q in qs:
        M, src, tgt = data.matrix(q), data.source(q), tuple(data.B.get(q, ()))
        if not is_homomorphism(M, src, tgt):
            raise InconsistentScenario(f"rho in degree {q} is not a homomorphism")
        kers[q] = hom_kernel(M, src, tgt)
        cokers[q] = hom_cokernel(M, src, tgt)
    # rank of H^q and the torsion sizes, then resolve top down with F2 ranks
    table: dict[int, tuple[int, ...]] = {}
    notes = []
    t_next = 0
    for q in reversed(qs):
        C = cokers.get(q - 1, ())
        K = kers[q]
        rank = K.count(0) + C.count(0)
        c_tors = [f for f in C if f]
        k_tors = [f for f in K if f]
        if C.count(0) and k_tors:
            raise UnresolvedExtension(f"degree {q}: free subgroup extended by torsion")
        if not c_tors or not k_tors:
            tors = tuple(c_tors + k_tors)
        else:
            order = 1
            for f in c_tors + k_tors:
                order *= f
            t_q = f2res.dims.get(q, 0) - rank - t_next
            tors = resolve_extension(order, t_q)
            notes.append(f"H^{q}: order {order}, F2-rank {t_q} -> {tors}")
        table[q] = canonical(list(tors) + [0] * rank)
        t_next = _even_count(table[q])
    g = GradedGroup.of(table)
    return MVZResult(sc.name, g, kers, cokers, route, notes)


def uct_consistent(g: GradedGroup, dims: dict[int, int]) -> bool:
    qs = set(dims) | set(range(g.top + 1))
    return all(g.f2_dim(q) == dims.get(q, 0) for q in qs)
