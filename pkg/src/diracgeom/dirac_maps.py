"""Linear Dirac and dual-Dirac maps.

A map ``f: V1 -> V2`` is a Matrix of shape ``(n2, n1)``; its transpose is
the dual map ``f*: V2* -> V1*`` in the shared coordinates.  Every
formulation of the Dirac condition below is computed by its own code path
so that the equivalences between them can be checked rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dirac_core import (
    LinearDirac,
    b_transform,
    decompose_E_eps,
    decompose_pi_U,
    dual_swap,
)
from .exact_linalg import (
    ZERO,
    DimensionError,
    Matrix,
    Subspace,
    dot,
    image,
    intersect,
    kernel,
    preimage,
    sum_subspaces,
)

__all__ = [
    "DiracMapProblem",
    "pushforward",
    "pullback",
    "cond_M1",
    "m2_setwise",
    "is_dirac_M",
    "is_dirac_M2prime",
    "is_dirac_M2doubleprime",
    "is_dirac_piU",
    "is_dirac_Eeps",
    "is_dual_dirac",
    "is_dual_dirac_Eeps",
    "is_abm_dirac",
    "pullback_form",
    "dual_swap",
    "PREDICATES",
]


@dataclass(frozen=True)
class DiracMapProblem:
    f: Matrix
    d1: LinearDirac
    d2: LinearDirac

    def __post_init__(self):
        if self.f.shape != (self.d2.n, self.d1.n):
            raise DimensionError(
                f"map of shape {self.f.shape} between spaces of dimension {self.d1.n} and {self.d2.n}"
            )

    @property
    def n1(self) -> int:
        return self.d1.n

    @property
    def n2(self) -> int:
        return self.d2.n


def _check_map(f: Matrix, n_src: int, n_dst: int) -> None:
    if f.shape != (n_dst, n_src):
        raise DimensionError(f"map of shape {f.shape}, expected {(n_dst, n_src)}")


def _block_map(A: Matrix, B: Matrix) -> Matrix:
    """diag(A, B)."""
    return Matrix.block([[A, Matrix.zeros(A.rows, B.cols)], [Matrix.zeros(B.rows, A.cols), B]])


def pushforward(f: Matrix, d: LinearDirac) -> LinearDirac:
    """f_* D = {fX + xi : X + f*xi in D}."""
    n, m = f.cols, f.rows
    _check_map(f, d.n, m)
    # pairs (X, xi) in V ⊕ W* with (X, f^T xi) in D, then (X, xi) -> (fX, xi)
    pairs = preimage(_block_map(Matrix.identity(n), f.T), d.sub)
    return LinearDirac(m, image(_block_map(f, Matrix.identity(m)), pairs))


def pullback(f: Matrix, d: LinearDirac) -> LinearDirac:
    """f^* D = {X + f*xi : fX + xi in D}."""
    n, m = f.cols, f.rows
    _check_map(f, n, d.n)
    pairs = preimage(_block_map(f, Matrix.identity(m)), d.sub)
    return LinearDirac(n, image(_block_map(Matrix.identity(n), f.T), pairs))


def pullback_form(f: Matrix, B: Matrix) -> Matrix:
    """f*B = f^T B f for a two-form B on the codomain."""
    return f.T @ B @ f


# ---------------------------------------------------------------------------
# pieces shared by the subspace formulations
# ---------------------------------------------------------------------------


def _V_part(d: LinearDirac) -> Subspace:
    """d ∩ V, as a subspace of V."""
    n = d.n
    # with covector coordinates first, the RREF rows pivoting in the vector block
    # are exactly those with vanishing covector part
    swapped = Subspace(2 * n, [v[n:] + v[:n] for v in d.sub.vectors])
    tail = [(r[n:], c - n) for r, c in zip(swapped.vectors, swapped.pivots) if c >= n]
    return Subspace._canonical(n, [r for r, _ in tail], [c for _, c in tail])


def _proj_dual(d: LinearDirac) -> Subspace:
    n = d.n
    return Subspace(n, [v[n:] for v in d.sub.vectors])


def cond_M1(p: DiracMapProblem) -> bool:
    """f(L1 ∩ V1) ⊆ L2 ∩ V2."""
    return image(p.f, _V_part(p.d1)).issubset(_V_part(p.d2))


def m2_setwise(p: DiracMapProblem) -> bool:
    """The projected inclusion p^{-1}(f*(p L2)) ∩ L1 ⊆ f^*L2 taken literally in V1 ⊕ V1*.

    Strictly weaker than the element-wise condition; see ``is_dirac_M``.
    """
    n1 = p.n1
    fU2 = image(p.f.T, _proj_dual(p.d2))
    lifted = Subspace(2 * n1, [e + (ZERO,) * n1 for e in Matrix.identity(n1).row_list()]
                      + [(ZERO,) * n1 + u for u in fU2.vectors])
    return intersect(lifted, p.d1.sub).issubset(pullback(p.f, p.d2).sub)


# ---------------------------------------------------------------------------
# the Dirac predicates
# ---------------------------------------------------------------------------


def is_dirac_M(p: DiracMapProblem) -> bool:
    """(M1) and (M2), with (M2) read on witnessing pairs.

    (M2) is evaluated in the correspondence space V1 ⊕ V2*: the pairs
    ``(X, xi)`` with ``xi in p(L2)`` and ``X + f*xi in L1`` must lie in the
    pairs ``(X, xi)`` with ``fX + xi in L2``.  Projecting both sides to
    V1 ⊕ V1* first loses the covector in ker f* and gives ``m2_setwise``.
    """
    if not cond_M1(p):
        return False
    n1, n2 = p.n1, p.n2
    ft, f = p.f.T, p.f
    # coordinates (X, xi) in V1 ⊕ V2*
    in_L1 = preimage(_block_map(Matrix.identity(n1), ft), p.d1.sub)
    U2 = _proj_dual(p.d2)
    xi_in_U2 = Subspace(n1 + n2, [e + (ZERO,) * n2 for e in Matrix.identity(n1).row_list()]
                        + [(ZERO,) * n1 + u for u in U2.vectors])
    source = intersect(in_L1, xi_in_U2)
    target = preimage(_block_map(f, Matrix.identity(n2)), p.d2.sub)
    return source.issubset(target)


def is_dirac_M2prime(p: DiracMapProblem) -> bool:
    """(M1) and: Y + xi in L2 and X + f*xi in L1 imply fX + xi in L2."""
    if not cond_M1(p):
        return False
    n1, n2 = p.n1, p.n2
    f, ft = p.f, p.f.T
    # unknowns (X, Y, xi) in V1 ⊕ V2 ⊕ V2*; the kernel of a basis gives linear equations cutting out each Li
    eqs = []
    for phi in kernel(p.d1.basis).vectors:
        row_xi = tuple(dot(phi[n1:], ft.col(j)) for j in range(n2))
        eqs.append(phi[:n1] + (ZERO,) * n2 + row_xi)
    for phi in kernel(p.d2.basis).vectors:
        eqs.append((ZERO,) * n1 + phi)
    sols = kernel(Matrix._from_rows(eqs, n1 + 2 * n2)) if eqs else Subspace.full(n1 + 2 * n2)
    for s in sols.vectors:
        X, xi = s[:n1], s[n1 + n2:]
        if not p.d2.sub.contains(f.apply(X) + xi):
            return False
    return True


def is_dirac_M2doubleprime(p: DiracMapProblem) -> bool:
    """(M1) and f^*L2 ⊆ L1 + f^{-1}(L2 ∩ V2)."""
    if not cond_M1(p):
        return False
    n1 = p.n1
    pre = preimage(p.f, _V_part(p.d2))
    embedded = Subspace(2 * n1, [v + (ZERO,) * n1 for v in pre.vectors])
    return pullback(p.f, p.d2).sub.issubset(sum_subspaces(p.d1.sub, embedded))


def is_dirac_piU(p: DiracMapProblem) -> bool:
    """(D1) f*(U2) ⊆ U1 and (D2) phi* pi1 = pi2 with phi = f*|U2."""
    f1, f2 = decompose_pi_U(p.d1), decompose_pi_U(p.d2)
    ft = p.f.T
    phi_cols = []
    for u in f2.U.vectors:
        w = ft.apply(u)
        if any(f1.U.reduce(w)):
            return False
        phi_cols.append(f1.U.coordinates(w))
    k = len(phi_cols)
    for a in range(k):
        ca = phi_cols[a]
        for b in range(a + 1, k):
            cb = phi_cols[b]
            val = ZERO
            for i, x in enumerate(ca):
                if x:
                    val = val + x * dot(f1.pi.row(i), cb)
            if val != f2.pi[a, b]:
                return False
    return True


def is_dirac_Eeps(p: DiracMapProblem) -> bool:
    """The two conditions phrased through L(E1, eps1) and L(E2, eps2).

    1. f(Ker eps1_sharp) ⊆ Ker eps2_sharp.
    2. For X1 in E1, X2 in E2, xi2 in V2* with xi2|E2 = eps2(X2, -) and
       eps1(X1, -) = (f*xi2)|E1: f X1 in E2 and f X1 - X2 in Ker eps2_sharp.
    """
    e1, e2 = decompose_E_eps(p.d1), decompose_E_eps(p.d2)
    n2 = p.n2
    f = p.f
    k1, k2 = e1.E.dim, e2.E.dim
    B1, B2 = e1.E.vectors, e2.E.vectors

    def ker_sharp(form):
        K = kernel(form.eps) if form.E.dim else Subspace.zero(0)
        return Subspace(form.E.ambient_dim, [form.E.combine(c) for c in K.vectors])

    ker1, ker2 = ker_sharp(e1), ker_sharp(e2)
    if not image(f, ker1).issubset(ker2):
        return False

    # unknowns (a in F^k1, c in F^k2, xi2 in V2*): X1 = sum a_i B1_i, X2 = sum c_j B2_j
    width = k1 + k2 + n2
    eqs = []
    for l in range(k2):
        # xi2(B2_l) - sum_j c_j eps2[j][l] = 0
        row = [ZERO] * width
        for j in range(k2):
            row[k1 + j] = -e2.eps[j, l]
        for t in range(n2):
            row[k1 + k2 + t] = B2[l][t]
        eqs.append(tuple(row))
    fB1 = [f.apply(b) for b in B1]
    for l in range(k1):
        # sum_i a_i eps1[i][l] - xi2(f B1_l) = 0
        row = [ZERO] * width
        for i in range(k1):
            row[i] = e1.eps[i, l]
        for t in range(n2):
            row[k1 + k2 + t] = -fB1[l][t]
        eqs.append(tuple(row))
    sols = kernel(Matrix._from_rows(eqs, width)) if eqs else Subspace.full(width)
    for s in sols.vectors:
        X1 = e1.E.combine(s[:k1])
        X2 = e2.E.combine(s[k1:k1 + k2])
        fX1 = f.apply(X1)
        if any(e2.E.reduce(fX1)):
            return False
        diff = tuple(a - b for a, b in zip(fX1, X2))
        if any(ker2.reduce(diff)):
            return False
    return True


# ---------------------------------------------------------------------------
# dual-Dirac
# ---------------------------------------------------------------------------


def is_dual_dirac(p: DiracMapProblem) -> bool:
    """f is dual-Dirac iff f*: (V2*, L2) -> (V1*, L1) is Dirac."""
    return is_dirac_M(DiracMapProblem(p.f.T, dual_swap(p.d2), dual_swap(p.d1)))


def is_dual_dirac_Eeps(p: DiracMapProblem) -> bool:
    """(D1*) f(E1) ⊆ E2 and (D2*) f*eps2 = eps1 on E1."""
    e1, e2 = decompose_E_eps(p.d1), decompose_E_eps(p.d2)
    coords = []
    for b in e1.E.vectors:
        w = p.f.apply(b)
        if any(e2.E.reduce(w)):
            return False
        coords.append(e2.E.coordinates(w))
    pulled_back = Matrix._from_rows(coords, e2.E.dim) @ e2.eps @ Matrix._from_rows(coords, e2.E.dim).T \
        if coords else Matrix.zeros(0, 0)
    return pulled_back == e1.eps


def is_abm_dirac(f: Matrix, B: Matrix, d1: LinearDirac, d2: LinearDirac) -> bool:
    """f_*(e^B d1) = d2."""
    return pushforward(f, b_transform(d1, B)).sub == d2.sub


PREDICATES = {
    "M": is_dirac_M,
    "M2p": is_dirac_M2prime,
    "M2pp": is_dirac_M2doubleprime,
    "piU": is_dirac_piU,
    "Eeps": is_dirac_Eeps,
    "dual": is_dual_dirac,
    "dual_Eeps": is_dual_dirac_Eeps,
}
