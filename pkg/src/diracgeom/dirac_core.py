"""Linear Dirac structures: Lagrangian subspaces of V ⊕ V*.

Coordinates on V ⊕ V* are ``(x_1..x_n, xi_1..xi_n)`` and the pairing is
``<X + xi, Y + eta> = xi(Y) + eta(X)`` with no factor 1/2.  A two-form
``w`` on V is an antisymmetric matrix with ``W[i][j] = w(e_i, e_j)``; a
bivector on V* (or on a subspace U of V*) is stored the same way.
Contraction is in the first slot, so ``w_sharp(X) = w(X, -)``, which as a
row vector is ``X @ W``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact_linalg import (
    I,
    ZERO,
    DimensionError,
    Matrix,
    Scalar,
    Subspace,
    annihilator,
    as_scalar,
    dot,
    intersect,
    kernel,
)

__all__ = [
    "SplitSpace",
    "LinearDirac",
    "EEpsForm",
    "PiUForm",
    "NotLagrangianError",
    "pairing",
    "is_lagrangian",
    "tangent",
    "cotangent",
    "from_E_eps",
    "from_pi_U",
    "decompose_E_eps",
    "decompose_pi_U",
    "from_complex",
    "from_presymplectic",
    "from_symplectic_gc",
    "from_poisson",
    "b_transform",
    "is_real",
    "is_generalized_complex",
    "gc_endomorphism",
    "dual_swap",
    "product",
    "vector_part",
    "covector_part",
]


class NotLagrangianError(ValueError):
    pass


@dataclass(frozen=True)
class SplitSpace:
    """V ⊕ V* for V of dimension ``n``."""

    n: int

    @property
    def ambient_dim(self) -> int:
        return 2 * self.n

    def pairing_matrix(self) -> Matrix:
        n = self.n
        Z, Id = Matrix.zeros(n, n), Matrix.identity(n)
        return Matrix.block([[Z, Id], [Id, Z]])

    @property
    def V(self) -> Subspace:
        return Subspace.coordinate(2 * self.n, range(self.n))

    @property
    def V_dual(self) -> Subspace:
        return Subspace.coordinate(2 * self.n, range(self.n, 2 * self.n))


def pairing(u: Sequence, v: Sequence) -> Scalar:
    if len(u) != len(v) or len(u) % 2:
        raise DimensionError("pairing needs two vectors of the same even length")
    n = len(u) // 2
    u = [as_scalar(x) for x in u]
    v = [as_scalar(x) for x in v]
    return dot(u[:n], v[n:]) + dot(v[:n], u[n:])


def _isotropic(rows: Sequence[Sequence[Scalar]]) -> bool:
    return all(not pairing(rows[i], rows[j]) for i in range(len(rows)) for j in range(i, len(rows)))


def is_lagrangian(s: Subspace, space: SplitSpace | int) -> bool:
    n = space.n if isinstance(space, SplitSpace) else space
    if s.ambient_dim != 2 * n:
        return False
    return s.dim == n and _isotropic(s.vectors)


@dataclass(frozen=True)
class LinearDirac:
    """A Lagrangian subspace ``sub`` of V ⊕ V*, dim V = ``n``."""

    n: int
    sub: Subspace

    def __post_init__(self):
        if self.sub.ambient_dim != 2 * self.n:
            raise DimensionError(f"subspace lives in dimension {self.sub.ambient_dim}, expected {2 * self.n}")
        if not is_lagrangian(self.sub, self.n):
            raise NotLagrangianError("subspace is not maximal isotropic")

    @classmethod
    def span(cls, n: int, vectors: Sequence[Sequence]) -> "LinearDirac":
        return cls(n, Subspace(2 * n, vectors))

    @property
    def space(self) -> SplitSpace:
        return SplitSpace(self.n)

    @property
    def basis(self) -> Matrix:
        return self.sub.basis

    def contains(self, v: Sequence) -> bool:
        return self.sub.contains(v)

    __contains__ = contains

    def conj(self) -> "LinearDirac":
        return LinearDirac(self.n, self.sub.conj())

    def __repr__(self) -> str:
        return f"LinearDirac(n={self.n}, {self.sub!r})"


def vector_part(v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(v[: len(v) // 2])


def covector_part(v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(v[len(v) // 2 :])


def tangent(n: int) -> LinearDirac:
    return LinearDirac(n, SplitSpace(n).V)


def cotangent(n: int) -> LinearDirac:
    return LinearDirac(n, SplitSpace(n).V_dual)


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EEpsForm:
    """L(E, eps); ``eps`` is in coordinates of the stored RREF basis of ``E``."""

    E: Subspace
    eps: Matrix

    def __post_init__(self):
        if self.eps.shape != (self.E.dim, self.E.dim):
            raise DimensionError(f"eps has shape {self.eps.shape} but dim E = {self.E.dim}")
        if not self.eps.is_antisymmetric():
            raise ValueError("eps is not antisymmetric")

    @classmethod
    def from_basis(cls, n: int, rows: Sequence[Sequence], eps) -> "EEpsForm":
        """Accept eps written in an arbitrary (independent) basis of E."""
        return decompose_E_eps(_lagrangian_from_graph(n, rows, eps, swap=False))


@dataclass(frozen=True)
class PiUForm:
    """L(pi, U); ``pi`` is in coordinates of the stored RREF basis of ``U``."""

    U: Subspace
    pi: Matrix

    def __post_init__(self):
        if self.pi.shape != (self.U.dim, self.U.dim):
            raise DimensionError(f"pi has shape {self.pi.shape} but dim U = {self.U.dim}")
        if not self.pi.is_antisymmetric():
            raise ValueError("pi is not antisymmetric")

    @classmethod
    def from_basis(cls, n: int, rows: Sequence[Sequence], pi) -> "PiUForm":
        return decompose_pi_U(_lagrangian_from_graph(n, rows, pi, swap=True))


def _as_matrix(m) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix(m)


def _lagrangian_from_graph(n: int, rows, form, swap: bool) -> LinearDirac:
    # form[i][j] = form(b_i, b_j) for independent rows b_i of the carrier
    rows = [tuple(as_scalar(x) for x in r) for r in rows]
    k = len(rows)
    form = _as_matrix(form) if k else Matrix.zeros(0, 0)
    if form.shape != (k, k):
        raise DimensionError("form does not match the number of basis rows")
    if not form.is_antisymmetric():
        raise ValueError("form is not antisymmetric")
    carrier = Subspace(n, rows)
    if carrier.dim != k:
        raise ValueError("basis rows are not independent")
    if not k:
        return _graph_on_rref(n, carrier, form, swap)
    # rows = T @ rref_basis, so the form in RREF coordinates is T^-1 F T^-T
    Tinv = Matrix._from_rows([carrier.coordinates(r) for r in rows], k).inverse()
    return _graph_on_rref(n, carrier, Tinv @ form @ Tinv.T, swap)


def _graph_on_rref(n: int, carrier: Subspace, F: Matrix, swap: bool) -> LinearDirac:
    """{b_i + sum_j F_ij e*_{p_j}} ⊕ Ann(carrier), optionally with the blocks swapped."""
    piv = carrier.pivots
    out = []
    for i, b in enumerate(carrier.vectors):
        c = [ZERO] * n
        for j, p in enumerate(piv):
            c[p] = F[i, j]
        out.append(tuple(c) + b if swap else b + tuple(c))
    for a in annihilator(carrier).vectors:
        out.append(a + (ZERO,) * n if swap else (ZERO,) * n + a)
    return LinearDirac(n, Subspace(2 * n, out))


def from_E_eps(form: EEpsForm) -> LinearDirac:
    """{X + xi : X in E, xi|E = eps(X, -)}."""
    return _graph_on_rref(form.E.ambient_dim, form.E, form.eps, swap=False)


def from_pi_U(form: PiUForm) -> LinearDirac:
    """{x + xi : xi in U, x|U = pi(xi, -)}."""
    return _graph_on_rref(form.U.ambient_dim, form.U, form.pi, swap=True)


def _split_rref(n: int, rows: Sequence[tuple[Scalar, ...]], pivots: Sequence[int]):
    head = [r for r, p in zip(rows, pivots) if p < n]
    tail = [r for r, p in zip(rows, pivots) if p >= n]
    return head, tail


def decompose_E_eps(d: LinearDirac) -> EEpsForm:
    n = d.n
    head, tail = _split_rref(n, d.sub.vectors, d.sub.pivots)
    # the vector parts of the head rows are already the RREF basis of E
    E = Subspace._canonical(n, [r[:n] for r in head], [p for p in d.sub.pivots if p < n])
    for r in tail:
        assert all(not dot(r[n:], b) for b in E.vectors), "eps is not well defined"
    k = len(head)
    eps = Matrix._from_rows([tuple(dot(head[i][n:], head[j][:n]) for j in range(k)) for i in range(k)], k)
    return EEpsForm(E, eps)


def decompose_pi_U(d: LinearDirac) -> PiUForm:
    n = d.n
    swapped = Subspace(2 * n, [r[n:] + r[:n] for r in d.sub.vectors])
    head, tail = _split_rref(n, swapped.vectors, swapped.pivots)
    U = Subspace._canonical(n, [r[:n] for r in head], [p for p in swapped.pivots if p < n])
    for r in tail:
        assert all(not dot(r[n:], u) for u in U.vectors), "pi is not well defined"
    k = len(head)
    # pi(xi, eta) = eta(X) for X + xi in d
    pi = Matrix._from_rows([tuple(dot(head[j][:n], head[i][n:]) for j in range(k)) for i in range(k)], k)
    return PiUForm(U, pi)


# ---------------------------------------------------------------------------
# standard constructions
# ---------------------------------------------------------------------------


def from_complex(J) -> LinearDirac:
    """E ⊕ Ann(E) with E the i-eigenspace of a complex structure J on V."""
    J = _as_matrix(J)
    n = J.rows
    if not J.is_square():
        raise DimensionError("J must be square")
    if J @ J != -Matrix.identity(n):
        raise ValueError("J does not square to -1")
    E = kernel(J - Matrix.identity(n).scale(I))
    return from_E_eps(EEpsForm(E, Matrix.zeros(E.dim, E.dim)))


def from_presymplectic(omega) -> LinearDirac:
    """L(V, omega): the graph of omega_sharp."""
    omega = _as_matrix(omega)
    n = omega.rows
    return from_E_eps(EEpsForm(Subspace.full(n), omega))


def from_poisson(pi) -> LinearDirac:
    """L(pi, V*): the graph of pi_sharp."""
    pi = _as_matrix(pi)
    return from_pi_U(PiUForm(Subspace.full(pi.rows), pi))


def from_symplectic_gc(omega) -> LinearDirac:
    """The generalized complex structure of a symplectic form: L(V, -i*omega).

    This is the i-eigenspace of [[0, -omega_sharp^-1], [omega_sharp, 0]].
    """
    omega = _as_matrix(omega)
    if omega.rank() != omega.rows:
        raise ValueError("symplectic form is degenerate")
    return from_E_eps(EEpsForm(Subspace.full(omega.rows), omega.scale(-I)))


def sharp_matrix(form) -> Matrix:
    """Matrix of X -> form(X, -) acting on column vectors."""
    return _as_matrix(form).T


def b_transform(d: LinearDirac, B) -> LinearDirac:
    """Apply e^B = [[1, 0], [B_sharp, 1]]."""
    B = _as_matrix(B)
    n = d.n
    if B.shape != (n, n):
        raise DimensionError(f"B has shape {B.shape}, expected {(n, n)}")
    if not B.is_antisymmetric():
        raise ValueError("B is not antisymmetric")
    cols = [B.col(j) for j in range(n)]
    rows = []
    for r in d.sub.vectors:
        X = r[:n]
        rows.append(X + tuple(a + dot(X, c) for a, c in zip(r[n:], cols)))
    return LinearDirac(n, Subspace(2 * n, rows))


def is_real(d: LinearDirac) -> bool:
    return d.sub.conj() == d.sub


def is_generalized_complex(d: LinearDirac) -> bool:
    return intersect(d.sub, d.sub.conj()).is_zero()


def gc_endomorphism(d: LinearDirac) -> Matrix:
    """The orthogonal J with J^2 = -1, +i on d and -i on conj(d)."""
    if not is_generalized_complex(d):
        raise ValueError("d ∩ conj(d) != 0; not a generalized complex structure")
    n2 = 2 * d.n
    cols = list(d.sub.vectors) + list(d.sub.conj().vectors)
    P = Matrix._from_rows(cols, n2).T
    diag = [I] * d.n + [-I] * d.n
    Lam = Matrix._from_rows([tuple(diag[i] if i == j else ZERO for j in range(n2)) for i in range(n2)], n2)
    J = P @ Lam @ P.inverse()
    assert J.conj() == J, "generalized complex endomorphism is not real"
    return J


def dual_swap(d: LinearDirac) -> LinearDirac:
    """View d as a structure on V*: exchange the V and V* blocks."""
    n = d.n
    return LinearDirac(n, Subspace(2 * n, [r[n:] + r[:n] for r in d.sub.vectors]))


def product(d1: LinearDirac, d2: LinearDirac) -> LinearDirac:
    """d1 ⊕ d2 on V1 × V2, coordinates (x1, x2, xi1, xi2)."""
    n1, n2 = d1.n, d2.n
    z1, z2 = (ZERO,) * n1, (ZERO,) * n2
    rows = [r[:n1] + z2 + r[n1:] + z2 for r in d1.sub.vectors]
    rows += [z1 + r[:n2] + z1 + r[n2:] for r in d2.sub.vectors]
    return LinearDirac(n1 + n2, Subspace(2 * (n1 + n2), rows))
