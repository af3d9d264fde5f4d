"""Validators for the Lie-algebra data behind Dirac, dual-Dirac, generalized complex
and twisted group structures.

Every check returns a ``Check`` with a witness (a failing basis tuple) so a
failed verdict can be traced without rerunning anything.  Invariance under
the group is taken infinitesimally, i.e. as ad-invariance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Sequence

from .dirac_core import EEpsForm, LinearDirac, from_E_eps
from .exact_linalg import (
    I,
    ZERO,
    DimensionError,
    Matrix,
    Scalar,
    Subspace,
    annihilator,
    conj,
    kernel,
)
from .lie_core import (
    LieAlgebra,
    NotAnIdealError,
    ThreeForm,
    ce_diff_3form,
    ce_diff_on_Eform,
    is_ideal,
    is_subalgebra,
    quotient_action,
    quotient_projection,
    splitting_section,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Any = None

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class GroupReport:
    checks: tuple[Check, ...]
    extra: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "checks": [c.to_json() for c in self.checks]}
        out.update(self.extra)
        return out


# ---------------------------------------------------------------------------
# Dirac groups: an ideal k and a cocycle eps: g -> ∧²(g/k)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiracGroupDatum:
    """``eps[c]`` is the bivector on g/k assigned to the basis vector e_c of g."""

    g: LieAlgebra
    k: Subspace
    eps: tuple[Matrix, ...]

    def __post_init__(self):
        n = self.g.dim
        if self.k.ambient_dim != n:
            raise DimensionError(f"k lives in dimension {self.k.ambient_dim}, algebra has dimension {n}")
        if len(self.eps) != n:
            raise DimensionError(f"eps has {len(self.eps)} entries, expected one per basis vector ({n})")
        m = n - self.k.dim
        for c, P in enumerate(self.eps):
            if P.shape != (m, m):
                raise DimensionError(f"eps[{c}] has shape {P.shape}, quotient has dimension {m}")
            if not P.is_antisymmetric():
                raise ValueError(f"eps[{c}] is not antisymmetric")

    @property
    def quotient_dim(self) -> int:
        return self.g.dim - self.k.dim

    def apply(self, x: Sequence) -> Matrix:
        """eps(x) for an arbitrary vector x of g."""
        m = self.quotient_dim
        out = Matrix.zeros(m, m)
        for c, xc in enumerate(x):
            if xc:
                out = out + self.eps[c].scale(xc)
        return out

    def factored(self, xbar: Sequence) -> Matrix:
        """eps evaluated on the standard lift of a quotient vector."""
        return self.apply(splitting_section(self.k).apply(xbar))


def _act_on_bivector(A: Matrix, P: Matrix) -> Matrix:
    """Infinitesimal action of A on a bivector: A P + P A^T."""
    return A @ P + P @ A.T


def check_ideal(g: LieAlgebra, k: Subspace) -> bool:
    return is_ideal(g, k)


def _ideal_witness(g: LieAlgebra, k: Subspace):
    for i in range(g.dim):
        for a, v in enumerate(k.vectors):
            if not k.contains(g.bracket(g.basis(i), v)):
                return [i, a]
    return None


def _cocycle_witness(d: DiracGroupDatum):
    g, k = d.g, d.k
    m = d.quotient_dim
    S = splitting_section(k)
    pr = quotient_projection(k)
    lifts = [S.col(a) for a in range(m)]
    actions = [quotient_action(g, k, x) for x in lifts]
    eps_bar = [d.apply(x) for x in lifts]
    for a, b in combinations(range(m), 2):
        br = pr.apply(g.bracket(lifts[a], lifts[b]))
        rhs = Matrix.zeros(m, m)
        for c, w in enumerate(br):
            if w:
                rhs = rhs + eps_bar[c].scale(w)
        lhs = _act_on_bivector(actions[a], eps_bar[b]) - _act_on_bivector(actions[b], eps_bar[a])
        if lhs != rhs:
            return [a, b]
    return None


def check_cocycle(d: DiracGroupDatum) -> bool:
    """ad_x eps(y) - ad_y eps(x) - eps([x, y]) = 0 on the quotient g/k.

    The identity is evaluated on lifts of the quotient basis with
    ``[x, y]`` read modulo k; once eps vanishes on k this is the same as
    evaluating it on all of g.
    """
    if not is_ideal(d.g, d.k):
        raise NotAnIdealError("k is not an ideal")
    return _cocycle_witness(d) is None


def _vanishing_witness(d: DiracGroupDatum):
    for a, v in enumerate(d.k.vectors):
        if not d.apply(v).is_zero():
            return [a]
    return None


def check_vanishing_on_k(d: DiracGroupDatum) -> bool:
    return _vanishing_witness(d) is None


def dual_bracket_constants(d: DiracGroupDatum) -> list[list[tuple[Scalar, ...]]]:
    """[ebar*_a, ebar*_b] = sum_c eps(ebar_c)[a][b] ebar*_c on (g/k)*."""
    m = d.quotient_dim
    eps_bar = [d.factored(tuple(1 if t == c else 0 for t in range(m))) for c in range(m)]
    return [[tuple(eps_bar[c][a, b] for c in range(m)) for b in range(m)] for a in range(m)]


def _dual_jacobi_witness(d: DiracGroupDatum):
    m = d.quotient_dim
    c = dual_bracket_constants(d)

    def br(u, v):
        acc = [ZERO] * m
        for a, ua in enumerate(u):
            if ua:
                for b, vb in enumerate(v):
                    if vb:
                        w = ua * vb
                        acc = [x + w * y for x, y in zip(acc, c[a][b])]
        return acc

    basis = [[1 if t == a else 0 for t in range(m)] for a in range(m)]
    for a, b, e in combinations(range(m), 3):
        x, y, z = basis[a], basis[b], basis[e]
        tot = [p + q + r for p, q, r in zip(br(x, br(y, z)), br(y, br(z, x)), br(z, br(x, y)))]
        if any(tot):
            return [a, b, e]
    return None


def dual_jacobi(d: DiracGroupDatum) -> bool:
    """Jacobi identity for the bracket on (g/k)* dual to eps."""
    if not check_vanishing_on_k(d):
        raise ValueError("eps does not vanish on k, so it does not factor through g/k")
    return _dual_jacobi_witness(d) is None


def check_dirac_group_datum(d: DiracGroupDatum) -> GroupReport:
    ideal_w = _ideal_witness(d.g, d.k)
    checks = [Check("ideal", ideal_w is None, ideal_w)]
    van_w = _vanishing_witness(d)
    checks.append(Check("vanishing_on_k", van_w is None, van_w))
    if ideal_w is None:
        co_w = _cocycle_witness(d)
        checks.append(Check("cocycle", co_w is None, co_w))
    else:
        checks.append(Check("cocycle", False, {"reason": "k is not an ideal"}))
    # evaluated on the standard lift so that each failure is attributed to one check
    dj_w = _dual_jacobi_witness(d)
    checks.append(Check("dual_jacobi", dj_w is None, dj_w))
    return GroupReport(tuple(checks))


# ---------------------------------------------------------------------------
# dual-Dirac groups: an ideal E with an invariant 2-cocycle eps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualDiracGroupDatum:
    """``eps`` is in coordinates of the stored basis of E."""

    g: LieAlgebra
    E: Subspace
    eps: Matrix

    def __post_init__(self):
        if self.E.ambient_dim != self.g.dim:
            raise DimensionError("E does not live in the algebra")
        k = self.E.dim
        if self.eps.shape != (k, k):
            raise DimensionError(f"eps has shape {self.eps.shape} but dim E = {k}")
        if not self.eps.is_antisymmetric():
            raise ValueError("eps is not antisymmetric")


def _invariance_witness(g: LieAlgebra, E: Subspace, eps: Matrix):
    vs = E.vectors
    k = len(vs)
    for i in range(g.dim):
        x = g.basis(i)
        img = [E.coordinates(g.bracket(x, w)) for w in vs]
        for a in range(k):
            for b in range(a + 1, k):
                # eps([x, w_a], w_b) + eps(w_a, [x, w_b])
                val = sum((img[a][c] * eps[c, b] for c in range(k)), ZERO) + sum(
                    (eps[a, c] * img[b][c] for c in range(k)), ZERO
                )
                if val:
                    return [i, a, b]
    return None


def _cocycle_sum_witness(g: LieAlgebra, E: Subspace, eps: Matrix, H: ThreeForm | None = None):
    de = ce_diff_on_Eform(g, E, eps)
    hE = H.restrict(E) if H is not None else None
    for a, b, c in combinations(range(E.dim), 3):
        val = de[a][b][c] + (hE[a][b][c] if hE is not None else ZERO)
        if val:
            return [a, b, c]
    return None


def check_dual_dirac_group_datum(d: DualDiracGroupDatum) -> GroupReport:
    ideal_w = _ideal_witness(d.g, d.E)
    checks = [Check("ideal", ideal_w is None, ideal_w)]
    if ideal_w is None:
        inv_w = _invariance_witness(d.g, d.E, d.eps)
        checks.append(Check("invariance", inv_w is None, inv_w))
    else:
        checks.append(Check("invariance", False, {"reason": "E is not an ideal"}))
    if is_subalgebra(d.g, d.E):
        co_w = _cocycle_sum_witness(d.g, d.E, d.eps)
        checks.append(Check("cocycle", co_w is None, co_w))
    else:
        checks.append(Check("cocycle", False, {"reason": "E is not a subalgebra"}))
    return GroupReport(tuple(checks))


def _antisym_from_flat(k: int, flat: Sequence[Scalar]) -> Matrix:
    a = [[ZERO] * k for _ in range(k)]
    for (i, j), v in zip(combinations(range(k), 2), flat):
        a[i][j], a[j][i] = v, -v
    return Matrix(a, k)


def invariant_cocycle_space(g: LieAlgebra, E: Subspace) -> tuple[int, list[Matrix]]:
    """Invariant 2-cocycles on the ideal E: dimension and a basis (forms in E-coordinates)."""
    if not is_ideal(g, E):
        raise NotAnIdealError("E is not an ideal")
    k = E.dim
    pairs = list(combinations(range(k), 2))
    if not pairs:
        return 0, []
    unit = [_antisym_from_flat(k, [1 if q == p else 0 for q in range(len(pairs))]) for p in range(len(pairs))]
    # each unit form contributes one column of the linear system
    columns = []
    vs = E.vectors
    brE = [[E.coordinates(g.bracket(vs[a], vs[b])) for b in range(k)] for a in range(k)]
    adE = [[E.coordinates(g.bracket(g.basis(i), w)) for w in vs] for i in range(g.dim)]
    for U in unit:
        col = []
        for a, b, c in combinations(range(k), 3):
            val = ZERO
            for p, (y, z) in ((a, (b, c)), (b, (c, a)), (c, (a, b))):
                val = val + sum((U[p, t] * brE[y][z][t] for t in range(k)), ZERO)
            col.append(val)
        for i in range(g.dim):
            img = adE[i]
            for a, b in pairs:
                col.append(
                    sum((img[a][t] * U[t, b] for t in range(k)), ZERO)
                    + sum((U[a, t] * img[b][t] for t in range(k)), ZERO)
                )
        columns.append(col)
    nrows = len(columns[0])
    M = Matrix([[columns[c][r] for c in range(len(pairs))] for r in range(nrows)], len(pairs))
    sol = kernel(M)
    return sol.dim, [_antisym_from_flat(k, v) for v in sol.vectors]


# ---------------------------------------------------------------------------
# generalized complex groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GCGroupDatum:
    g_real: LieAlgebra
    k: Subspace

    def __post_init__(self):
        if self.k.ambient_dim != self.g_real.dim:
            raise DimensionError("k does not live in the complexified algebra")
        if any(not x.is_real() for row in self.g_real.structure_constants for v in row for x in v):
            raise ValueError("real form has non-real structure constants")


def complex_structure_from_eigenspace(k: Subspace) -> Matrix:
    """J with i-eigenspace k and -i-eigenspace conj(k); requires k ⊕ conj(k) = everything."""
    n = k.ambient_dim
    kb = conj(k)
    P = Matrix(list(k.vectors) + list(kb.vectors), n).T
    D = Matrix([[I if (i == j and i < k.dim) else (-I if i == j else ZERO) for j in range(n)] for i in range(n)], n)
    return P @ D @ P.inverse()


def check_gc_group_datum(d: GCGroupDatum) -> GroupReport:
    g, k = d.g_real, d.k
    n = g.dim
    kb = conj(k)
    ideal_w = _ideal_witness(g, k)
    checks = [Check("ideal", ideal_w is None, ideal_w)]
    meet = k & kb
    checks.append(Check("transverse_to_conjugate", meet.is_zero(), None if meet.is_zero() else [meet.dim]))
    total = (k + kb).dim
    checks.append(Check("spans_complexification", total == n, None if total == n else [total, n]))
    extra = {}
    if meet.is_zero() and total == n:
        J = complex_structure_from_eigenspace(k)
        sq = (J @ J) == -Matrix.identity(n)
        real = J == J.conj()
        checks.append(Check("square_is_minus_one", sq, None if sq else "J^2 != -1"))
        checks.append(Check("real", real, None if real else "J is not conjugation-fixed"))
        extra["J"] = J
    return GroupReport(tuple(checks), extra)


def gc_lagrangian(k: Subspace) -> LinearDirac:
    """The Lagrangian k ⊕ Ann(k)."""
    n = k.ambient_dim
    z = (ZERO,) * n
    return LinearDirac(n, Subspace(2 * n, [v + z for v in k.vectors] + [z + a for a in annihilator(k).vectors]))


# ---------------------------------------------------------------------------
# twisted dual-Dirac groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwistedDualDiracGroupDatum:
    g: LieAlgebra
    E: Subspace
    eps: Matrix
    H: ThreeForm

    def __post_init__(self):
        DualDiracGroupDatum(self.g, self.E, self.eps)
        if self.H.dim != self.g.dim:
            raise DimensionError("three-form dimension differs from the algebra")


def check_twisted_dual_dirac_group_datum(d: TwistedDualDiracGroupDatum) -> GroupReport:
    ideal_w = _ideal_witness(d.g, d.E)
    checks = [Check("ideal", ideal_w is None, ideal_w)]
    if ideal_w is None:
        inv_w = _invariance_witness(d.g, d.E, d.eps)
        checks.append(Check("invariance", inv_w is None, inv_w))
    else:
        checks.append(Check("invariance", False, {"reason": "E is not an ideal"}))
    dH = ce_diff_3form(d.g, d.H)
    bad = next((list(q) for q, v in sorted(dH.items()) if v), None)
    checks.append(Check("closed", bad is None, bad))
    if is_subalgebra(d.g, d.E):
        w = _cocycle_sum_witness(d.g, d.E, d.eps, d.H)
        checks.append(Check("twist_matches", w is None, w))
    else:
        checks.append(Check("twist_matches", False, {"reason": "E is not a subalgebra"}))
    return GroupReport(tuple(checks))


def twisted_lagrangian(d: TwistedDualDiracGroupDatum) -> LinearDirac:
    return from_E_eps(EEpsForm(d.E, d.eps))


# ---------------------------------------------------------------------------
# multiplicativity on sampled group elements
# ---------------------------------------------------------------------------


def multiplicativity_residual(
    g: LieAlgebra,
    k: Subspace,
    elements: dict[str, Matrix],
    beta: dict[str, Matrix],
    products: Sequence[tuple[str, str, str]],
) -> dict[tuple[str, str], Matrix]:
    """beta_{gh} - beta_h - Ad(h^-1) beta_g for every listed product (g, h, gh)."""
    n = g.dim
    m = n - k.dim
    for name, A in elements.items():
        if A.shape != (n, n):
            raise DimensionError(f"Ad matrix {name!r} has shape {A.shape}")
        if any(k.reduce(A.apply(v)) for v in k.vectors):
            raise ValueError(f"Ad matrix {name!r} does not preserve k")
    for name, B in beta.items():
        if B.shape != (m, m) or not B.is_antisymmetric():
            raise DimensionError(f"beta {name!r} is not an antisymmetric {m} x {m} matrix")
    pr, S = quotient_projection(k), splitting_section(k)
    out = {}
    for a, b, ab in products:
        for name in (a, b, ab):
            if name not in elements or name not in beta:
                raise KeyError(f"element {name!r} missing from the table")
        Abar = pr @ elements[b].inverse() @ S
        out[(a, b)] = beta[ab] - beta[b] - Abar @ beta[a] @ Abar.T
    return out


__all__ = [
    "Check",
    "GroupReport",
    "DiracGroupDatum",
    "DualDiracGroupDatum",
    "GCGroupDatum",
    "TwistedDualDiracGroupDatum",
    "check_ideal",
    "check_cocycle",
    "check_vanishing_on_k",
    "dual_bracket_constants",
    "dual_jacobi",
    "check_dirac_group_datum",
    "check_dual_dirac_group_datum",
    "invariant_cocycle_space",
    "complex_structure_from_eigenspace",
    "check_gc_group_datum",
    "gc_lagrangian",
    "check_twisted_dual_dirac_group_datum",
    "twisted_lagrangian",
    "multiplicativity_residual",
]
