"""Lie algebras from structure constants, invariant Courant brackets and Schouten brackets.

Vectors are tuples of Scalars in the basis ``e_0 .. e_{n-1}``; covectors use
the dual basis.  Bivectors are antisymmetric matrices ``P[i][j]`` and
trivectors or three-forms are alternating ``n x n x n`` tables, so that
``sum_{i<j} P[i][j] e_i ∧ e_j`` is the bivector held by ``P``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

from .dirac_core import LinearDirac, decompose_E_eps, pairing
from .exact_linalg import (
    ONE,
    ZERO,
    DimensionError,
    Matrix,
    Scalar,
    Subspace,
    as_scalar,
    dot,
    kernel,
)

Vector = tuple[Scalar, ...]
Table3 = tuple[tuple[tuple[Scalar, ...], ...], ...]


class NotALieAlgebraError(ValueError):
    pass


class NotASubalgebraError(ValueError):
    pass


class NotAnIdealError(ValueError):
    pass


def _zeros3(n: int) -> list[list[list[Scalar]]]:
    return [[[ZERO] * n for _ in range(n)] for _ in range(n)]


def _freeze3(t) -> Table3:
    return tuple(tuple(tuple(r) for r in m) for m in t)


def _perm_sign(p: Sequence[int]) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


class LieAlgebra:
    """Structure constants ``c[i][j][k]`` with ``[e_i, e_j] = sum_k c[i][j][k] e_k``."""

    __slots__ = ("dim", "structure_constants", "name", "_ad")

    def __init__(self, structure_constants, name: str = ""):
        c = [[tuple(as_scalar(x) for x in v) for v in row] for row in structure_constants]
        n = len(c)
        for row in c:
            if len(row) != n or any(len(v) != n for v in row):
                raise DimensionError("structure constants must form an n x n x n table")
        for i in range(n):
            if any(c[i][i]):
                raise NotALieAlgebraError(f"[e{i}, e{i}] is not zero")
            for j in range(i + 1, n):
                if any(a + b for a, b in zip(c[i][j], c[j][i])):
                    raise NotALieAlgebraError(f"bracket not antisymmetric on (e{i}, e{j})")
        self.dim = n
        self.structure_constants = tuple(tuple(row) for row in c)
        self.name = name
        # ad[i] is the matrix of ad(e_i): column j holds [e_i, e_j]
        self._ad = tuple(
            Matrix._from_rows([tuple(c[i][j][k] for j in range(n)) for k in range(n)], n) for i in range(n)
        )
        bad = self.jacobi_violation()
        if bad is not None:
            raise NotALieAlgebraError(f"Jacobi identity fails on basis triple {bad}")

    @classmethod
    def from_brackets(cls, n: int, brackets: dict[tuple[int, int], Sequence], name: str = "") -> "LieAlgebra":
        """Build from the pairs ``(i, j) -> [e_i, e_j]``; the rest is filled by antisymmetry or zero."""
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), v in brackets.items():
            if not (0 <= i < n and 0 <= j < n):
                raise DimensionError(f"bracket index ({i}, {j}) out of range")
            v = [as_scalar(x) for x in v]
            if len(v) != n:
                raise DimensionError(f"bracket ({i}, {j}) has length {len(v)}, expected {n}")
            if i == j:
                if any(v):
                    raise NotALieAlgebraError(f"[e{i}, e{i}] is not zero")
                continue
            if any(c[i][j]) and c[i][j] != v:
                raise NotALieAlgebraError(f"bracket ({i}, {j}) given twice inconsistently")
            c[i][j] = v
            c[j][i] = [-x for x in v]
        return cls(c, name)

    def jacobi_violation(self) -> tuple[int, int, int] | None:
        n = self.dim
        for i, j, k in combinations(range(n), 3):
            a = self.bracket(self.basis(i), self.bracket(self.basis(j), self.basis(k)))
            b = self.bracket(self.basis(j), self.bracket(self.basis(k), self.basis(i)))
            c = self.bracket(self.basis(k), self.bracket(self.basis(i), self.basis(j)))
            if any(x + y + z for x, y, z in zip(a, b, c)):
                return (i, j, k)
        return None

    def basis(self, i: int) -> Vector:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ad(x) acting on column vectors."""
        x = _check_vec(x, self.dim)
        out = Matrix.zeros(self.dim, self.dim)
        for i, xi in enumerate(x):
            if xi:
                out = out + self._ad[i].scale(xi)
        return out

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        n = self.dim
        x = _check_vec(x, n)
        y = _check_vec(y, n)
        acc = [ZERO] * n
        c = self.structure_constants
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                cij = c[i][j]
                w = xi * yj
                for k in range(n):
                    if cij[k]:
                        acc[k] = acc[k] + w * cij[k]
        return tuple(acc)

    def is_abelian(self) -> bool:
        return all(not any(v) for row in self.structure_constants for v in row)

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.structure_constants == other.structure_constants

    def __hash__(self) -> int:
        return hash(self.structure_constants)

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name or self.dim})"


def _check_vec(x: Sequence, n: int) -> Vector:
    x = tuple(as_scalar(v) for v in x)
    if len(x) != n:
        raise DimensionError(f"vector of length {len(x)} for algebra of dimension {n}")
    return x


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    return g.bracket(x, y)


# ---------------------------------------------------------------------------
# built-in algebras
# ---------------------------------------------------------------------------


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra.from_brackets(n, {}, f"abelian:{n}")


def heisenberg3() -> LieAlgebra:
    """Basis (x, y, z) with [x, y] = z."""
    return LieAlgebra.from_brackets(3, {(0, 1): (0, 0, 1)}, "heisenberg3")


def axb() -> LieAlgebra:
    """The two-dimensional non-abelian algebra, [e1, e2] = e2."""
    return LieAlgebra.from_brackets(2, {(0, 1): (0, 1)}, "axb")


def sl2() -> LieAlgebra:
    """Basis (h, e, f)."""
    return LieAlgebra.from_brackets(3, {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)}, "sl2")


def direct_sum(g: LieAlgebra, h: LieAlgebra, name: str = "") -> LieAlgebra:
    n, m = g.dim, h.dim
    br = {}
    for i in range(n):
        for j in range(i + 1, n):
            br[(i, j)] = g.structure_constants[i][j] + (ZERO,) * m
    for i in range(m):
        for j in range(i + 1, m):
            br[(n + i, n + j)] = (ZERO,) * n + h.structure_constants[i][j]
    return LieAlgebra.from_brackets(n + m, br, name)


def sl2xsl2() -> LieAlgebra:
    return direct_sum(sl2(), sl2(), "sl2xsl2")


def builtin(name: str) -> LieAlgebra:
    if name.startswith("abelian:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad abelian algebra name {name!r}") from None
        if n < 0:
            raise ValueError(f"bad abelian algebra name {name!r}")
        return abelian(n)
    table = {"heisenberg3": heisenberg3, "axb": axb, "sl2": sl2, "sl2xsl2": sl2xsl2}
    if name not in table:
        raise ValueError(f"unknown Lie algebra {name!r}")
    return table[name]()


BUILTIN_NAMES = ("abelian:2", "abelian:3", "abelian:4", "heisenberg3", "axb", "sl2", "sl2xsl2")


# ---------------------------------------------------------------------------
# subalgebras, ideals, Killing form
# ---------------------------------------------------------------------------


def is_subalgebra(g: LieAlgebra, s: Subspace) -> bool:
    vs = s.vectors
    return all(s.contains(g.bracket(vs[a], vs[b])) for a in range(len(vs)) for b in range(a + 1, len(vs)))


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    if s.ambient_dim != g.dim:
        raise DimensionError("subspace and algebra dimensions differ")
    return all(s.contains(g.bracket(g.basis(i), v)) for i in range(g.dim) for v in s.vectors)


def killing_form(g: LieAlgebra) -> Matrix:
    n = g.dim
    ads = g._ad
    prods = [[ads[i] @ ads[j] for j in range(n)] for i in range(n)]
    return Matrix([[sum((prods[i][j][k, k] for k in range(n)), ZERO) for j in range(n)] for i in range(n)], n)


def is_semisimple(g: LieAlgebra) -> bool:
    return g.dim > 0 and killing_form(g).rank() == g.dim


def complementary_ideal(g: LieAlgebra, k: Subspace) -> Subspace:
    """The Killing-orthogonal complement of the ideal ``k`` in a semisimple ``g``."""
    if not is_semisimple(g):
        raise ValueError("complementary ideal requires a semisimple algebra")
    if not is_ideal(g, k):
        raise NotAnIdealError("k is not an ideal")
    B = killing_form(g)
    comp = kernel(k.basis @ B) if k.dim else Subspace.full(g.dim)
    if not is_ideal(g, comp) or (comp & k).dim or comp.dim + k.dim != g.dim:
        raise AssertionError("Killing complement is not a complementary ideal")
    return comp


# ---------------------------------------------------------------------------
# forms on a subalgebra
# ---------------------------------------------------------------------------


def ce_diff_on_Eform(g: LieAlgebra, E: Subspace, eps: Matrix) -> Table3:
    """d_E eps(a, b, c) = eps(a,[b,c]) + eps(b,[c,a]) + eps(c,[a,b]) on the stored basis of E."""
    if not is_subalgebra(g, E):
        raise NotASubalgebraError("E is not closed under the bracket")
    k = E.dim
    if eps.shape != (k, k):
        raise DimensionError(f"eps has shape {eps.shape} but dim E = {k}")
    vs = E.vectors
    # coordinates of [b_a, b_b] in E
    br = [[E.coordinates(g.bracket(vs[a], vs[b])) for b in range(k)] for a in range(k)]

    def ev(a: int, coords) -> Scalar:
        return dot(eps.row(a), coords)

    out = _zeros3(k)
    for a, b, c in combinations(range(k), 3):
        val = ev(a, br[b][c]) + ev(b, br[c][a]) + ev(c, br[a][b])
        for p in permutations((0, 1, 2)):
            idx = [(a, b, c)[q] for q in p]
            out[idx[0]][idx[1]][idx[2]] = val if _perm_sign(p) > 0 else -val
    return _freeze3(out)


@dataclass(frozen=True)
class ThreeForm:
    """Alternating trilinear form ``H[i][j][k] = H(e_i, e_j, e_k)``."""

    table: Table3

    def __post_init__(self):
        t = self.table
        n = len(t)
        if any(len(m) != n or any(len(r) != n for r in m) for m in t):
            raise DimensionError("three-form table must be n x n x n")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    x = t[i][j][k]
                    if x != -t[j][i][k] or x != -t[i][k][j]:
                        raise ValueError(f"three-form not alternating at ({i}, {j}, {k})")

    @classmethod
    def zero(cls, n: int) -> "ThreeForm":
        return cls(_freeze3(_zeros3(n)))

    @classmethod
    def from_components(cls, n: int, comps: dict[tuple[int, int, int], object]) -> "ThreeForm":
        """Values on increasing index triples; everything else by antisymmetry."""
        t = _zeros3(n)
        for (i, j, k), v in comps.items():
            v = as_scalar(v)
            for p in permutations((0, 1, 2)):
                idx = [(i, j, k)[q] for q in p]
                t[idx[0]][idx[1]][idx[2]] = v if _perm_sign(p) > 0 else -v
        return cls(_freeze3(t))

    @classmethod
    def from_flat(cls, n: int, flat: Sequence) -> "ThreeForm":
        """Values on increasing index triples in lexicographic order."""
        triples = list(combinations(range(n), 3))
        if len(flat) != len(triples):
            raise DimensionError(f"expected {len(triples)} components, got {len(flat)}")
        return cls.from_components(n, dict(zip(triples, flat)))

    @property
    def dim(self) -> int:
        return len(self.table)

    def __call__(self, x: Sequence, y: Sequence, z: Sequence) -> Scalar:
        acc = ZERO
        t = self.table
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b or i == j:
                    continue
                ab = a * b
                row = t[i][j]
                for k, c in enumerate(z):
                    if c and row[k]:
                        acc = acc + ab * c * row[k]
        return acc

    def restrict(self, E: Subspace) -> Table3:
        vs = E.vectors
        k = len(vs)
        out = _zeros3(k)
        for a in range(k):
            for b in range(k):
                for c in range(k):
                    if len({a, b, c}) == 3:
                        out[a][b][c] = self(vs[a], vs[b], vs[c])
        return _freeze3(out)

    def flat(self) -> list[Scalar]:
        return [self.table[i][j][k] for i, j, k in combinations(range(self.dim), 3)]


def ce_diff_3form(g: LieAlgebra, H: ThreeForm) -> dict[tuple[int, int, int, int], Scalar]:
    """dH(x0,..,x3) = sum_{i<j} (-1)^{i+j} H([x_i, x_j], ...) on increasing basis quadruples."""
    n = g.dim
    out = {}
    for quad in combinations(range(n), 4):
        xs = [g.basis(q) for q in quad]
        acc = ZERO
        for i, j in combinations(range(4), 2):
            rest = [xs[r] for r in range(4) if r not in (i, j)]
            term = H(g.bracket(xs[i], xs[j]), rest[0], rest[1])
            acc = acc + term if (i + j) % 2 == 0 else acc - term
        out[quad] = acc
    return out


def is_closed(g: LieAlgebra, H: ThreeForm) -> bool:
    return not any(ce_diff_3form(g, H).values())


def closed_three_forms(g: LieAlgebra) -> Subspace:
    """Closed invariant three-forms, as a subspace of the flat component space."""
    n = g.dim
    triples = list(combinations(range(n), 3))
    if not triples:
        return Subspace.zero(0)
    cols = []
    for t in triples:
        H = ThreeForm.from_components(n, {t: 1})
        d = ce_diff_3form(g, H)
        cols.append([d[q] for q in sorted(d)])
    nquads = len(cols[0])
    if not nquads:
        return Subspace.full(len(triples))
    M = Matrix([[cols[c][r] for c in range(len(triples))] for r in range(nquads)], len(triples))
    return kernel(M)


# ---------------------------------------------------------------------------
# invariant Courant bracket
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantSection:
    x: Vector
    xi: Vector

    @classmethod
    def from_split(cls, v: Sequence, n: int) -> "InvariantSection":
        v = _check_vec(v, 2 * n)
        return cls(v[:n], v[n:])

    def as_split(self) -> Vector:
        return tuple(self.x) + tuple(self.xi)


def invariant_courant_bracket(g: LieAlgebra, a: InvariantSection, b: InvariantSection, H: ThreeForm | None = None) -> InvariantSection:
    """[x_a, x_b] + (Z -> -xi_b([x_a, Z]) + xi_a([x_b, Z]) + H(x_a, x_b, Z))."""
    n = g.dim
    xa, xb = _check_vec(a.x, n), _check_vec(b.x, n)
    xia, xib = _check_vec(a.xi, n), _check_vec(b.xi, n)
    if H is not None and H.dim != n:
        raise DimensionError("three-form dimension differs from the algebra")
    # Z -> xi([x, Z]) is the covector ad(x)^T xi
    ad_a, ad_b = g.ad(xa), g.ad(xb)
    cov = [ZERO] * n
    for k in range(n):
        col_a, col_b = ad_a.col(k), ad_b.col(k)
        cov[k] = dot(xia, col_b) - dot(xib, col_a)
    if H is not None:
        ek = g.basis
        cov = [cov[k] + H(xa, xb, ek(k)) for k in range(n)]
    return InvariantSection(g.bracket(xa, xb), tuple(cov))


def _check_lagrangian_on_g(g: LieAlgebra, d: LinearDirac) -> None:
    if d.n != g.dim:
        raise DimensionError("Dirac structure does not live on this algebra")


def invariant_integrable(g: LieAlgebra, d: LinearDirac, H: ThreeForm | None = None) -> bool:
    """Closure of ``d`` under the invariant bracket, checked on pairs of basis sections."""
    _check_lagrangian_on_g(g, d)
    n = g.dim
    secs = [InvariantSection.from_split(v, n) for v in d.sub.vectors]
    for a in range(len(secs)):
        for b in range(a + 1, len(secs)):
            if not d.sub.contains(invariant_courant_bracket(g, secs[a], secs[b], H).as_split()):
                return False
    return True


def integrability_formula(g: LieAlgebra, d: LinearDirac, H: ThreeForm | None = None) -> bool:
    """E is a subalgebra and d_E eps + H|E = 0, for d = L(E, eps)."""
    _check_lagrangian_on_g(g, d)
    form = decompose_E_eps(d)
    if not is_subalgebra(g, form.E):
        return False
    de = ce_diff_on_Eform(g, form.E, form.eps)
    if H is None:
        return not any(x for m in de for r in m for x in r)
    hE = H.restrict(form.E)
    return all(
        de[a][b][c] + hE[a][b][c] == ZERO for a in range(form.E.dim) for b in range(form.E.dim) for c in range(form.E.dim)
    )


def nijenhuis_invariant(g: LieAlgebra, a: InvariantSection, b: InvariantSection, c: InvariantSection, H: ThreeForm | None = None) -> Scalar:
    """One third of the cyclic sum of <[A,B], C>."""

    def term(p, q, r):
        return pairing(invariant_courant_bracket(g, p, q, H).as_split(), r.as_split())

    return (term(a, b, c) + term(b, c, a) + term(c, a, b)) * Scalar(1) / 3


# ---------------------------------------------------------------------------
# Schouten bracket of constant bivectors
# ---------------------------------------------------------------------------


def wedge3(u: Sequence[Scalar], v: Sequence[Scalar], w: Sequence[Scalar]) -> Table3:
    """Alternating table of u ∧ v ∧ w."""
    n = len(u)
    comps = {}
    for i, j, k in combinations(range(n), 3):
        val = (
            u[i] * (v[j] * w[k] - v[k] * w[j])
            - u[j] * (v[i] * w[k] - v[k] * w[i])
            + u[k] * (v[i] * w[j] - v[j] * w[i])
        )
        if val:
            comps[(i, j, k)] = val
    return _table_from_components(n, comps)


def _table_from_components(n: int, comps: dict[tuple[int, int, int], Scalar]) -> Table3:
    out = _zeros3(n)
    for (i, j, k), val in comps.items():
        for p in permutations((0, 1, 2)):
            idx = [(i, j, k)[q] for q in p]
            out[idx[0]][idx[1]][idx[2]] = val if _perm_sign(p) > 0 else -val
    return _freeze3(out)


def _check_bivector(P: Matrix, n: int) -> None:
    if P.shape != (n, n):
        raise DimensionError(f"bivector of shape {P.shape} on an algebra of dimension {n}")
    if not P.is_antisymmetric():
        raise ValueError("bivector is not antisymmetric")


def _add_wedge(comps: dict, u: Sequence[Scalar], j: int, l: int, c: Scalar) -> None:
    """comps += c * (u ∧ e_j ∧ e_l), keyed by increasing index triples."""
    if j == l:
        return
    for m, um in enumerate(u):
        if not um or m == j or m == l:
            continue
        trip = (m, j, l)
        key = tuple(sorted(trip))
        val = c * um if _perm_sign([key.index(t) for t in trip]) > 0 else -(c * um)
        comps[key] = comps.get(key, ZERO) + val


def schouten_constant(g: LieAlgebra, P: Matrix, Q: Matrix) -> Table3:
    """[P, Q] for constant bivectors via the Leibniz rule on e_i ∧ e_j.

    [x∧y, z∧w] = [x,z]∧y∧w - [x,w]∧y∧z - [y,z]∧x∧w + [y,w]∧x∧z
    """
    n = g.dim
    _check_bivector(P, n)
    _check_bivector(Q, n)
    c = g.structure_constants
    comps: dict[tuple[int, int, int], Scalar] = {}
    pairs = list(combinations(range(n), 2))
    for i, j in pairs:
        p = P[i, j]
        if not p:
            continue
        for k, l in pairs:
            q = Q[k, l]
            if not q:
                continue
            w = p * q
            _add_wedge(comps, c[i][k], j, l, w)
            _add_wedge(comps, c[i][l], j, k, -w)
            _add_wedge(comps, c[j][k], i, l, -w)
            _add_wedge(comps, c[j][l], i, k, w)
    return _table_from_components(n, {t: v for t, v in comps.items() if v})


def jacobiator_table(g: LieAlgebra, beta: Matrix) -> Table3:
    """Jacobiator of {f, g} = sum beta[i][j] (e_i f)(e_j g) on basis differentials.

    The left-invariant frame fails to commute, e_j e_k f - e_k e_j f = [e_j, e_k] f,
    and only that antisymmetric part survives the cyclic sum; with first jets
    a, b, c it contributes half a structure constant per second derivative.
    """
    n = g.dim
    _check_bivector(beta, n)
    c = g.structure_constants
    half = Scalar(1) / 2

    def second(j: int, k: int, m: int) -> Scalar:
        # antisymmetric part of e_j e_k applied to a function with differential e_m*
        return c[j][k][m] * half

    def one(p: int, q: int, r: int) -> Scalar:
        # {f_p, {f_q, f_r}} at the identity
        acc = ZERO
        for j in range(n):
            bpj = beta[p, j]
            if not bpj:
                continue
            for k in range(n):
                for l in range(n):
                    bkl = beta[k, l]
                    if not bkl:
                        continue
                    t = ZERO
                    if l == r:
                        t = t + second(j, k, q)
                    if k == q:
                        t = t + second(j, l, r)
                    if t:
                        acc = acc + bpj * bkl * t
        return acc

    out = _zeros3(n)
    for p in range(n):
        for q in range(n):
            for r in range(n):
                if len({p, q, r}) == 3:
                    out[p][q][r] = one(p, q, r) + one(q, r, p) + one(r, p, q)
    return _freeze3(out)


def is_zero3(t: Table3) -> bool:
    return not any(x for m in t for r in m for x in r)


def scale3(t: Table3, c) -> Table3:
    c = as_scalar(c)
    return _freeze3([[[c * x for x in r] for r in m] for m in t])


# ---------------------------------------------------------------------------
# quotients by an ideal
# ---------------------------------------------------------------------------


def quotient_indices(k: Subspace) -> list[int]:
    """Indices of the standard vectors spanning the chosen basis of g/k."""
    piv = set(k.pivots)
    return [j for j in range(k.ambient_dim) if j not in piv]


def quotient_projection(k: Subspace) -> Matrix:
    """Matrix of g -> g/k in the quotient basis."""
    n = k.ambient_dim
    idx = quotient_indices(k)
    cols = []
    for j in range(n):
        r = k.reduce(tuple(ONE if t == j else ZERO for t in range(n)))
        cols.append([r[a] for a in idx])
    return Matrix([[cols[j][a] for j in range(n)] for a in range(len(idx))], n)


def quotient_action(g: LieAlgebra, k: Subspace, x: Sequence) -> Matrix:
    """Matrix of ad(x) induced on g/k."""
    return quotient_projection(k) @ g.ad(x) @ splitting_section(k)


def splitting_section(k: Subspace, complement: Subspace | None = None) -> Matrix:
    """n x m matrix whose columns lift the quotient basis into ``complement``."""
    n = k.ambient_dim
    idx = quotient_indices(k)
    m = len(idx)
    if complement is None:
        return Matrix([[ONE if i == j else ZERO for j in idx] for i in range(n)], m)
    if complement.dim != m or (complement & k).dim:
        raise ValueError("not a complement of k")
    pr = quotient_projection(k)
    C = complement.basis.T  # n x m
    M = pr @ C  # m x m, invertible
    return C @ M.inverse()


def schouten_quotient(g: LieAlgebra, k: Subspace, P: Matrix, Q: Matrix, complement: Subspace | None = None) -> Table3:
    """[P, Q] on g/k computed through a splitting and projected back."""
    if not is_ideal(g, k):
        raise NotAnIdealError("k is not an ideal")
    m = g.dim - k.dim
    for B in (P, Q):
        if B.shape != (m, m) or not B.is_antisymmetric():
            raise DimensionError("bivectors must be antisymmetric on the quotient")
    S = splitting_section(k, complement)
    T = schouten_constant(g, S @ P @ S.T, S @ Q @ S.T)
    pr = quotient_projection(k)
    n = g.dim
    out = _zeros3(m)
    # project each slot: out[a][b][c] = sum pr[a,i] pr[b,j] pr[c,l] T[i][j][l]
    nz = [(i, j, l, T[i][j][l]) for i in range(n) for j in range(n) for l in range(n) if T[i][j][l]]
    for a in range(m):
        for b in range(m):
            for c in range(m):
                acc = ZERO
                for i, j, l, t in nz:
                    w = pr[a, i]
                    if w:
                        w = w * pr[b, j]
                        if w:
                            w = w * pr[c, l]
                            if w:
                                acc = acc + w * t
                out[a][b][c] = acc
    return _freeze3(out)


__all__ = [
    "LieAlgebra",
    "NotALieAlgebraError",
    "NotASubalgebraError",
    "NotAnIdealError",
    "InvariantSection",
    "ThreeForm",
    "bracket",
    "abelian",
    "heisenberg3",
    "axb",
    "sl2",
    "sl2xsl2",
    "direct_sum",
    "builtin",
    "BUILTIN_NAMES",
    "is_subalgebra",
    "is_ideal",
    "killing_form",
    "is_semisimple",
    "complementary_ideal",
    "ce_diff_on_Eform",
    "ce_diff_3form",
    "is_closed",
    "closed_three_forms",
    "invariant_courant_bracket",
    "invariant_integrable",
    "integrability_formula",
    "nijenhuis_invariant",
    "wedge3",
    "schouten_constant",
    "jacobiator_table",
    "is_zero3",
    "scale3",
    "quotient_indices",
    "quotient_projection",
    "quotient_action",
    "splitting_section",
    "schouten_quotient",
]
