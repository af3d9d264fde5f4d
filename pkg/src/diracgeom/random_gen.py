"""Seeded random instances over Q or Q(i).

Entries have numerators and denominators bounded by ``HEIGHT`` and are zero
with probability ``zero_bias``; small heights keep exact elimination cheap
while still producing nontrivial kernels.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .dirac_core import (
    EEpsForm,
    LinearDirac,
    PiUForm,
    b_transform,
    decompose_E_eps,
    decompose_pi_U,
    from_E_eps,
    from_pi_U,
    is_generalized_complex,
)
from .dirac_maps import DiracMapProblem
from .exact_linalg import ONE, ZERO, Matrix, Scalar, Subspace, image, preimage
from .lie_core import ThreeForm, closed_three_forms, quotient_indices

HEIGHT = 5


def rand_rational(rng: random.Random, zero_bias: float = 0.3) -> Fraction:
    if rng.random() < zero_bias:
        return Fraction(0)
    num = rng.randint(-HEIGHT, HEIGHT) or 1
    return Fraction(num, rng.randint(1, HEIGHT))


def rand_scalar(rng: random.Random, zero_bias: float = 0.3, complex_: bool = False) -> Scalar:
    re = rand_rational(rng, zero_bias)
    im = rand_rational(rng, zero_bias) if complex_ else 0
    return Scalar(re, im)


def rand_matrix(rng, rows: int, cols: int, zero_bias: float = 0.3, complex_: bool = False) -> Matrix:
    return Matrix([[rand_scalar(rng, zero_bias, complex_) for _ in range(cols)] for _ in range(rows)], cols)


def rand_antisym(rng, k: int, zero_bias: float = 0.3, complex_: bool = False) -> Matrix:
    a = [[ZERO] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            x = rand_scalar(rng, zero_bias, complex_)
            a[i][j], a[j][i] = x, -x
    return Matrix(a, k)


def rand_subspace(rng, n: int, dim: int | None = None, complex_: bool = False) -> Subspace:
    """Span of ``dim`` random vectors (the span may come out smaller)."""
    if dim is None:
        dim = rng.randint(0, n)
    return Subspace(n, rand_matrix(rng, dim, n, 0.4, complex_).row_list())


def rand_subspace_of(rng, s: Subspace, dim: int | None = None) -> Subspace:
    """Random subspace of ``s``."""
    if dim is None:
        dim = rng.randint(0, s.dim)
    coeffs = rand_matrix(rng, dim, s.dim, 0.4)
    return Subspace(s.ambient_dim, [s.combine(c) for c in coeffs.row_list()])


def random_lagrangian(rng, n: int, complex_: bool = False) -> LinearDirac:
    """L(E, eps) for random E and eps, sometimes followed by a random B-transform."""
    E = rand_subspace(rng, n, complex_=complex_)
    d = from_E_eps(EEpsForm(E, rand_antisym(rng, E.dim, complex_=complex_)))
    if rng.random() < 0.5:
        d = b_transform(d, rand_antisym(rng, n, 0.6, complex_))
    return d


def random_gc(rng, n: int, tries: int = 200) -> LinearDirac:
    """A random generalized complex structure (n must be even)."""
    if n % 2:
        raise ValueError("generalized complex structures need even dimension")
    for _ in range(tries):
        d = random_lagrangian(rng, n, complex_=True)
        if is_generalized_complex(d):
            return d
    raise RuntimeError("no generalized complex structure found")


def random_map(rng, n1: int, n2: int) -> Matrix:
    return rand_matrix(rng, n2, n1, 0.4)


def random_triple(rng, n1: int, n2: int) -> DiracMapProblem:
    """Unconstrained (f, d1, d2); usually not a Dirac map."""
    return DiracMapProblem(random_map(rng, n1, n2), random_lagrangian(rng, n1), random_lagrangian(rng, n2))


def _phi_coords(f: Matrix, U1: Subspace, U2: Subspace) -> Matrix:
    """Matrix of f^T|U2 : U2 -> U1 in the stored bases; row a = coordinates of f^T u_a."""
    return Matrix._from_rows([U1.coordinates(f.T.apply(u)) for u in U2.vectors], U1.dim)


def dirac_target(f: Matrix, d1: LinearDirac, U2: Subspace) -> LinearDirac:
    """The structure L(phi* pi1, U2) on the codomain; requires f^T U2 ⊆ U1."""
    form1 = decompose_pi_U(d1)
    C = _phi_coords(f, form1.U, U2)
    return from_pi_U(PiUForm(U2, C @ form1.pi @ C.T))


def random_dirac_map(rng, n1: int, n2: int, f: Matrix | None = None, d1: LinearDirac | None = None) -> DiracMapProblem:
    """(f, L(pi1, U1), L(pi2, U2)) with f^T U2 ⊆ U1 and pi2 = phi* pi1."""
    if f is None:
        f = random_map(rng, n1, n2)
    if d1 is None:
        U1 = rand_subspace(rng, n1)
        d1 = from_pi_U(PiUForm(U1, rand_antisym(rng, U1.dim)))
    U1 = decompose_pi_U(d1).U
    U2 = rand_subspace_of(rng, preimage(f.T, U1))
    return DiracMapProblem(f, d1, dirac_target(f, d1, U2))


def dual_dirac_source(f: Matrix, d2: LinearDirac, E1: Subspace) -> LinearDirac:
    """L(E1, f*eps2) on the domain; requires f E1 ⊆ E2."""
    form2 = decompose_E_eps(d2)
    C = Matrix._from_rows([form2.E.coordinates(f.apply(b)) for b in E1.vectors], form2.E.dim)
    return from_E_eps(EEpsForm(E1, C @ form2.eps @ C.T))


def random_dual_dirac_map(rng, n1: int, n2: int, f: Matrix | None = None, d2: LinearDirac | None = None) -> DiracMapProblem:
    """(f, L(E1, f*eps2), L(E2, eps2)) with f E1 ⊆ E2."""
    if f is None:
        f = random_map(rng, n1, n2)
    if d2 is None:
        E1 = rand_subspace(rng, n1)
        extra = rand_subspace(rng, n2)
        E2 = image(f, E1) + extra
        d2 = from_E_eps(EEpsForm(E2, rand_antisym(rng, E2.dim)))
        return DiracMapProblem(f, dual_dirac_source(f, d2, E1), d2)
    E2 = decompose_E_eps(d2).E
    E1 = rand_subspace_of(rng, preimage(f, E2))
    return DiracMapProblem(f, dual_dirac_source(f, d2, E1), d2)


def perturbed_dirac_map(rng, n1: int, n2: int) -> DiracMapProblem:
    """A Dirac map whose target has been nudged; sits on the boundary of the condition."""
    p = random_dirac_map(rng, n1, n2)
    B = rand_antisym(rng, n2, 0.7)
    return DiracMapProblem(p.f, p.d1, b_transform(p.d2, B))


def mixed_triple(rng, n1: int, n2: int) -> DiracMapProblem:
    """One of: unconstrained, Dirac by construction, perturbed Dirac, dual-Dirac by construction."""
    r = rng.random()
    if r < 0.3:
        return random_triple(rng, n1, n2)
    if r < 0.6:
        return random_dirac_map(rng, n1, n2)
    if r < 0.8:
        return perturbed_dirac_map(rng, n1, n2)
    return random_dual_dirac_map(rng, n1, n2)


def random_complement(rng, k: Subspace) -> Subspace:
    """Graph of a random map from the standard complement of ``k`` into ``k``."""
    n = k.ambient_dim
    vs = []
    for j in quotient_indices(k):
        v = [ONE if t == j else ZERO for t in range(n)]
        w = k.combine([rand_scalar(rng, 0.3) for _ in range(k.dim)])
        vs.append([a + b for a, b in zip(v, w)])
    return Subspace(n, vs)


def random_closed_three_form(rng, g) -> ThreeForm:
    """Random element of the closed invariant three-forms on ``g``."""
    space = closed_three_forms(g)
    flat = space.combine([rand_scalar(rng, 0.2) for _ in range(space.dim)]) if space.dim else (ZERO,) * space.ambient_dim
    return ThreeForm.from_flat(g.dim, flat)
