import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diracgeom import dirac_core as dc
from diracgeom.dirac_maps import (
    PREDICATES,
    DiracMapProblem,
    cond_M1,
    is_abm_dirac,
    is_dirac_Eeps,
    is_dirac_M,
    is_dirac_M2doubleprime,
    is_dirac_M2prime,
    is_dirac_piU,
    is_dual_dirac,
    is_dual_dirac_Eeps,
    m2_setwise,
    pullback,
    pullback_form,
    pushforward,
)
from diracgeom.exact_linalg import DimensionError, Matrix, Subspace
from diracgeom.random_gen import mixed_triple, random_dirac_map, random_dual_dirac_map, random_lagrangian, random_map

W12 = Matrix([[0, 1], [-1, 0]])
J2 = Matrix([[0, -1], [1, 0]])
ALL_DIRAC = (is_dirac_M, is_dirac_M2prime, is_dirac_M2doubleprime, is_dirac_piU, is_dirac_Eeps)
seeds = st.integers(0, 2**32)
dim = st.integers(1, 3)


def P(f, d1, d2):
    return DiracMapProblem(Matrix(f) if not isinstance(f, Matrix) else f, d1, d2)


# --- pushforward / pullback ------------------------------------------------


def test_pushforward_examples():
    d = dc.from_poisson(W12)
    assert pushforward(Matrix.identity(2), d) == d
    f = Matrix([[1, 0, 2], [0, 1, 1]])  # surjective
    assert pushforward(f, dc.tangent(3)) == dc.tangent(2)
    assert pushforward(Matrix.zeros(2, 3), dc.tangent(3)) == dc.cotangent(2)


def test_pullback_examples():
    d = dc.from_poisson(W12)
    assert pullback(Matrix.identity(2), d) == d
    f = Matrix([[1, 2], [0, 1], [3, 3]])
    assert pullback(f, dc.tangent(3)) == dc.tangent(2)
    omega = Matrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
    incl = Matrix([[1, 0], [0, 1], [0, 0]])
    assert pullback(incl, dc.from_presymplectic(omega)) == dc.from_presymplectic(Matrix([[0, 1], [-1, 0]]))
    assert pullback_form(incl, omega) == Matrix([[0, 1], [-1, 0]])


def test_shape_errors():
    with pytest.raises(DimensionError):
        DiracMapProblem(Matrix.zeros(2, 2), dc.tangent(3), dc.tangent(2))
    with pytest.raises(DimensionError):
        pushforward(Matrix.zeros(2, 2), dc.tangent(3))


@given(seeds, dim, dim)
def test_pushforward_is_dual_of_pullback(seed, n1, n2):
    rng = random.Random(seed)
    f, d = random_map(rng, n1, n2), random_lagrangian(rng, n1)
    assert pushforward(f, d) == dc.dual_swap(pullback(f.T, dc.dual_swap(d)))


@given(seeds, dim, dim, dim)
def test_pullback_is_contravariant(seed, n1, n2, n3):
    rng = random.Random(seed)
    f, g, d = random_map(rng, n1, n2), random_map(rng, n2, n3), random_lagrangian(rng, n3)
    assert pullback(g @ f, d) == pullback(f, pullback(g, d))


# --- the Dirac predicates --------------------------------------------------


@pytest.mark.parametrize("pred", ALL_DIRAC)
def test_identity_is_dirac(pred):
    d = dc.from_poisson(W12)
    assert pred(P(Matrix.identity(2), d, d))


@pytest.mark.parametrize("pred", ALL_DIRAC)
def test_maps_into_tangent_are_dirac(pred):
    f = Matrix([[1, 2], [0, 0], [3, -1]])
    assert pred(P(f, dc.from_poisson(W12), dc.tangent(3)))


@pytest.mark.parametrize("pred", ALL_DIRAC)
def test_poisson_counterexample(pred):
    assert not pred(P(Matrix.identity(2), dc.from_poisson(Matrix.zeros(2, 2)), dc.from_poisson(W12)))


def test_poisson_maps():
    pi1 = Matrix([[0, 1, 0], [-1, 0, 2], [0, -2, 0]])
    f = Matrix([[1, 0, 1], [0, 1, 0]])
    pi2 = f @ pi1 @ f.T
    assert is_dirac_piU(P(f, dc.from_poisson(pi1), dc.from_poisson(pi2)))
    assert not is_dirac_piU(P(f, dc.from_poisson(pi1), dc.from_poisson(pi2.scale(2))))


def test_holomorphic_maps():
    J3 = Matrix([[1, -2], [1, -1]])
    # f J2 = J3 f
    f = Matrix([[1, 1], [0, 1]])
    assert f @ J2 == J3 @ f
    p = P(f, dc.from_complex(J2), dc.from_complex(J3))
    assert is_dirac_piU(p) and is_dirac_M(p)
    assert is_dual_dirac_Eeps(p) and is_dual_dirac(p)
    q = P(Matrix.identity(2), dc.from_complex(J2), dc.from_complex(J3))
    assert not is_dirac_M(q) and not is_dual_dirac(q)


def test_eeps_examples():
    assert is_dirac_Eeps(P(Matrix.identity(2), dc.from_presymplectic(Matrix.zeros(2, 2)), dc.tangent(2)))
    d = dc.from_presymplectic(W12)
    assert is_dirac_Eeps(P(Matrix.identity(2), d, d))


def test_m2_double_prime_literal_reading_is_weaker():
    # zero map R -> R^2, cotangent source, Poisson target: (M1) holds, f^*L2 = V1*,
    # the literal inclusion holds, but (0, e1*) in L2 has no partner (fX, X + f*xi) in L1
    p = P(Matrix.zeros(2, 1), dc.cotangent(1), dc.from_poisson(W12))
    assert cond_M1(p) and m2_setwise(p)
    assert is_dirac_M2doubleprime(p)
    assert not is_dirac_M(p)
    assert not is_dirac_M2prime(p) and not is_dirac_piU(p) and not is_dirac_Eeps(p)


@given(seeds, dim, dim)
def test_literal_double_prime_is_M1_and_setwise(seed, n1, n2):
    p = mixed_triple(random.Random(seed), n1, n2)
    assert is_dirac_M2doubleprime(p) == (cond_M1(p) and m2_setwise(p))


@given(seeds, dim, dim)
def test_reference_implies_literal_double_prime(seed, n1, n2):
    p = mixed_triple(random.Random(seed), n1, n2)
    if is_dirac_M(p):
        assert is_dirac_M2doubleprime(p)


@given(seeds, dim, dim)
def test_equivalent_predicates_agree(seed, n1, n2):
    p = mixed_triple(random.Random(seed), n1, n2)
    m = is_dirac_M(p)
    assert is_dirac_M2prime(p) == m
    assert is_dirac_piU(p) == m
    assert is_dirac_Eeps(p) == m


@given(seeds, dim, dim)
def test_constructed_dirac_maps(seed, n1, n2):
    rng = random.Random(seed)
    assert is_dirac_M(random_dirac_map(rng, n1, n2))
    assert is_dual_dirac(random_dual_dirac_map(rng, n1, n2))


# --- dual-Dirac ------------------------------------------------------------


def test_dual_dirac_examples():
    d = dc.from_symplectic_gc(W12)
    assert is_dual_dirac(P(Matrix.identity(2), d, d))
    # a symplectomorphism of W12: determinant one
    f = Matrix([[2, 1], [1, 1]])
    assert pullback_form(f, W12) == W12
    assert is_dual_dirac(P(f, d, d)) and is_dual_dirac_Eeps(P(f, d, d))
    two = Matrix.identity(2).scale(2)
    assert not is_dual_dirac(P(two, d, d)) and not is_dual_dirac_Eeps(P(two, d, d))


def test_dual_dirac_E_violation():
    d2 = dc.from_E_eps(dc.EEpsForm(Subspace(2, [[1, 0]]), Matrix.zeros(1, 1)))
    p = P(Matrix.identity(2), dc.tangent(2), d2)
    assert not is_dual_dirac_Eeps(p) and not is_dual_dirac(p)


@given(seeds, dim, dim)
def test_dual_predicates_agree(seed, n1, n2):
    p = mixed_triple(random.Random(seed), n1, n2)
    assert is_dual_dirac(p) == is_dual_dirac_Eeps(p)
    q = DiracMapProblem(p.f.T, dc.dual_swap(p.d2), dc.dual_swap(p.d1))
    assert is_dual_dirac(p) == is_dirac_M(q)


def test_predicate_table_names():
    assert set(PREDICATES) == {"M", "M2p", "M2pp", "piU", "Eeps", "dual", "dual_Eeps"}


# --- the (f, B) condition --------------------------------------------------


def test_abm_examples():
    d = dc.from_poisson(W12)
    assert is_abm_dirac(Matrix.identity(2), Matrix.zeros(2, 2), d, d)
    # surjection whose kernel span{e3} lies in d ∩ V
    d1 = dc.from_E_eps(dc.EEpsForm(Subspace.full(3), Matrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])))
    q = Matrix([[1, 0, 0], [0, 1, 0]])
    assert is_abm_dirac(q, Matrix.zeros(3, 3), d1, pushforward(q, d1))
    assert not is_abm_dirac(q, Matrix.zeros(3, 3), d1, dc.tangent(2))


def test_abm_group_multiplication_instance():
    # heisenberg3 with k = center; D = k ⊕ Ann(k) on g, multiplication differential
    # (X, Y) -> Ad(h^-1) X + Y at h = exp(y), where Ad(exp(-y)) = 1 - ad(y)
    from diracgeom.group_data import gc_lagrangian
    from diracgeom.lie_core import heisenberg3

    g = heisenberg3()
    k = Subspace(3, [[0, 0, 1]])
    D = gc_lagrangian(k)
    Ad = Matrix.identity(3) - g.ad((0, 1, 0))
    f = Matrix.block([[Ad, Matrix.identity(3)]])
    assert is_abm_dirac(f, Matrix.zeros(6, 6), dc.product(D, D), D)
    assert is_dirac_M(P(f, dc.product(D, D), D))
