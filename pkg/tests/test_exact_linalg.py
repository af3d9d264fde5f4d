from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from diracgeom.exact_linalg import (
    I,
    ONE,
    ZERO,
    DimensionError,
    Matrix,
    Scalar,
    Subspace,
    annihilator,
    as_scalar,
    conj,
    dot,
    format_scalar,
    image,
    intersect,
    kernel,
    parse_scalar,
    preimage,
    rref,
    sum_subspaces,
)
from strategies import gauss_scalar, matrices, sparse_complex, sparse_real, subspaces


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(
        m.rows, m.cols, [sympy.Rational(x.re.numerator, x.re.denominator)
                         + sympy.I * sympy.Rational(x.im.numerator, x.im.denominator) for x in m.entries]
    )


def from_sympy_entry(e) -> Scalar:
    re, im = e.as_real_imag()
    return Scalar(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


def e(n, *idx):
    return tuple(ONE if k in idx else ZERO for k in range(n))


# --- scalars ---------------------------------------------------------------


def test_scalar_normal_form_is_unique():
    assert Scalar(Fraction(2, 4), Fraction(3, 6)) == Scalar(Fraction(1, 2), Fraction(1, 2))
    a = Scalar(Fraction(1, 3), 2)
    assert (a._a, a._b, a._d) == (1, 6, 3)


def test_scalar_field_ops():
    z = Scalar(1, 2)
    assert z * z.inverse() == ONE
    assert I * I == -ONE
    assert z.conjugate() == Scalar(1, -2)
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@pytest.mark.parametrize("text,value", [
    ("3", Scalar(3)),
    ("-1/2", Scalar(Fraction(-1, 2))),
    ("1/2+3/4*i", Scalar(Fraction(1, 2), Fraction(3, 4))),
    ("-2*i", Scalar(0, -2)),
    ("i", I),
    ("-i", -I),
    ("1-i", Scalar(1, -1)),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "1/", "abc", "1.5", "i*i"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


@given(gauss_scalar)
def test_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(gauss_scalar, gauss_scalar, gauss_scalar)
def test_scalar_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_as_scalar_refuses_floats():
    with pytest.raises(TypeError):
        as_scalar(0.5)


# --- examples --------------------------------------------------------------


@pytest.mark.parametrize("rows,expected", [
    ([[2, 0], [0, 3]], [[1, 0], [0, 1]]),
    ([[1, 1], [2, 2]], [[1, 1]]),
    ([[0, 1], [1, 0]], [[1, 0], [0, 1]]),
])
def test_rref_examples(rows, expected):
    assert rref(Matrix(rows)) == Matrix(expected)


def test_intersect_examples():
    assert intersect(Subspace(2, [e(2, 0)]), Subspace(2, [e(2, 1)])).is_zero()
    a = Subspace(3, [[1, 2, 3], [0, 1, 1]])
    assert intersect(a, a) == a
    got = intersect(Subspace(3, [e(3, 0), e(3, 1)]), Subspace(3, [e(3, 1), e(3, 2)]))
    assert got == Subspace(3, [e(3, 1)])
    assert e(3, 1) in got and e(3, 0) not in got


def test_annihilator_examples():
    assert annihilator(Subspace.zero(3)) == Subspace.full(3)
    assert annihilator(Subspace(2, [e(2, 0)])) == Subspace(2, [e(2, 1)])
    ann = annihilator(Subspace(2, [[1, 1]]))
    assert ann == Subspace(2, [[1, -1]])
    assert dot(ann.vectors[0], (ONE, ONE)) == ZERO


def test_preimage_examples():
    s = Subspace(3, [[1, 0, 2]])
    assert preimage(Matrix.identity(3), s) == s
    assert preimage(Matrix.zeros(2, 3), Subspace.zero(2)) == Subspace.full(3)
    f = Matrix([[1, 0]])
    got = preimage(f, Subspace.zero(1))
    assert got == Subspace(2, [e(2, 1)])
    assert all(not any(f.apply(v)) for v in got.vectors)


def test_image_kernel_conj_examples():
    s = Subspace(2, [[1, I]])
    assert image(Matrix.identity(2), s) == s
    assert conj(conj(s)) == s
    assert conj(s) == Subspace(2, [[1, -I]])
    k = kernel(Matrix([[1, 1]]))
    assert k == Subspace(2, [[1, -1]])
    assert Matrix([[1, 1]]).apply(k.vectors[0]) == (ZERO,)


def test_dimension_errors():
    with pytest.raises(DimensionError):
        intersect(Subspace.zero(2), Subspace.zero(3))
    with pytest.raises(DimensionError):
        Subspace(2, [[1, 2, 3]])
    with pytest.raises(DimensionError):
        image(Matrix.identity(2), Subspace.full(3))


def test_inverse():
    m = Matrix([[1, I], [0, 2]])
    assert m @ m.inverse() == Matrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 1], [1, 1]]).inverse()


# --- oracle comparisons against sympy --------------------------------------


@given(matrices(entries=sparse_real))
def test_rref_matches_sympy(m):
    ours = rref(m)
    red, _ = to_sympy(m).rref()
    rank = to_sympy(m).rank()
    theirs = [[from_sympy_entry(red[i, j]) for j in range(m.cols)] for i in range(rank)]
    assert ours == Matrix(theirs, m.cols)


@given(matrices(entries=sparse_complex, max_dim=3))
def test_complex_rank_and_nullity_match_sympy(m):
    S = to_sympy(m)
    assert m.rank() == S.rank(simplify=True)
    k = kernel(m)
    assert k.dim == m.cols - S.rank(simplify=True)
    for v in k.vectors:
        assert not any(m.apply(v))


# --- invariants ------------------------------------------------------------


@st.composite
def subspace_pair(draw, entries=sparse_complex):
    n = draw(st.integers(1, 4))
    return draw(subspaces(n, entries)), draw(subspaces(n, entries))


@given(subspace_pair())
def test_dimension_formula(ab):
    a, b = ab
    assert (a + b).dim + (a & b).dim == a.dim + b.dim


@given(subspace_pair())
def test_intersection_is_contained_in_both(ab):
    a, b = ab
    c = a & b
    assert c <= a and c <= b
    assert a <= a + b and b <= a + b


@given(subspace_pair(entries=sparse_complex))
def test_annihilator_reverses_inclusion_and_is_involutive(ab):
    a, b = ab
    s = a & b
    assert annihilator(a) <= annihilator(s)
    assert annihilator(annihilator(a)) == a
    assert annihilator(a).dim == a.ambient_dim - a.dim


@st.composite
def map_and_target(draw):
    n1, n2 = draw(st.integers(0, 4)), draw(st.integers(0, 4))
    return draw(matrices(n2, n1, sparse_complex)), draw(subspaces(n2, sparse_complex))


@given(map_and_target())
def test_image_of_preimage(fs):
    f, s = fs
    full = image(f, Subspace.full(f.cols))
    assert image(f, preimage(f, s)) == s & full


@given(subspaces(4, sparse_complex), st.permutations(range(5)))
def test_rref_canonical(s, perm):
    # any spanning set of the same subspace gives identical stored rows
    gens = list(s.vectors) + [tuple(ZERO for _ in range(4))]
    shuffled = [gens[i] for i in perm if i < len(gens)]
    combos = shuffled + [tuple(a + b for a, b in zip(shuffled[0], shuffled[-1]))] if shuffled else []
    assert Subspace(4, combos).vectors == s.vectors


@given(subspaces(3, sparse_complex))
def test_sum_with_zero(s):
    assert sum_subspaces(s, Subspace.zero(3)) == s
    assert intersect(s, Subspace.full(3)) == s
