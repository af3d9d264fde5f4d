"""Hypothesis strategies for exact scalars, matrices, subspaces and Lagrangians."""

from fractions import Fraction

from hypothesis import strategies as st

from diracgeom import dirac_core as dc
from diracgeom.exact_linalg import Matrix, Scalar, Subspace

small_int = st.integers(-4, 4)
rational = st.builds(Fraction, small_int, st.integers(1, 4))
real_scalar = st.builds(Scalar, rational)
gauss_scalar = st.builds(Scalar, rational, rational)
# mostly zeros keeps kernels nontrivial
sparse_real = st.one_of(st.just(Scalar(0)), st.just(Scalar(0)), real_scalar)
sparse_complex = st.one_of(st.just(Scalar(0)), st.just(Scalar(0)), gauss_scalar)


@st.composite
def matrices(draw, rows=None, cols=None, entries=sparse_real, max_dim=4):
    r = draw(st.integers(0, max_dim)) if rows is None else rows
    c = draw(st.integers(0, max_dim)) if cols is None else cols
    data = [[draw(entries) for _ in range(c)] for _ in range(r)]
    return Matrix(data, c)


@st.composite
def subspaces(draw, n, entries=sparse_real, max_gens=None):
    k = draw(st.integers(0, max_gens if max_gens is not None else n + 1))
    return Subspace(n, [[draw(entries) for _ in range(n)] for _ in range(k)])


@st.composite
def antisym(draw, k, entries=sparse_real):
    rows = [[Scalar(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            x = draw(entries)
            rows[i][j], rows[j][i] = x, -x
    return Matrix(rows, k)


@st.composite
def lagrangians(draw, n, entries=sparse_real):
    E = draw(subspaces(n, entries))
    eps = draw(antisym(E.dim, entries))
    d = dc.from_E_eps(dc.EEpsForm(E, eps))
    if draw(st.booleans()):
        d = dc.b_transform(d, draw(antisym(n, entries)))
    return d


@st.composite
def dims(draw, lo=1, hi=3):
    return draw(st.integers(lo, hi))
