import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diracgeom import dirac_core as dc
from diracgeom.dirac_maps import is_dirac_M, is_dual_dirac
from diracgeom.lie_core import builtin, ce_diff_3form
from diracgeom.random_gen import (
    rand_antisym,
    rand_subspace,
    rand_subspace_of,
    random_closed_three_form,
    random_dirac_map,
    random_dual_dirac_map,
    random_gc,
    random_lagrangian,
)


def test_zero_dimension():
    d = random_lagrangian(random.Random(0), 0)
    assert d.n == 0 and d.sub.dim == 0


def test_thousand_lagrangians():
    rng = random.Random(1)
    for _ in range(1000):
        d = random_lagrangian(rng, 3)
        assert d.sub.dim == 3 and dc.is_lagrangian(d.sub, 3)


def test_thousand_dirac_maps():
    rng = random.Random(2)
    for _ in range(1000):
        n1, n2 = rng.randint(1, 3), rng.randint(1, 3)
        assert is_dirac_M(random_dirac_map(rng, n1, n2))


def test_same_seed_same_output():
    a = [random_lagrangian(random.Random("7:x"), 3) for _ in range(2)]
    assert a[0] == a[1]


def test_random_gc_needs_even_dimension():
    with pytest.raises(ValueError):
        random_gc(random.Random(0), 3)
    assert dc.is_generalized_complex(random_gc(random.Random(0), 2))


@given(st.integers(0, 2**32), st.integers(0, 4))
def test_antisym_and_subspaces(seed, n):
    rng = random.Random(seed)
    A = rand_antisym(rng, n)
    assert A.T == -A
    s = rand_subspace(rng, n)
    assert rand_subspace_of(rng, s) <= s


@given(st.integers(0, 2**32), st.integers(1, 3), st.integers(1, 3))
def test_dual_dirac_maps(seed, n1, n2):
    assert is_dual_dirac(random_dual_dirac_map(random.Random(seed), n1, n2))


@given(st.integers(0, 2**32), st.sampled_from(["heisenberg3", "sl2", "abelian:3", "axb"]))
def test_closed_three_forms_are_closed(seed, name):
    g = builtin(name)
    assert not any(ce_diff_3form(g, random_closed_three_form(random.Random(seed), g)).values())
