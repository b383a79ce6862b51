import itertools

import pytest
from hypothesis import given, settings, strategies as st

from catnerve.ordcomb import (
    IndexSubset, MonotoneMap, codegeneracy, coface, compose, delta_of_subset, epi_mono_factor,
    full_subset, identity, interval, reindex_in_interval, subset_image, subset_preimage,
)


def all_maps(m, n):
    for vals in itertools.combinations_with_replacement(range(n + 1), m + 1):
        yield MonotoneMap(m, n, vals)


@st.composite
def monotone_maps(draw, max_dim=6):
    m = draw(st.integers(0, max_dim))
    n = draw(st.integers(0, max_dim))
    vals = sorted(draw(st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1)))
    return MonotoneMap(m, n, vals)


def test_rejects_bad_maps():
    with pytest.raises(ValueError):
        MonotoneMap(1, 2, (2, 1))
    with pytest.raises(ValueError):
        MonotoneMap(1, 1, (0, 2))
    with pytest.raises(ValueError):
        MonotoneMap(2, 2, (0, 1))


def test_compose_examples():
    assert compose(coface(1, 0), codegeneracy(0, 0)) == identity(0)
    dC = delta_of_subset(IndexSubset(3, (0, 2, 3)))
    d12 = delta_of_subset(IndexSubset(2, (1, 2)))
    assert compose(d12, dC).values == (2, 3)
    with pytest.raises(ValueError):
        compose(identity(1), identity(2))


@settings(deadline=None)
@given(monotone_maps())
def test_identity_is_neutral(f):
    assert compose(identity(f.dom_dim), f) == f
    assert compose(f, identity(f.cod_dim)) == f


def test_simplicial_identities_exhaustive():
    for n in range(2, 7):
        # d_j d_i = d_i d_{j-1} for i < j, as maps [n-2] -> [n]
        for j in range(n + 1):
            for i in range(j):
                assert compose(coface(n - 1, i), coface(n, j)) == compose(coface(n - 1, j - 1), coface(n, i))
    for n in range(0, 6):
        # s_j s_i = s_i s_{j+1} for i <= j, as maps [n+2] -> [n]
        for j in range(n + 1):
            for i in range(j + 1):
                assert compose(codegeneracy(n + 1, j + 1), codegeneracy(n, i)) == \
                    compose(codegeneracy(n + 1, i), codegeneracy(n, j))
    for n in range(1, 7):
        # mixed identities for s_j d_i : [n-1] -> [n] -> [n-1]
        for j in range(n):
            for i in range(n + 1):
                lhs = compose(coface(n, i), codegeneracy(n - 1, j))
                if i < j:
                    rhs = compose(codegeneracy(n - 2, j - 1), coface(n - 1, i))
                elif i in (j, j + 1):
                    rhs = identity(n - 1)
                else:
                    rhs = compose(codegeneracy(n - 2, j), coface(n - 1, i - 1))
                assert lhs == rhs, (n, i, j)


def test_epi_mono_examples():
    s1 = codegeneracy(1, 1)
    assert epi_mono_factor(s1) == (s1, identity(1))
    d1 = coface(2, 1)
    assert epi_mono_factor(d1) == (identity(1), d1)
    epi, mono = epi_mono_factor(MonotoneMap(2, 2, (0, 0, 2)))
    assert epi == codegeneracy(1, 0)
    assert mono == MonotoneMap(1, 2, (0, 2))


def test_epi_mono_exhaustive():
    for m in range(6):
        for n in range(6):
            for f in all_maps(m, n):
                epi, mono = epi_mono_factor(f)
                assert epi.is_surjective() and mono.is_injective()
                assert compose(epi, mono) == f


def test_delta_of_subset():
    for n in range(5):
        assert delta_of_subset(full_subset(n)) == identity(n)
    assert delta_of_subset(IndexSubset(3, (0, 3))).values == (0, 3)
    assert delta_of_subset(IndexSubset(3, (0, 2, 3))).values == (0, 2, 3)


def test_image_of_delta_is_subset():
    for n in range(7):
        for k in range(1, n + 2):
            for els in itertools.combinations(range(n + 1), k):
                C = IndexSubset(n, els)
                d = delta_of_subset(C)
                assert d.is_injective()
                assert subset_image(d, full_subset(len(C) - 1)) == C
                assert subset_preimage(d, C) == full_subset(len(C) - 1)


def test_subset_image_examples():
    assert subset_image(codegeneracy(2, 0), IndexSubset(3, (0, 1, 3))) == IndexSubset(2, (0, 2))
    assert subset_image(coface(2, 2), IndexSubset(1, (0, 1))) == IndexSubset(2, (0, 1))
    C = IndexSubset(4, (1, 3))
    assert subset_image(identity(4), C) == C
    with pytest.raises(ValueError):
        subset_image(identity(3), C)


def test_interval():
    assert interval(1, 2, 5) == IndexSubset(5, (1, 2))
    assert interval(0, 3, 3) == full_subset(3)
    assert interval(2, 5, 9).elements == (2, 3, 4, 5)
    for bad in ((2, 2, 4), (3, 1, 4), (0, 5, 4)):
        with pytest.raises(ValueError):
            interval(*bad)


def test_subset_accessors():
    C = IndexSubset(6, (0, 2, 5, 6))
    assert C.minus() == (0, 2, 5)
    assert C.succ(2) == 5
    assert C.intervals() == [(0, 2), (2, 5), (5, 6)]
    assert reindex_in_interval(C, 2, 6) == IndexSubset(4, (0, 3, 4))
    with pytest.raises(ValueError):
        IndexSubset(3, ())
    with pytest.raises(ValueError):
        IndexSubset(3, (2, 1))
    with pytest.raises(ValueError):
        IndexSubset(3, (0, 4))
