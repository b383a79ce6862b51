import itertools

import pytest
from hypothesis import given, settings, strategies as st

from catnerve.necklace import chains, restrict_chain, spanning_chains, union, vertices
from catnerve.ordcomb import IndexSubset


def S(n, *els):
    return IndexSubset(n, els)


def test_vertices():
    assert len(vertices(3, 0, 3)) == 4
    assert vertices(3, 0, 1) == (S(3, 0, 1),)
    assert S(9, 1, 4, 5) in vertices(9, 1, 5)
    for n in range(1, 7):
        for p in range(n):
            for q in range(p + 1, n + 1):
                assert len(vertices(n, p, q)) == 2 ** (q - p - 1)
    with pytest.raises(ValueError):
        vertices(3, 2, 1)


def test_small_mapping_object_census():
    assert len(vertices(3, 0, 3)) == 4
    assert len(chains(3, 0, 3, 2, strict_only=True)) == 5
    assert len(chains(3, 0, 3, 3, strict_only=True)) == 2
    # with repeats allowed, the four identity chains join the five strict ones
    assert len(chains(3, 0, 3, 2)) == 9


def test_chain_example():
    assert (S(9, 1, 4, 5), S(9, 1, 2, 4, 5)) in chains(9, 1, 5, 2, strict_only=True)


def brute_chains(n, p, q, length):
    verts = [set(v.elements) for v in vertices(n, p, q)]
    return sum(1 for c in itertools.product(verts, repeat=length)
               if all(a < b for a, b in zip(c, c[1:])))


@pytest.mark.parametrize("n", range(2, 6))
def test_strict_chain_counts_against_brute_force(n):
    for length in range(1, 4):
        assert len(chains(n, 0, n, length, strict_only=True)) == brute_chains(n, 0, n, length)


def test_spanning_chain_counts():
    for n in range(2, 8):
        assert len(spanning_chains(n, 3)) == 2 ** (n - 1) - 2
    assert len(spanning_chains(4, 4)) == 6
    assert len(spanning_chains(3, 4)) == 0
    for n in range(2, 7):
        inner = n - 1
        expect = sum(1 for a in range(1 << inner) for b in range(1 << inner)
                     if a & b == a and a != b and a != 0 and b != (1 << inner) - 1)
        assert len(spanning_chains(n, 4)) == expect


def test_chains_are_nested_and_contain_endpoints():
    for c in chains(5, 1, 4, 3):
        for a, b in zip(c, c[1:]):
            assert set(a.elements) <= set(b.elements)
        for v in c:
            assert 1 in v and 4 in v and min(v.elements) == 1 and max(v.elements) == 4


def test_restrict_chain_examples():
    A, B = S(4, 0, 4), S(4, 0, 2, 4)
    assert restrict_chain(B, A) == [(0, 4, S(4, 0, 2, 4))]
    A, B = S(4, 0, 2, 4), S(4, 0, 1, 2, 4)
    assert restrict_chain(B, A) == [(0, 2, S(2, 0, 1, 2)), (2, 4, S(2, 0, 2))]
    for a, sa, piece in restrict_chain(A, A):
        assert piece == S(sa - a, 0, sa - a)
    with pytest.raises(ValueError):
        restrict_chain(S(4, 0, 4), S(4, 0, 1, 4))


@st.composite
def nested_pairs(draw):
    n = draw(st.integers(1, 8))
    inner = list(range(1, n))
    B = sorted(draw(st.sets(st.sampled_from(inner))) if inner else set())
    A = sorted(draw(st.sets(st.sampled_from(B))) if B else set())
    return n, IndexSubset(n, [0] + B + [n]), IndexSubset(n, [0] + A + [n])


@settings(deadline=None, max_examples=200)
@given(nested_pairs())
def test_restrictions_reassemble(args):
    n, B, A = args
    got = set()
    for a, sa, piece in restrict_chain(B, A):
        got |= {a + v for v in piece.elements}
    assert got == set(B.elements)


def test_union_composes_vertices():
    for n in range(2, 6):
        for r in range(1, n):
            for C in vertices(n, 0, r):
                for D in vertices(n, r, n):
                    assert union(C, D) in vertices(n, 0, n)
