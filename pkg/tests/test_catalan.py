import itertools

import pytest
from hypothesis import given, settings, strategies as st

from catnerve._kernels import catalan_number
from catnerve.catalan import (
    L, M, R, S00, S01, S11, U, CatalanSimplex, collapsible, count_simplices, degeneracy,
    enumerate_simplices, face, is_degenerate, is_total_degeneracy, mu, named_simplex,
    nondegenerate_core, point, pullback, spine_sum, triangle_name,
)
from catnerve.ordcomb import IndexSubset, codegeneracy, delta_of_subset, full_subset, \
    subset_image, subset_preimage

FIVE = {(0, 0, 0), (0, 1, 1), (1, 0, 1), (0, 0, 1), (1, 1, 1)}  # (x01, x12, x02)


def pairs(n):
    return [(p, q) for p in range(n + 1) for q in range(p + 1, n + 1)]


def brute_force(n):
    """Every labelling of the pairs of [n] whose triangles are all among the five 2-simplices."""
    ps = pairs(n)
    out = set()
    for bits in itertools.product((0, 1), repeat=len(ps)):
        e = dict(zip(ps, bits))
        if all((e[(p, r)], e[(r, q)], e[(p, q)]) in FIVE
               for p, r, q in itertools.combinations(range(n + 1), 3)):
            out.add(tuple(sorted(e.items())))
    return out


def as_labels(x):
    return tuple(sorted(((p, q), x.edge(p, q)) for p, q in pairs(x.dim)))


def naive_degeneracy(labels, n, i):
    """s_i on a labelling of [n]: pull back along the map hitting i twice."""
    e = dict(labels)
    s = lambda p: p if p <= i else p - 1
    return tuple(sorted(((p, q), 0 if s(p) == s(q) else e[(s(p), s(q))]) for p, q in pairs(n + 1)))


def catalan_recurrence(k):
    c = [1]
    for m in range(k):
        c.append(c[m] * 2 * (2 * m + 1) // (m + 2))
    return c[k]


CENSUS = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786]
NONDEGENERATE = [1, 1, 2, 4, 9, 21]


def test_census_frozen():
    assert [count_simplices(n) for n in range(11)] == CENSUS
    assert CENSUS == [catalan_recurrence(n + 1) for n in range(11)]
    assert CENSUS == [catalan_number(n + 1) for n in range(11)]


@pytest.mark.parametrize("n", range(6))
def test_census_against_brute_force(n):
    got = {as_labels(x) for x in enumerate_simplices(n)}
    assert len(got) == len(enumerate_simplices(n))
    assert got == brute_force(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_nondegenerate_against_brute_force(n):
    images = {naive_degeneracy(y, n - 1, i) for y in brute_force(n - 1) for i in range(n)}
    nondeg = brute_force(n) - images
    assert len(nondeg) == NONDEGENERATE[n]
    assert {as_labels(x) for x in enumerate_simplices(n, True)} == nondeg


def test_triangle_rule_matches_five_triples():
    for bits in itertools.product((0, 1), repeat=3):
        x01, x12, x02 = bits
        ok = bits in FIVE
        try:
            CatalanSimplex.from_edges(2, {(0, 1): x01, (1, 2): x12, (0, 2): x02})
            built = True
        except ValueError:
            built = False
        assert ok == built, bits
    assert {triangle_name(x) for x in enumerate_simplices(2)} == {"s0(0)", "s0(1)", "s1(1)", "u", "m"}


def test_named_simplices():
    assert [x.dim for x in enumerate_simplices(0)] == [0]
    assert len(enumerate_simplices(1)) == 2
    assert named_simplex("u").edges == (0, 0, 1)
    assert named_simplex("m") == mu(2)
    assert (L.edge(0, 1), L.edge(1, 2), L.edge(2, 3), L.edge(0, 2), L.edge(1, 3), L.edge(0, 3)) == (0, 0, 1, 1, 1, 1)
    assert R.spine() == (1, 0, 0) and R.edge(0, 2) == R.edge(1, 3) == R.edge(0, 3) == 1
    with pytest.raises(KeyError):
        named_simplex("nope")
    with pytest.raises(ValueError):
        named_simplex("mu")


def test_face_examples():
    assert face(L, (0, 2, 3)) == M
    assert face(L, IndexSubset(3, (1, 2, 3))) == S01
    for x in enumerate_simplices(4):
        assert face(x, full_subset(4)) == x
    with pytest.raises(ValueError):
        face(L, IndexSubset(4, (0, 1)))


def test_degeneracy_examples():
    one = named_simplex("1")
    assert degeneracy(one, 0) == S01
    assert degeneracy(one, 1) == S11
    assert degeneracy(point(), 0) == named_simplex("0")
    x = degeneracy(M, 1)
    assert (x.edge(0, 1), x.edge(1, 2), x.edge(2, 3), x.edge(0, 2), x.edge(1, 3), x.edge(0, 3)) == (1, 0, 1, 1, 1, 1)


def test_core_examples():
    core, col = nondegenerate_core(S00)
    assert core == point() and col.values == (0, 0, 0)
    core, col = nondegenerate_core(U)
    assert core == U and col.values == (0, 1, 2)
    core, col = nondegenerate_core(degeneracy(M, 1))
    assert core == M and col == codegeneracy(2, 1)


def test_is_degenerate_examples():
    assert is_degenerate(named_simplex("0"))
    assert not is_degenerate(U)
    assert not is_degenerate(mu(4))


def test_spine_sum():
    assert spine_sum(mu(5)) == 5
    assert spine_sum(L) == 1
    assert spine_sum(U) == 0


def test_degeneracies_are_degenerate_and_collapsible():
    for n in range(5):
        for x in enumerate_simplices(n):
            for i in range(n + 1):
                y = degeneracy(x, i)
                assert collapsible(y, i)
                assert is_degenerate(y)
                assert face(y, [v for v in range(n + 2) if v != i + 1]) == x


def d(x, i):
    return face(x, [v for v in range(x.dim + 1) if v != i])


def test_simplicial_identities_exhaustive():
    for n in range(6):
        for x in enumerate_simplices(n):
            for j in range(n + 1):
                sj = degeneracy(x, j)
                for i in range(j + 1):
                    assert degeneracy(degeneracy(x, j), i) == degeneracy(degeneracy(x, i), j + 1)
                for i in range(n + 2):
                    if i < j:
                        want = degeneracy(d(x, i), j - 1) if n > 0 else None
                    elif i in (j, j + 1):
                        want = x
                    else:
                        want = degeneracy(d(x, i - 1), j)
                    if want is not None:
                        assert d(sj, i) == want, (x, i, j)
            if n >= 2:
                for j in range(n + 1):
                    for i in range(j):
                        assert d(d(x, j), i) == d(d(x, i), j - 1)


def test_degeneracy_face_lemma_exhaustive():
    """(s_i x)_C is x_{sigma C}, degenerated once more exactly when C meets both i and i+1."""
    for n in range(5):
        for x in enumerate_simplices(n):
            for i in range(n + 1):
                y = degeneracy(x, i)
                sig = codegeneracy(n, i)
                for k in range(1, n + 3):
                    for els in itertools.combinations(range(n + 2), k):
                        C = IndexSubset(n + 1, els)
                        sC = subset_image(sig, C)
                        base = face(x, sC)
                        if len(sC) == len(C):
                            assert face(y, C) == base
                        else:
                            j = sC.elements.index(i)
                            assert face(y, C) == degeneracy(base, j)


def test_pullback_agrees_with_faces_and_degeneracies():
    for n in range(4):
        for x in enumerate_simplices(n):
            for i in range(n + 1):
                assert pullback(x, codegeneracy(n, i)) == degeneracy(x, i)
            C = IndexSubset(n, tuple(range(0, n + 1, 2)))
            assert pullback(x, delta_of_subset(C)) == face(x, C)


def test_core_reconstructs():
    for n in range(7):
        for x in enumerate_simplices(n):
            core, col = nondegenerate_core(x)
            assert not is_degenerate(core)
            assert col.is_surjective()
            assert pullback(core, col) == x


def test_core_invariant_under_degeneracy():
    for n in range(5):
        for x in enumerate_simplices(n):
            for i in range(n + 1):
                assert nondegenerate_core(degeneracy(x, i))[0] == nondegenerate_core(x)[0]


def test_long_edge_zero_forces_total_degeneracy():
    for n in range(1, 7):
        for x in enumerate_simplices(n):
            if x.edge(0, n) == 0:
                assert is_total_degeneracy(x)
                assert nondegenerate_core(x)[0] == point()


simplex_dims = st.integers(0, 6)


@st.composite
def simplices(draw, lo=0, hi=6):
    n = draw(st.integers(lo, hi))
    xs = enumerate_simplices(n)
    return xs[draw(st.integers(0, len(xs) - 1))]


@st.composite
def nested_subsets(draw):
    x = draw(simplices(1, 6))
    n = x.dim
    B = sorted(draw(st.sets(st.integers(0, n), min_size=1)))
    A = sorted(draw(st.sets(st.sampled_from(B), min_size=1)))
    return x, IndexSubset(n, B), IndexSubset(n, A)


@settings(deadline=None, max_examples=300)
@given(nested_subsets())
def test_face_of_face(args):
    x, B, A = args
    assert face(face(x, B), subset_preimage(delta_of_subset(B), A)) == face(x, A)


@settings(deadline=None)
@given(simplices())
def test_json_roundtrip(x):
    assert CatalanSimplex.from_json(x.to_json()) == x


def test_rejects_bad_simplices():
    with pytest.raises(ValueError):
        CatalanSimplex(2, (1, 1, 0))
    with pytest.raises(ValueError):
        CatalanSimplex(2, (1, 1))
    with pytest.raises(ValueError):
        CatalanSimplex.from_json({"dim": 1, "edges": []})
