import itertools
from dataclasses import replace

import pytest

from catnerve.catalan import L, R, U, degeneracy, enumerate_simplices, face, mu, nondegenerate_core
from catnerve.classify.monoid import Monoid
from catnerve.classify.skew import (
    SkewClassifier, all_trees, chain_skew_structures, right_comb, skew_axioms, skew_classify,
    skew_coherence_audit, skew_embed_injectivity_probe, skew_equal, skew_from_monoid, skew_on_preorder,
    source_tree,
    with_components,
)
from catnerve.fincat import Functor, functor_compose, functor_product, indiscrete, terminal
from catnerve.mapcore import check_all, eta_of, t_keys, t_of, tables_equal
from catnerve.ordcomb import IndexSubset

Z2 = Monoid.cyclic(2)
Z3 = Monoid.cyclic(3)
STRICT = skew_from_monoid(Z2, "discrete")
PENTAGON = with_components(skew_from_monoid(Z2, "one_object"), alpha=["1"])
# lawful but not strict: lambda and rho are inverse non-identity elements of Z3
TWISTED = with_components(skew_from_monoid(Z3, "one_object"), lam=["1"], rho=["2"])


def test_axioms_examples():
    assert skew_axioms(STRICT) == []
    assert skew_axioms(skew_from_monoid(Z2, "one_object")) == []
    assert skew_axioms(TWISTED) == []
    report = skew_axioms(PENTAGON)
    assert report[0]["axiom"] == "pentagon"
    # three alphas on one side, two on the other: 3 and 2 differ mod 2
    assert (report[0]["lhs"], report[0]["rhs"]) == ("1", "0")
    assert {r["axiom"] for r in report} == {"pentagon", "alpha-lambda", "alpha-rho", "triangle"}


def test_axioms_catch_unit_failures():
    s = with_components(skew_from_monoid(Z3, "one_object"), lam=["1"], rho=["1"])
    kinds = {r["axiom"] for r in skew_axioms(s)}
    assert kinds == {"unit", "triangle"}


def test_tree_helpers():
    assert right_comb([0, 1, 2]) == (0, (1, 2))
    assert source_tree(IndexSubset(4, (0, 2, 4))) == ((0, 1), (2, 3))
    assert source_tree(IndexSubset(3, (0, 1, 2, 3))) == (0, (1, 2))
    assert [len(all_trees(0, n)) for n in range(1, 7)] == [1, 1, 2, 5, 14, 42]


def test_named_functors():
    s = TWISTED
    A = s.base
    d = skew_classify(s, 4)
    idA = Functor.identity(A)
    assert t_of(d, R) == functor_compose(s.tensor, functor_product([idA, s.unit]))
    assert t_of(d, L) == idA
    assert t_of(d, U) == s.unit
    assert t_of(d, mu(2)) == s.tensor
    assert t_of(d, mu(3)) == functor_compose(s.tensor, functor_product([idA, s.tensor]))


def test_named_transformations():
    d = skew_classify(TWISTED, 4)
    assert eta_of(d, L, (0, 2, 3)) == TWISTED.lam
    assert eta_of(d, R, (0, 2, 3)) == TWISTED.rho
    assert eta_of(d, mu(3), (0, 2, 3)) == TWISTED.alpha
    assert not TWISTED.lam.is_identity()


def test_functors_invariant_under_degeneracy():
    k = SkewClassifier(TWISTED)
    for n in range(2, 5):
        for x in enumerate_simplices(n):
            core = nondegenerate_core(x)[0]
            want = Functor.identity(terminal()) if core.dim == 0 else k.t(core) if core.dim >= 2 else \
                Functor.identity(TWISTED.base)
            assert k.t(x) == want, x
            for i in range(n + 1):
                assert k.t(degeneracy(x, i)) == k.t(x)


@pytest.mark.parametrize("s", [STRICT, TWISTED], ids=["strict", "twisted"])
def test_lawful_structures_are_coherent(s):
    k = SkewClassifier(s)
    d = k.mapdata(5)
    assert check_all(d)["status"] == "pass"
    assert k.conflicts == []
    assert k.searched > 0
    assert skew_coherence_audit(s, 5) == []


def test_pentagon_failure_surfaces_in_sweep_and_audit():
    k = SkewClassifier(PENTAGON)
    report = check_all(k.mapdata(5))
    assert report["status"] == "fail"
    assert report["failures"][0]["simplex"]["dim"] == 4
    assert check_all(k.mapdata(4))["status"] == "fail"
    assert check_all(k.mapdata(3))["status"] == "pass"
    conflicts = skew_coherence_audit(PENTAGON, 4)
    assert conflicts and {c["simplex"]["dim"] for c in conflicts} == {4}


def test_audit_finds_the_pentagon_on_mu4():
    conflicts = skew_coherence_audit(PENTAGON, 4, simplices=[mu(4)])
    assert [c["tree"] for c in conflicts] == [(((0, 1), 2), 3)]
    assert conflicts[0]["values"] == 2


def test_three_face_boundary_errors():
    k = SkewClassifier(replace(STRICT, lam=STRICT.alpha))
    with pytest.raises(ValueError):
        k.three_face(L)
    assert k.three_face(R) == STRICT.rho


def test_equal_inputs_give_equal_data():
    assert skew_embed_injectivity_probe(STRICT, skew_from_monoid(Z2, "discrete"), 4)
    assert tables_equal(skew_classify(STRICT, 4), skew_classify(skew_from_monoid(Z2, "discrete"), 4))


def test_different_bases_give_different_data():
    s3 = skew_from_monoid(Z3, "discrete")
    assert not tables_equal(skew_classify(STRICT, 3), skew_classify(s3, 3))
    assert skew_embed_injectivity_probe(STRICT, s3, 3)


def test_unit_only_difference_is_seen_at_u():
    E = indiscrete("ab")
    s1 = skew_on_preorder(E, lambda a, b: a, "a")
    s2 = skew_on_preorder(E, lambda a, b: a, "b")
    assert skew_axioms(s1) == skew_axioms(s2) == []
    assert s1.tensor == s2.tensor and s1.unit != s2.unit
    d1, d2 = skew_classify(s1, 3), skew_classify(s2, 3)
    assert t_of(d1, U) != t_of(d2, U)
    assert t_of(d1, mu(2)) == t_of(d2, mu(2))
    assert skew_embed_injectivity_probe(s1, s2, 3)


def test_chain_structures():
    chains = chain_skew_structures(3)
    assert len(chains) == 29
    assert len(chain_skew_structures(2)) == 4
    assert all(skew_axioms(s) == [] for s in chains)
    assert all(not skew_equal(a, b) for a, b in itertools.combinations(chains, 2))
    for s in chains[:5]:
        assert check_all(skew_classify(s, 4))["status"] == "pass"


def test_injectivity_over_chain_structures():
    chains = chain_skew_structures(3)
    pairs = list(itertools.combinations(chains, 2))
    assert len(pairs) >= 20
    for s1, s2 in pairs:
        assert skew_embed_injectivity_probe(s1, s2, 3)


def test_t_keys_cover_faces():
    k = SkewClassifier(TWISTED)
    d = k.mapdata(4)
    for x in t_keys(4):
        for C in itertools.combinations(range(x.dim + 1), 3):
            assert t_of(d, face(x, C)).tgt == (TWISTED.base if x.edge(C[0], C[-1]) else terminal())
