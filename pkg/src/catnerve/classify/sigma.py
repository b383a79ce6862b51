"""Sigma-monoidal categories: many k-ary functors, all composites related by coherent isos.

Composites are written as terms:

    ("gen", k, i)              the i-th functor of arity k
    ("id",)                    the identity of A
    ("comp", outer, inners)    outer o (inner_1 x ... x inner_k)

Terms are kept normalized: an identity outer or an all-identity inner list is
dropped.  ``gamma_iso`` maps a pair (source term, target term) of equal arity
to an invertible transformation; the string "unique" asks for the only
transformation, which exists on categories whose hom-sets are singletons.
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Union

from ..catalan import (
    ONE, ZERO, U, core_of, face, is_total_degeneracy, mu, nondegenerate_up_to, spine_sum,
    strict_subsets_between,
)
from ..fincat import (
    FinCategory, Functor, NatTrans, check_functor, check_natural, functor_compose,
    functor_product, indiscrete, nat_identity, nat_inverse, nat_product, nat_vcomp, power,
    whisker_left, whisker_right,
)
from ..mapcore import MapData, MissingEntry, eta_of, lazy_tables, t_of
from ..ordcomb import IndexSubset, interval
from .common import constant, projection, unique_nat
from .lax import compositions

ID = ("id",)


def gen(k, i):
    return ("gen", k, i)


def comp(outer, inners):
    inners = tuple(inners)
    if outer == ID:
        if len(inners) != 1:
            raise ValueError("identity outer needs exactly one inner term")
        return inners[0]
    if all(t == ID for t in inners):
        return outer
    return ("comp", outer, inners)


def term_arity(t):
    if t == ID:
        return 1
    if t[0] == "gen":
        return t[1]
    return sum(term_arity(i) for i in t[2])


def term_json(t):
    if t == ID:
        return "id"
    if t[0] == "gen":
        return "g%d.%d" % (t[1], t[2])
    return [term_json(t[1]), [term_json(i) for i in t[2]]]


@dataclass
class SigmaStructure:
    base: FinCategory
    sigma: Dict[int, List[Functor]]
    gamma_iso: Union[str, Mapping] = "unique"
    h: str = "cyclic_by_dim"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def arity_bound(self):
        return max(self.sigma)

    def generators(self, k):
        """Terms of arity k with no composition: the functors of arity k, plus id for k = 1."""
        out = [gen(k, i) for i in range(len(self.sigma.get(k, ())))]
        if k == 1:
            out.append(ID)
        return out

    def functor(self, t):
        got = self._cache.get(("F", t))
        if got is None:
            if t == ID:
                got = Functor.identity(self.base)
            elif t[0] == "gen":
                try:
                    got = self.sigma[t[1]][t[2]]
                except (KeyError, IndexError):
                    raise MissingEntry("no functor %r" % (t,)) from None
            else:
                got = functor_compose(self.functor(t[1]), functor_product([self.functor(i) for i in t[2]]))
            self._cache[("F", t)] = got
        return got

    def iso(self, s, t):
        key = ("iso", s, t)
        got = self._cache.get(key)
        if got is None:
            if self.gamma_iso == "unique":
                got = unique_nat(self.functor(s), self.functor(t))
            else:
                try:
                    got = self.gamma_iso[(s, t)]
                except KeyError:
                    raise MissingEntry("no isomorphism %r => %r" % (s, t)) from None
            self._cache[key] = got
        return got

    def h_index(self, x):
        k = spine_sum(x)
        n = len(self.sigma.get(k, ()))
        if n == 0:
            raise MissingEntry("no functor of arity %d for %r" % (k, x))
        if self.h == "cyclic_by_dim":
            return x.dim % n
        if self.h == "first":
            return 0
        raise ValueError("unknown h rule %r" % self.h)


def terms(s, n, bound=None):
    """Normalized terms of arity n with at most two levels, outer arity <= bound."""
    bound = s.arity_bound if bound is None else bound
    out = list(s.generators(n))
    seen = set(out)
    for k in range(1, bound + 1):
        outers = [g for g in s.generators(k) if g != ID]
        for ks in compositions(n, k):
            choices = [s.generators(m) for m in ks]
            if any(not c for c in choices):
                continue
            for f in outers:
                for inner in itertools.product(*choices):
                    t = comp(f, inner)
                    if t not in seen:
                        seen.add(t)
                        out.append(t)
    return out


# ---- classifying map

def face_term(s, y):
    """Term for T^y, or None when T^y is the identity of I."""
    core = core_of(y)
    if core.dim == 0 or core == ZERO:
        return None
    if core == ONE:
        return ID
    return gen(spine_sum(core), s.h_index(core))


def source_term(s, x, C):
    outer = face_term(s, face(x, C))
    inners = [face_term(s, face(x, interval(c, sc, x.dim))) for c, sc in C.intervals()]
    return comp(outer, [t for t in inners if t is not None])


def sigma_classify(s, max_dim):
    """T^x is the functor h picks for x; eta^x_C is the designated isomorphism."""
    t_table, eta_table = lazy_tables(
        max_dim, lambda x: s.functor(face_term(s, x)),
        lambda x, C: s.iso(source_term(s, x, C), face_term(s, x)))
    return MapData(max_dim, s.base, t_table, eta_table)


def classifier_pairs(s, max_dim):
    """The (source, target) term pairs the classifying map reads, in first-use order."""
    out, seen = [], set()
    for x in nondegenerate_up_to(max_dim, 3):
        tgt = face_term(s, x)
        for C in strict_subsets_between(x.dim):
            p = (source_term(s, x, C), tgt)
            if p not in seen:
                seen.add(p)
                out.append(p)
    return out


# ---- axioms

def sigma_axioms(s, max_dim, coherence_bound=3):
    """Typing, surjectivity of h, invertibility of every isomorphism the classifier reads, coherence.

    Coherence (every isomorphism equals its route through a fixed base term,
    identities on the diagonal, and compatibility with whiskering) is checked
    on all terms of arity <= coherence_bound.
    """
    A = s.base
    out = []
    for k in sorted(s.sigma):
        for i, F in enumerate(s.sigma[k]):
            if F.src != power(A, k) or F.tgt != A:
                out.append({"axiom": "typing", "what": "functor boundary", "term": term_json(gen(k, i))})
            elif check_functor(F):
                out.append({"axiom": "typing", "what": "not a functor", "term": term_json(gen(k, i))})
    if out:
        return out
    hit = {k: set() for k in s.sigma}
    for x in nondegenerate_up_to(max_dim, 2):
        k = spine_sum(x)
        try:
            hit.setdefault(k, set()).add(s.h_index(x))
        except MissingEntry as e:
            out.append({"axiom": "h", "what": str(e), "simplex": x.to_json()})
    for k in sorted(s.sigma):
        if k <= max_dim:
            missed = sorted(set(range(len(s.sigma[k]))) - hit[k])
            if missed:
                out.append({"axiom": "h surjective", "arity": k, "missed": missed})
    if out:
        return out

    def check_iso(a, b):
        try:
            g = s.iso(a, b)
        except (MissingEntry, ValueError) as e:
            return {"axiom": "gamma", "what": str(e), "source": term_json(a), "target": term_json(b)}
        if g.src != s.functor(a) or g.tgt != s.functor(b):
            return {"axiom": "gamma", "what": "boundary", "source": term_json(a), "target": term_json(b)}
        if check_natural(g):
            return {"axiom": "gamma", "what": "not natural", "source": term_json(a), "target": term_json(b)}
        if nat_inverse(g) is None:
            return {"axiom": "gamma", "what": "not invertible", "source": term_json(a), "target": term_json(b)}
        return None

    for a, b in classifier_pairs(s, max_dim):
        bad = check_iso(a, b)
        if bad:
            out.append(bad)
    if out:
        return out
    for n in range(coherence_bound + 1):
        ts = terms(s, n, coherence_bound)
        for a in ts:
            for b in ts:
                bad = check_iso(a, b)
                if bad:
                    out.append(bad)
        if out:
            return out
        base = ts[0]
        for a in ts:
            if s.iso(a, a) != nat_identity(s.functor(a)):
                out.append({"axiom": "gamma identity", "term": term_json(a)})
            for b in ts:
                if s.iso(a, b) != nat_vcomp(s.iso(base, b), s.iso(a, base)):
                    out.append({"axiom": "gamma coherence", "source": term_json(a), "target": term_json(b),
                                "via": term_json(base)})
        out.extend(_whisker_coherence(s, ts))
    return out


def _whisker_coherence(s, ts):
    """Replacing one generator inside a composite acts by the whiskered generator isomorphism."""
    out = []
    for t in ts:
        if t == ID or t[0] != "comp":
            continue
        f, inners = t[1], t[2]
        tail = functor_product([s.functor(i) for i in inners])
        for f2 in s.generators(f[1]):
            if f2 in (f, ID):
                continue
            t2 = comp(f2, inners)
            if s.iso(t, t2) != whisker_right(s.iso(f, f2), tail):
                out.append({"axiom": "gamma whiskering", "source": term_json(t), "target": term_json(t2)})
        for j, g in enumerate(inners):
            for g2 in s.generators(term_arity(g)):
                if g2 == g:
                    continue
                inners2 = inners[:j] + (g2,) + inners[j + 1:]
                t2 = comp(f, inners2)
                parts = [nat_identity(s.functor(i)) for i in inners]
                parts[j] = s.iso(g, g2)
                if s.iso(t, t2) != whisker_left(s.functor(f), nat_product(parts)):
                    out.append({"axiom": "gamma whiskering", "source": term_json(t), "target": term_json(t2)})
    return out


# ---- E transformations and recovery

def e_transform(d, x):
    """Transformation built from eta's relating T^x to a fixed functor of its arity.

    spine sum 1: 1_A => T^x;  spine sum 0 (x_0n = 1): T^u => T^x;
    spine sum n >= 2: T^mu(n) => T^x.
    """
    k = spine_sum(x)
    if k == 1:
        return _e_one(d, x)
    if k == 0:
        if is_total_degeneracy(x):
            raise ValueError("spine sum 0 needs x_0n = 1")
        return _e_zero(d, x)
    m = x.dim
    spine = x.spine()
    ones = [i + 1 for i, b in enumerate(spine) if b]
    D = IndexSubset(m, tuple([0] + ones[:-1] + [m]))
    blocks = [_e_one(d, face(x, interval(c, sc, m))) for c, sc in D.intervals()]
    top = t_of(d, face(x, D))
    return nat_vcomp(eta_of(d, x, D), whisker_left(top, nat_product(blocks)))


def _e_one(d, x):
    m = x.dim
    if m == 1:
        return nat_identity(t_of(d, x))
    i = x.spine().index(1) + 1
    drop = 1 if i == 1 else i - 1
    D = IndexSubset(m, tuple(v for v in range(m + 1) if v != drop))
    return nat_vcomp(eta_of(d, x, D), _e_one(d, face(x, D)))


def _e_zero(d, x):
    m = x.dim
    if x == U:
        return nat_identity(t_of(d, x))
    D = IndexSubset(m, tuple([0] + list(range(2, m + 1))))
    xD = face(x, D)
    eta = eta_of(d, x, D)
    if x.edge(0, 2) == 0:
        return nat_vcomp(eta, _e_zero(d, xD))
    return nat_vcomp(eta, whisker_right(_e_one(d, xD), t_of(d, U)))


def e_base(d, k):
    """The functor every E of spine sum k starts from."""
    if k == 0:
        return t_of(d, U)
    if k == 1:
        return t_of(d, ONE)
    return t_of(d, mu(k))


@dataclass
class RecoveredSigma:
    base: FinCategory
    sigma: Dict[int, List[Functor]]
    witnesses: Dict[int, list]
    isos: Dict[tuple, NatTrans]


def sigma_recover(d, arity_bound=None):
    """Functors of each arity as the distinct T^x, with isomorphisms E_j . E_i^-1 between them."""
    top = d.max_dim if arity_bound is None else arity_bound
    sigma, wit = {}, {}
    for x in nondegenerate_up_to(d.max_dim, 2):
        k = spine_sum(x)
        if k > top:
            continue
        F = t_of(d, x)
        fs = sigma.setdefault(k, [])
        if F not in fs:
            fs.append(F)
            wit.setdefault(k, []).append(x)
    isos = {}
    for k in sorted(sigma):
        Es = [e_transform(d, x) for x in wit[k]]
        for i, j in itertools.permutations(range(len(Es)), 2):
            inv = nat_inverse(Es[i])
            if inv is None:
                raise ValueError("E transformation of %r is not invertible" % (wit[k][i],))
            isos[(k, i, j)] = nat_vcomp(Es[j], inv)
    return RecoveredSigma(d.base, sigma, wit, isos)


# ---- fixtures

def indiscrete_pair_structure(arity_bound=5):
    """Two-object indiscrete category; two binary functors (the projections), one of every other arity."""
    E = indiscrete(["a", "b"], name="E2")
    sigma = {0: [constant(E, 0, "a")], 1: [Functor.identity(E)], 2: [projection(E, 2, 0), projection(E, 2, 1)]}
    for k in range(3, arity_bound + 1):
        sigma[k] = [projection(E, k, 0)]
    return SigmaStructure(E, sigma, "unique", "cyclic_by_dim")
