"""Lax monoidal categories and their classifying maps.

A lax structure on A has n-ary tensors t[n] : A^n -> A, a unit comparison
iota : 1_A => t[1] and associators gamma[(n, ks)] : t[n] o (t[k1] x ... x t[kn]) => t[sum ks].
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from ..catalan import CatalanSimplex, L, U, core_of, face, mu, spine_sum
from ..fincat import (
    FinCategory, Functor, NatTrans, check_functor, check_natural, combine_indices, functor_compose,
    functor_product, nat_hcomp, nat_identity, nat_product, nat_vcomp, power, terminal,
    whisker_left, whisker_right,
)
from ..mapcore import MapData, MissingEntry, eta_of, lazy_tables, t_of
from ..ordcomb import IndexSubset, interval
from .monoid import monoid_category, monoid_tensor

Shape = Tuple[int, Tuple[int, ...]]


@dataclass
class LaxStructure:
    base: FinCategory
    tensors: Dict[int, Functor]
    iota: Optional[NatTrans]  # None when arity_bound is 0
    gamma: Dict[Shape, NatTrans]
    arity_bound: int

    def tensor(self, n):
        try:
            return self.tensors[n]
        except KeyError:
            raise MissingEntry("no %d-ary tensor (arity bound %d)" % (n, self.arity_bound)) from None

    def assoc(self, n, ks):
        try:
            return self.gamma[(n, tuple(ks))]
        except KeyError:
            raise MissingEntry("no associator of shape %r" % ((n, tuple(ks)),)) from None


def compositions(total, parts):
    """Tuples of `parts` naturals summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def lax_shapes(bound):
    """All (n, ks) with n <= bound and sum(ks) <= bound, in a fixed order."""
    out = []
    for n in range(bound + 1):
        for total in range(bound + 1):
            for ks in compositions(total, n):
                out.append((n, ks))
    return out


def gamma_source(s, n, ks):
    return functor_compose(s.tensor(n), functor_product([s.tensor(k) for k in ks]))


def strict_from_monoid(M, arity_bound, presentation="one_object"):
    """Tensors are iterated products; iota and every gamma are identities."""
    A = monoid_category(M, presentation)
    tensors = {n: monoid_tensor(M, A, n, presentation) for n in range(arity_bound + 1)}
    iota = NatTrans(Functor.identity(A), tensors[1], A.ident) if arity_bound >= 1 else None
    gamma = {}
    for n, ks in lax_shapes(arity_bound):
        src = functor_compose(tensors[n], functor_product([tensors[k] for k in ks]))
        gamma[(n, ks)] = NatTrans(src, tensors[sum(ks)], A.ident[src.obj_map])
    return LaxStructure(A, tensors, iota, gamma, arity_bound)


def with_iota(s, components):
    """Copy of s with iota replaced (components indexed by objects of A)."""
    iota = NatTrans(s.iota.src, s.iota.tgt, components)
    return LaxStructure(s.base, dict(s.tensors), iota, dict(s.gamma), s.arity_bound)


def _ids(t):
    return t.component_ids()


def lax_axioms(s):
    """Typing, naturality, the associativity squares and both unit triangles."""
    A = s.base
    B = s.arity_bound
    out = []
    for n in range(B + 1):
        F = s.tensors.get(n)
        if F is None:
            out.append({"axiom": "typing", "what": "missing tensor", "n": n})
            continue
        if F.src != power(A, n) or F.tgt != A:
            out.append({"axiom": "typing", "what": "tensor boundary", "n": n})
        elif check_functor(F):
            out.append({"axiom": "typing", "what": "tensor not a functor", "n": n})
    if out:
        return out
    if B >= 1:
        if s.iota is None:
            out.append({"axiom": "typing", "what": "missing iota"})
        elif s.iota.src != Functor.identity(A) or s.iota.tgt != s.tensors[1]:
            out.append({"axiom": "typing", "what": "iota boundary"})
        elif check_natural(s.iota):
            out.append({"axiom": "typing", "what": "iota not natural"})
    for n, ks in lax_shapes(B):
        g = s.gamma.get((n, ks))
        if g is None:
            out.append({"axiom": "typing", "what": "missing associator", "shape": [n, list(ks)]})
            continue
        if g.src != gamma_source(s, n, ks) or g.tgt != s.tensors[sum(ks)]:
            out.append({"axiom": "typing", "what": "associator boundary", "shape": [n, list(ks)]})
        elif check_natural(g):
            out.append({"axiom": "typing", "what": "associator not natural", "shape": [n, list(ks)]})
    if out:
        return out
    # associativity: gamma_{K,ms} . (gamma_{n,ks} o 1) = gamma_{n,Ms} . (1 o prod gamma_{ki, ms_i})
    # compared on component arrays; transformations are only built for witnesses
    no, nm = A.n_obj, A.n_mor
    tails = {}
    for n, ks in lax_shapes(B):
        K = sum(ks)
        g_outer = s.gamma[(n, ks)].components
        for total in range(B + 1):
            for ms in compositions(total, K):
                groups, pos = [], 0
                for k in ks:
                    groups.append(ms[pos:pos + k])
                    pos += k
                Ms = tuple(sum(g) for g in groups)
                tail = tails.get(ms)
                if tail is None:
                    tail = tails[ms] = combine_indices([s.tensors[m].obj_map for m in ms],
                                                       [no ** m for m in ms], [no] * K)
                lhs = A.compose(s.gamma[(K, ms)].components, g_outer[tail])
                inner = combine_indices([s.gamma[(k, g)].components for k, g in zip(ks, groups)],
                                        [no ** m for m in Ms], [nm] * n)
                rhs = A.compose(s.gamma[(n, Ms)].components, s.tensors[n].mor_map[inner])
                if not np.array_equal(lhs, rhs):
                    tailF = functor_product([s.tensors[m] for m in ms])
                    lhsT = nat_vcomp(s.gamma[(K, ms)], whisker_right(s.gamma[(n, ks)], tailF))
                    innerT = nat_product([s.gamma[(k, g)] for k, g in zip(ks, groups)])
                    rhsT = nat_vcomp(s.gamma[(n, Ms)], whisker_left(s.tensors[n], innerT))
                    out.append({"axiom": "associativity", "n": n, "ks": list(ks), "ms": list(ms),
                                "lhs": _ids(lhsT), "rhs": _ids(rhsT)})
    # unit triangles
    if B >= 1:
        for n in range(B + 1):
            Tn = s.tensors[n]
            left = nat_vcomp(s.gamma[(1, (n,))], whisker_right(s.iota, Tn))
            if left != nat_identity(Tn):
                out.append({"axiom": "left unitality", "n": n, "lhs": _ids(left),
                            "rhs": _ids(nat_identity(Tn))})
            right = nat_vcomp(s.gamma[(n, (1,) * n)], whisker_left(Tn, nat_product([s.iota] * n)))
            if right != nat_identity(Tn):
                out.append({"axiom": "right unitality", "n": n, "lhs": _ids(right),
                            "rhs": _ids(nat_identity(Tn))})
    return out


# ---- classifying map

def face_kind(y):
    """How T^y looks in the lax construction: 'I', 'id' (1_A) or the tensor arity."""
    core = core_of(y)
    if core.dim == 0:
        return "I"
    if core.dim == 1:
        return "id"
    return spine_sum(core)


def iota_bar(s, kind):
    """(T-bar, iota-bar): a 1_A factor is pushed to t[1] by iota, tensors stay put."""
    if kind == "I":
        return Functor.identity(terminal()), nat_identity(Functor.identity(terminal()))
    if kind == "id":
        return s.tensor(1), s.iota
    F = s.tensor(kind)
    return F, nat_identity(F)


def lax_eta(s, x, C):
    outer = face_kind(face(x, C))
    ks, bars = [], []
    for c, sc in C.intervals():
        kind = face_kind(face(x, interval(c, sc, x.dim)))
        bars.append(iota_bar(s, kind)[1])
        if kind != "I":
            ks.append(1 if kind == "id" else kind)
    n = 1 if outer == "id" else outer
    g = s.assoc(n, tuple(ks))
    return nat_vcomp(g, nat_hcomp(iota_bar(s, outer)[1], nat_product(bars)))


def lax_classify(s, max_dim):
    """Map data with T^x = t[spine sum] and eta = gamma . (iota-bar o prod iota-bar).

    Tables are filled lazily; a missing tensor or associator surfaces when the
    entry that needs it is first read.
    """
    t_table, eta_table = lazy_tables(max_dim, lambda x: s.tensor(spine_sum(x)),
                                     lambda x, C: lax_eta(s, x, C))
    return MapData(max_dim, s.base, t_table, eta_table)


# ---- recovery

def hat(k):
    """Width of the spine block used for an inner arity k."""
    return {0: 2, 1: 3}.get(k, k)


def _block(k):
    if k == 0:
        return [0, 0]
    if k == 1:
        return [0, 0, 1]
    return [1] * k


def _from_spine(spine):
    """Simplex with the given spine and every longer edge equal to 1."""
    n = len(spine)
    bits = {}
    for p in range(n + 1):
        for q in range(p + 1, n + 1):
            bits[(p, q)] = spine[p] if q == p + 1 else 1
    return CatalanSimplex.from_edges(n, bits)


# nullary associator: a 4-simplex whose face on {0,2,4} is u and whose two blocks are all 0
_NULLARY = CatalanSimplex.from_edges(4, {
    (0, 1): 0, (1, 2): 0, (2, 3): 0, (3, 4): 0, (0, 2): 0, (1, 3): 0, (2, 4): 0,
    (0, 3): 1, (1, 4): 1, (0, 4): 1})


def gamma_pattern(n, ks):
    """(x, C) with eta^x_C equal to gamma_{n, ks} under the lax construction."""
    ks = tuple(ks)
    if len(ks) != n:
        raise ValueError("need n inner arities")
    if n == 0:
        return _NULLARY, IndexSubset(4, (0, 2, 4))
    if n == 1:
        spine = [0, 0] + _block(ks[0])
        x = _from_spine(spine)
        return x, IndexSubset(x.dim, (0, 1, 2, x.dim))
    spine = []
    cuts = [0]
    for k in ks:
        spine += _block(k)
        cuts.append(cuts[-1] + hat(k))
    x = _from_spine(spine)
    return x, IndexSubset(x.dim, tuple(cuts))


def recovery_dim(arity_bound):
    """Largest simplex dimension read by lax_recover."""
    dims = [4, 3] + [gamma_pattern(n, ks)[0].dim for n, ks in lax_shapes(arity_bound)]
    return max(dims + [arity_bound])


def lax_recover(d, arity_bound):
    A = d.base
    if d.max_dim < recovery_dim(arity_bound):
        raise ValueError("recovery up to arity %d reads simplices of dimension %d; data stops at %d"
                         % (arity_bound, recovery_dim(arity_bound), d.max_dim))
    tensors = {}
    for n in range(arity_bound + 1):
        if n == 0:
            tensors[n] = t_of(d, U)
        elif n == 1:
            tensors[n] = t_of(d, L)
        else:
            tensors[n] = t_of(d, mu(n))
    iota = eta_of(d, L, (0, 1, 3)) if arity_bound >= 1 else None
    gamma = {}
    for n, ks in lax_shapes(arity_bound):
        x, C = gamma_pattern(n, ks)
        gamma[(n, ks)] = eta_of(d, x, C)
    return LaxStructure(A, tensors, iota, gamma, arity_bound)


def lax_equal(s1, s2, arity_bound=None):
    """Table equality of two lax structures up to an arity bound."""
    B = min(s1.arity_bound, s2.arity_bound) if arity_bound is None else arity_bound
    if s1.base != s2.base:
        return False
    if any(s1.tensors.get(n) != s2.tensors.get(n) for n in range(B + 1)):
        return False
    if B >= 1 and s1.iota != s2.iota:
        return False
    return all(s1.gamma.get(k) == s2.gamma.get(k) for k in lax_shapes(B))


def lax_from_thin(A, tensors, arity_bound=None):
    """Lax structure on a preorder category, where every transformation is forced."""
    from .common import unique_nat
    B = max(tensors) if arity_bound is None else arity_bound
    iota = unique_nat(Functor.identity(A), tensors[1]) if B >= 1 else None
    gamma = {}
    for n, ks in lax_shapes(B):
        src = functor_compose(tensors[n], functor_product([tensors[k] for k in ks]))
        gamma[(n, ks)] = unique_nat(src, tensors[sum(ks)])
    return LaxStructure(A, dict(tensors), iota, gamma, B)
