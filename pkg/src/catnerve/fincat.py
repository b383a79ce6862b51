"""Finite categories, functors and natural transformations as integer tables.

Objects and morphisms are indexed 0..n-1 internally and carry string ids for
I/O.  Products are flattened and drop copies of the terminal category, so
(A x B) x C, A x (B x C) and A x I x B x C are literally the same object.
A product's elements are indexed in row-major order over its factors.
"""

import itertools
from math import prod

import numpy as np

from ._kernels import associativity_violations


class FinCategory:
    """A finite category given by a composition table, or a flattened product."""

    def __init__(self, objects, morphisms, identities, comp, name=None):
        self.factors = None
        self.name = name
        self._objects = tuple(str(o) for o in objects)
        self._morphisms = tuple((str(m), str(s), str(t)) for m, s, t in morphisms)
        if len(set(self._objects)) != len(self._objects):
            raise ValueError("duplicate object ids")
        if len(set(m for m, _, _ in self._morphisms)) != len(self._morphisms):
            raise ValueError("duplicate morphism ids")
        oi = {o: k for k, o in enumerate(self._objects)}
        mi = {m: k for k, (m, _, _) in enumerate(self._morphisms)}
        self._obj_index, self._mor_index = oi, mi
        try:
            self.src = np.array([oi[s] for _, s, _ in self._morphisms], dtype=np.int64)
            self.tgt = np.array([oi[t] for _, _, t in self._morphisms], dtype=np.int64)
            self.ident = np.array([mi[str(identities[o])] for o in self._objects], dtype=np.int64)
        except KeyError as e:
            raise ValueError("unknown id %s" % e) from None
        n = len(self._morphisms)
        table = np.full((n, n), -1, dtype=np.int64)
        entries = comp.items() if isinstance(comp, dict) else ((tuple(e[:2]), e[2]) for e in comp)
        for (g, f), gf in entries:
            try:
                gi, fi, gfi = mi[str(g)], mi[str(f)], mi[str(gf)]
            except KeyError as e:
                raise ValueError("unknown morphism id %s in composition table" % e) from None
            if table[gi, fi] >= 0 and table[gi, fi] != gfi:
                raise ValueError("composite %s.%s given twice" % (g, f))
            table[gi, fi] = gfi
        # identity laws may be left implicit
        for f in range(n):
            a, b = self.src[f], self.tgt[f]
            if table[self.ident[b], f] < 0:
                table[self.ident[b], f] = f
            if table[f, self.ident[a]] < 0:
                table[f, self.ident[a]] = f
        missing = np.argwhere((table < 0) & (self.tgt[None, :] == self.src[:, None]))
        if len(missing):
            g, f = missing[0]
            raise ValueError("composite %s.%s is missing" % (self._morphisms[g][0], self._morphisms[f][0]))
        self.table = table
        self.n_obj = len(self._objects)
        self.n_mor = n
        self._key = ("atom", self._objects, self._morphisms, table.tobytes())
        self._hash = hash(self._key)

    @classmethod
    def _product(cls, factors):
        c = object.__new__(cls)
        c.factors = tuple(factors)
        c.name = None
        c.table = None
        c.n_obj = prod(f.n_obj for f in factors)
        c.n_mor = prod(f.n_mor for f in factors)
        c._objects = c._morphisms = None
        c._obj_index = c._mor_index = None
        oshape = tuple(f.n_obj for f in factors)
        mshape = tuple(f.n_mor for f in factors)
        allm = np.unravel_index(np.arange(c.n_mor), mshape)
        c.src = np.ravel_multi_index([f.src[k] for f, k in zip(factors, allm)], oshape)
        c.tgt = np.ravel_multi_index([f.tgt[k] for f, k in zip(factors, allm)], oshape)
        allo = np.unravel_index(np.arange(c.n_obj), oshape)
        c.ident = np.ravel_multi_index([f.ident[k] for f, k in zip(factors, allo)], mshape)
        c._key = ("prod",) + tuple(f._key for f in factors)
        c._hash = hash(c._key)
        return c

    # identity and hashing are structural
    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinCategory):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.factors:
            return " x ".join(repr(f) for f in self.factors)
        return self.name or "FinCategory(%d obj, %d mor)" % (self.n_obj, self.n_mor)

    @property
    def objects(self):
        if self._objects is None:
            self._objects = tuple("(" + ",".join(t) + ")"
                                  for t in itertools.product(*(f.objects for f in self.factors)))
        return self._objects

    @property
    def morphisms(self):
        if self._morphisms is None:
            ids = ["(" + ",".join(t) + ")" for t in itertools.product(*(
                [m for m, _, _ in f.morphisms] for f in self.factors))]
            obs = self.objects
            self._morphisms = tuple((m, obs[s], obs[t]) for m, s, t in zip(ids, self.src, self.tgt))
        return self._morphisms

    def obj_index(self, oid):
        if self._obj_index is None:
            self._obj_index = {o: k for k, o in enumerate(self.objects)}
        return self._obj_index[oid]

    def mor_index(self, mid):
        if self._mor_index is None:
            self._mor_index = {m: k for k, (m, _, _) in enumerate(self.morphisms)}
        return self._mor_index[mid]

    def obj_id(self, k):
        return self.objects[int(k)]

    def mor_id(self, k):
        return self.morphisms[int(k)][0]

    def compose(self, g, f):
        """Index array of g.f, or -1 where not composable."""
        g = np.asarray(g, dtype=np.int64)
        f = np.asarray(f, dtype=np.int64)
        if self.factors is None:
            return self.table[g, f]
        mshape = tuple(a.n_mor for a in self.factors)
        gs = np.unravel_index(g, mshape)
        fs = np.unravel_index(f, mshape)
        parts = [a.table[x, y] for a, x, y in zip(self.factors, gs, fs)]
        bad = np.zeros(np.shape(g), dtype=bool)
        for p in parts:
            bad |= p < 0
        out = np.ravel_multi_index([np.where(p < 0, 0, p) for p in parts], mshape)
        return np.where(bad, -1, out)

    def inverse(self, f):
        """Index of the inverse of morphism f, or None."""
        f = int(f)
        cands = np.nonzero((self.src == self.tgt[f]) & (self.tgt == self.src[f]))[0]
        for g in cands:
            if self.compose(g, f) == self.ident[self.src[f]] and self.compose(f, g) == self.ident[self.tgt[f]]:
                return int(g)
        return None

    def hom(self, a, b):
        return np.nonzero((self.src == a) & (self.tgt == b))[0]

    def atoms(self):
        if self.factors is not None:
            return self.factors
        if self == TERMINAL:
            return ()
        return (self,)


TERMINAL = FinCategory(["*"], [("1*", "*", "*")], {"*": "1*"}, {("1*", "1*"): "1*"}, name="I")


def terminal():
    return TERMINAL


_PRODUCTS = {}


def product(cats):
    """Flattened product with copies of I dropped; empty product is I."""
    atoms = []
    for c in cats:
        atoms.extend(c.atoms())
    if not atoms:
        return TERMINAL
    if len(atoms) == 1:
        return atoms[0]
    key = tuple(atoms)
    got = _PRODUCTS.get(key)
    if got is None:
        got = _PRODUCTS[key] = FinCategory._product(atoms)
    return got


def power(A, k):
    return product([A] * k)


def _size(C, kind):
    return C.n_obj if kind == "obj" else C.n_mor


_STRIDES = {}


def _strides(src_sizes, tgt_sizes):
    """Per factor: source index arrays over the product and row-major target strides."""
    key = (src_sizes, tgt_sizes)
    got = _STRIDES.get(key)
    if got is None:
        n = prod(src_sizes)
        k = np.arange(n, dtype=np.int64)
        subs, outer = [], n
        for sz in src_sizes:
            outer //= sz
            subs.append((k // outer) % sz)
        strides, acc = [], 1
        for sz in reversed(tgt_sizes):
            strides.append(acc)
            acc *= sz
        got = _STRIDES[key] = (subs, strides[::-1], n)
    return got


def _product_map(items, src_kind, tgt_kind):
    """Combine per-factor maps (src_cat, tgt_cat, array) into one map on products.

    Products are flattened row-major, so a product index is the stride-weighted
    sum of the factor indices.
    """
    src_sizes = tuple(_size(s, src_kind) for s, _, _ in items)
    tgt_sizes = tuple(_size(t, tgt_kind) for _, t, _ in items)
    return combine_indices([arr for _, _, arr in items], src_sizes, tgt_sizes)


def combine_indices(arrays, src_sizes, tgt_sizes):
    """Product of index maps given only the factor sizes."""
    subs, strides, n = _strides(tuple(src_sizes), tuple(tgt_sizes))
    out = np.zeros(n, dtype=np.int64)
    for arr, sub, st in zip(arrays, subs, strides):
        out += np.asarray(arr)[sub] * st
    return out


class Functor:
    def __init__(self, src, tgt, obj_map, mor_map):
        self.src = src
        self.tgt = tgt
        self.obj_map = np.asarray(obj_map, dtype=np.int64)
        self.mor_map = np.asarray(mor_map, dtype=np.int64)
        if self.obj_map.shape != (src.n_obj,) or self.mor_map.shape != (src.n_mor,):
            raise ValueError("functor tables do not match the source category")

    @classmethod
    def identity(cls, C):
        return cls(C, C, np.arange(C.n_obj), np.arange(C.n_mor))

    @classmethod
    def from_ids(cls, src, tgt, obj_map, mor_map):
        try:
            om = [tgt.obj_index(str(obj_map[o])) for o in src.objects]
            mm = [tgt.mor_index(str(mor_map[m])) for m, _, _ in src.morphisms]
        except KeyError as e:
            raise ValueError("functor table is missing or names an unknown id: %s" % e) from None
        return cls(src, tgt, om, mm)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Functor):
            return NotImplemented
        return (self.src == other.src and self.tgt == other.tgt
                and np.array_equal(self.obj_map, other.obj_map)
                and np.array_equal(self.mor_map, other.mor_map))

    def __hash__(self):
        return hash((self.src, self.tgt, self.obj_map.tobytes(), self.mor_map.tobytes()))

    def is_identity(self):
        return (self.src == self.tgt and np.array_equal(self.obj_map, np.arange(self.src.n_obj))
                and np.array_equal(self.mor_map, np.arange(self.src.n_mor)))

    def __repr__(self):
        return "Functor(%r -> %r)" % (self.src, self.tgt)


class NatTrans:
    """components[x] is a morphism src(x) -> tgt(x) of the codomain category."""

    def __init__(self, src, tgt, components):
        if src.src != tgt.src or src.tgt != tgt.tgt:
            raise ValueError("parallel functors required")
        self.src = src
        self.tgt = tgt
        self.components = np.asarray(components, dtype=np.int64)
        if self.components.shape != (src.src.n_obj,):
            raise ValueError("one component per object of the source category")

    @property
    def dom(self):
        return self.src.src

    @property
    def cod(self):
        return self.src.tgt

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NatTrans):
            return NotImplemented
        return (self.src == other.src and self.tgt == other.tgt
                and np.array_equal(self.components, other.components))

    def __hash__(self):
        return hash((self.src, self.tgt, self.components.tobytes()))

    def component_ids(self):
        C, D = self.dom, self.cod
        return {C.obj_id(k): D.mor_id(m) for k, m in enumerate(self.components)}

    def is_identity(self):
        return (self.src == self.tgt
                and np.array_equal(self.components, self.cod.ident[self.src.obj_map]))

    def __repr__(self):
        return "NatTrans(%s)" % self.component_ids()


def functor_compose(g, f):
    """g . f"""
    if f.tgt != g.src:
        raise ValueError("functors do not compose: %r then %r" % (f, g))
    return Functor(f.src, g.tgt, g.obj_map[f.obj_map], g.mor_map[f.mor_map])


def functor_product(fs):
    src = product([f.src for f in fs])
    tgt = product([f.tgt for f in fs])
    om = _product_map([(f.src, f.tgt, f.obj_map) for f in fs], "obj", "obj")
    mm = _product_map([(f.src, f.tgt, f.mor_map) for f in fs], "mor", "mor")
    return Functor(src, tgt, om, mm)


def nat_identity(F):
    return NatTrans(F, F, F.tgt.ident[F.obj_map])


def nat_vcomp(b, a):
    """b . a (vertical): a first."""
    if a.tgt != b.src:
        raise ValueError("transformations do not compose vertically")
    return NatTrans(a.src, b.tgt, a.cod.compose(b.components, a.components))


def nat_hcomp(b, a):
    """Horizontal composite b o a, with a : F => F' : X -> Y and b : G => G' : Y -> Z."""
    F2 = a.tgt
    G = b.src
    if a.cod != b.dom:
        raise ValueError("transformations do not compose horizontally")
    comps = b.cod.compose(b.components[F2.obj_map], G.mor_map[a.components])
    return NatTrans(functor_compose(G, a.src), functor_compose(b.tgt, F2), comps)


def whisker_left(G, a):
    """1_G o a"""
    if a.cod != G.src:
        raise ValueError("cannot whisker")
    return NatTrans(functor_compose(G, a.src), functor_compose(G, a.tgt), G.mor_map[a.components])


def whisker_right(b, F):
    """b o 1_F"""
    if F.tgt != b.dom:
        raise ValueError("cannot whisker")
    return NatTrans(functor_compose(b.src, F), functor_compose(b.tgt, F), b.components[F.obj_map])


def nat_product(ts):
    src = functor_product([t.src for t in ts])
    tgt = functor_product([t.tgt for t in ts])
    comps = _product_map([(t.dom, t.cod, t.components) for t in ts], "obj", "mor")
    return NatTrans(src, tgt, comps)


def nat_inverse(t):
    inv = []
    for m in t.components:
        g = t.cod.inverse(m)
        if g is None:
            return None
        inv.append(g)
    return NatTrans(t.tgt, t.src, inv)


def _composable_pairs(C):
    gs, fs = [], []
    for o in range(C.n_obj):
        ins = np.nonzero(C.tgt == o)[0]
        outs = np.nonzero(C.src == o)[0]
        g, f = np.meshgrid(outs, ins, indexing="ij")
        gs.append(g.ravel())
        fs.append(f.ravel())
    if not gs:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(gs), np.concatenate(fs)


def check_category(C):
    """List of violated laws, each with a witness; empty when C is a category."""
    if C.factors is not None:
        out = []
        for a in C.factors:
            out.extend(check_category(a))
        return out
    out = []
    mid = C.mor_id
    for o in range(C.n_obj):
        i = C.ident[o]
        if C.src[i] != o or C.tgt[i] != o:
            out.append({"law": "identity typing", "witness": [C.obj_id(o), mid(i)]})
    g, f = _composable_pairs(C)
    gf = C.table[g, f]
    for a, b, c in zip(g, f, gf):
        if c < 0 or C.src[c] != C.src[b] or C.tgt[c] != C.tgt[a]:
            out.append({"law": "composite typing", "witness": [mid(a), mid(b)]})
    bad = np.argwhere((C.table >= 0) & (C.tgt[None, :] != C.src[:, None]))
    for a, b in bad:
        out.append({"law": "composite of non-composable pair", "witness": [mid(a), mid(b)]})
    for f_ in range(C.n_mor):
        if C.table[C.ident[C.tgt[f_]], f_] != f_ or C.table[f_, C.ident[C.src[f_]]] != f_:
            out.append({"law": "unit", "witness": [mid(f_)]})
    if not out:
        for h, g_, f_ in associativity_violations(C.table):
            out.append({"law": "associativity", "witness": [mid(h), mid(g_), mid(f_)]})
    return out


def check_functor(F):
    C, D = F.src, F.tgt
    out = []
    om, mm = F.obj_map, F.mor_map
    bad = np.nonzero((D.src[mm] != om[C.src]) | (D.tgt[mm] != om[C.tgt]))[0]
    for f in bad:
        out.append({"law": "functor typing", "witness": [C.mor_id(f)]})
    bad = np.nonzero(mm[C.ident] != D.ident[om])[0]
    for o in bad:
        out.append({"law": "functor identity", "witness": [C.obj_id(o)]})
    if out:
        return out
    g, f = _composable_pairs(C)
    lhs = mm[C.compose(g, f)]
    rhs = D.compose(mm[g], mm[f])
    for k in np.nonzero(lhs != rhs)[0]:
        out.append({"law": "functor composition", "witness": [C.mor_id(g[k]), C.mor_id(f[k])]})
    return out


def check_natural(t):
    C, D = t.dom, t.cod
    F, G = t.src, t.tgt
    out = []
    c = t.components
    bad = np.nonzero((D.src[c] != F.obj_map) | (D.tgt[c] != G.obj_map))[0]
    for o in bad:
        out.append({"law": "component typing", "witness": [C.obj_id(o)]})
    if out:
        return out
    lhs = D.compose(G.mor_map, c[C.src])
    rhs = D.compose(c[C.tgt], F.mor_map)
    for f in np.nonzero(lhs != rhs)[0]:
        out.append({"law": "naturality", "witness": [C.mor_id(f)]})
    return out


# small constructors used by fixtures and the monoid generator

def one_object(elements, op, unit, name=None, obj="*"):
    """A monoid as a one-object category; op[(g, f)] is the product g*f."""
    mors = [(str(e), obj, obj) for e in elements]
    comp = {(str(g), str(f)): str(op[(g, f)]) for g in elements for f in elements}
    return FinCategory([obj], mors, {obj: str(unit)}, comp, name=name)


def discrete(objects, name=None):
    objs = [str(o) for o in objects]
    mors = [("1" + o, o, o) for o in objs]
    return FinCategory(objs, mors, {o: "1" + o for o in objs}, {}, name=name)


def thin(objects, leq, name=None):
    """The preorder category on objects with a <= b given by leq(a, b)."""
    objs = [str(o) for o in objects]
    mors, ident = [], {}
    for a in objs:
        for b in objs:
            if leq(a, b):
                mid = "1" + a if a == b else a + ">" + b
                mors.append((mid, a, b))
                if a == b:
                    ident[a] = mid
    by_ends = {(s, t): m for m, s, t in mors}
    comp = {}
    for g, b, c in mors:
        for f, a, b2 in mors:
            if b == b2:
                comp[(g, f)] = by_ends[(a, c)]
    return FinCategory(objs, mors, ident, comp, name=name)


def indiscrete(objects, name=None):
    return thin(objects, lambda a, b: True, name=name)


def cyclic_group(n, name=None):
    els = list(range(n))
    return one_object(els, {(g, f): (g + f) % n for g in els for f in els}, 0, name=name or "Z%d" % n)
