"""Skew monoidal categories and their classifying maps.

A skew structure on A is a tensor A x A -> A, a unit I -> A and three
transformations, none of them required to be invertible:

    alpha : (ab)c => a(bc),   lam : ua => a,   rho : a => au.

The functor attached to a simplex x is the right-nested composite of its
2-faces on {i, i+1, n}.  A transformation eta^x_C is found by rewriting the
binary bracketing that the source composite describes into the right comb,
one whiskered 3-face at a time; every rewrite sequence is explored so that
unequal results are caught.
"""

import itertools
from dataclasses import dataclass, replace

from ..catalan import L, R, face, mu, triangle_name
from ..fincat import (
    FinCategory, Functor, NatTrans, check_functor, check_natural, functor_compose,
    functor_product, nat_identity, nat_product, nat_vcomp, power, terminal, thin,
    whisker_left, whisker_right,
)
from ..mapcore import MapData, lazy_tables, tables_equal
from .common import thin_functor, unique_nat
from .monoid import monoid_category, monoid_tensor


@dataclass
class SkewStructure:
    base: FinCategory
    tensor: Functor
    unit: Functor
    alpha: NatTrans
    lam: NatTrans
    rho: NatTrans


def alpha_source(A, tensor):
    return functor_compose(tensor, functor_product([tensor, Functor.identity(A)]))


def alpha_target(A, tensor):
    return functor_compose(tensor, functor_product([Functor.identity(A), tensor]))


def lam_source(A, tensor, unit):
    return functor_compose(tensor, functor_product([unit, Functor.identity(A)]))


def rho_target(A, tensor, unit):
    return functor_compose(tensor, functor_product([Functor.identity(A), unit]))


def skew_from_monoid(M, presentation="discrete"):
    """The strict structure of a monoid: iterated products, identity alpha, lam, rho."""
    A = monoid_category(M, presentation)
    tensor = monoid_tensor(M, A, 2, presentation)
    unit = monoid_tensor(M, A, 0, presentation)
    return _with_identities(A, tensor, unit)


def _with_identities(A, tensor, unit):
    a_src, a_tgt = alpha_source(A, tensor), alpha_target(A, tensor)
    l_src, r_tgt = lam_source(A, tensor, unit), rho_target(A, tensor, unit)
    idA = Functor.identity(A)
    return SkewStructure(A, tensor, unit,
                         NatTrans(a_src, a_tgt, A.ident[a_src.obj_map]),
                         NatTrans(l_src, idA, A.ident[l_src.obj_map]),
                         NatTrans(idA, r_tgt, A.ident[r_tgt.obj_map]))


def with_components(s, alpha=None, lam=None, rho=None):
    """Copy of s with some transformations replaced by component arrays (morphism ids)."""
    A = s.base

    def build(old, comps):
        if comps is None:
            return old
        return NatTrans(old.src, old.tgt, [A.mor_index(str(c)) for c in comps])

    return replace(s, alpha=build(s.alpha, alpha), lam=build(s.lam, lam), rho=build(s.rho, rho))


def skew_on_preorder(A, op, unit_obj):
    """Skew structure on a preorder category, all transformations forced.

    op maps a pair of object ids to an object id; it must be monotone and
    satisfy (ab)c <= a(bc), ua <= a and a <= au.
    """
    A2 = power(A, 2)
    objs = A.objects
    omap = [A.obj_index(op(objs[k // A.n_obj], objs[k % A.n_obj])) for k in range(A2.n_obj)]
    tensor = thin_functor(A2, A, omap)
    unit = thin_functor(terminal(), A, [A.obj_index(unit_obj)])
    idA = Functor.identity(A)
    return SkewStructure(A, tensor, unit,
                         unique_nat(alpha_source(A, tensor), alpha_target(A, tensor)),
                         unique_nat(lam_source(A, tensor, unit), idA),
                         unique_nat(idA, rho_target(A, tensor, unit)))


def chain_skew_structures(length=3, limit=None):
    """Every skew structure on the chain 0 < 1 < ... < length-1, in a fixed order."""
    objs = [str(i) for i in range(length)]
    A = thin(objs, lambda a, b: int(a) <= int(b), name="chain%d" % length)
    pairs = list(itertools.product(range(length), repeat=2))
    out = []
    for values in itertools.product(range(length), repeat=len(pairs)):
        t = dict(zip(pairs, values))
        if any(t[(a, b)] > t[(a2, b2)] for (a, b) in pairs for (a2, b2) in pairs if a <= a2 and b <= b2):
            continue
        if any(t[(t[(a, b)], c)] > t[(a, t[(b, c)])] for a in range(length)
               for b in range(length) for c in range(length)):
            continue
        for u in range(length):
            if any(t[(u, a)] > a or a > t[(a, u)] for a in range(length)):
                continue
            out.append(skew_on_preorder(A, lambda a, b, t=t: str(t[(int(a), int(b))]), str(u)))
            if limit is not None and len(out) >= limit:
                return out
    return out


def skew_equal(s1, s2):
    return (s1.base == s2.base and s1.tensor == s2.tensor and s1.unit == s2.unit
            and s1.alpha == s2.alpha and s1.lam == s2.lam and s1.rho == s2.rho)


# ---- axioms

def _typing(s):
    A = s.base
    idA = Functor.identity(A)
    out = []
    if s.tensor.src != power(A, 2) or s.tensor.tgt != A:
        return [{"axiom": "typing", "what": "tensor boundary"}]
    if s.unit.src != terminal() or s.unit.tgt != A:
        return [{"axiom": "typing", "what": "unit boundary"}]
    for name, F in (("tensor", s.tensor), ("unit", s.unit)):
        if check_functor(F):
            out.append({"axiom": "typing", "what": name + " not a functor"})
    if out:
        return out
    expect = {"alpha": (alpha_source(A, s.tensor), alpha_target(A, s.tensor)),
              "lambda": (lam_source(A, s.tensor, s.unit), idA),
              "rho": (idA, rho_target(A, s.tensor, s.unit))}
    for name, t in (("alpha", s.alpha), ("lambda", s.lam), ("rho", s.rho)):
        src, tgt = expect[name]
        if t.src != src or t.tgt != tgt:
            out.append({"axiom": "typing", "what": name + " boundary"})
        elif check_natural(t):
            out.append({"axiom": "typing", "what": name + " not natural"})
    return out


def skew_axioms(s):
    """Typing, then the pentagon and the four unit diagrams, objectwise."""
    out = _typing(s)
    if out:
        return out
    A = s.base
    n, m = A.n_obj, A.n_mor
    T, Tm = s.tensor.obj_map, s.tensor.mor_map
    u = int(s.unit.obj_map[0])
    ident = A.ident

    def t(a, b):
        return int(T[a * n + b])

    def tm(f, g):
        return int(Tm[f * m + g])

    def al(a, b, c):
        return int(s.alpha.components[(a * n + b) * n + c])

    def cp(*fs):
        g = fs[0]
        for f in fs[1:]:
            g = int(A.compose(g, f))
        return g

    lam, rho = s.lam.components, s.rho.components

    def fail(name, objs, lhs, rhs):
        out.append({"axiom": name, "objects": [A.obj_id(o) for o in objs],
                    "lhs": A.mor_id(lhs), "rhs": A.mor_id(rhs)})

    obs = range(n)
    for a, b, c, d in itertools.product(obs, repeat=4):
        lhs = cp(tm(ident[a], al(b, c, d)), al(a, t(b, c), d), tm(al(a, b, c), ident[d]))
        rhs = cp(al(a, b, t(c, d)), al(t(a, b), c, d))
        if lhs != rhs:
            fail("pentagon", (a, b, c, d), lhs, rhs)
    lhs = cp(lam[u], rho[u])
    if lhs != ident[u]:
        fail("unit", (u,), lhs, int(ident[u]))
    for a, b in itertools.product(obs, repeat=2):
        lhs, rhs = cp(lam[t(a, b)], al(u, a, b)), tm(lam[a], ident[b])
        if lhs != rhs:
            fail("alpha-lambda", (a, b), lhs, rhs)
        lhs, rhs = cp(al(a, b, u), rho[t(a, b)]), tm(ident[a], rho[b])
        if lhs != rhs:
            fail("alpha-rho", (a, b), lhs, rhs)
        lhs = cp(tm(ident[a], lam[b]), al(a, u, b), tm(rho[a], ident[b]))
        if lhs != ident[t(a, b)]:
            fail("triangle", (a, b), lhs, int(ident[t(a, b)]))
    return out


# ---- binary bracketings
#
# A tree over the unit intervals [i, i+1] of [n] is an int i (a leaf) or a
# pair (left, right).  Node (l, r) spanning [p, q] with split r0 stands for
# T^{x_{p r0 q}} o (F_l x F_r).

def lo(t):
    return t if isinstance(t, int) else lo(t[0])


def hi(t):
    return t + 1 if isinstance(t, int) else hi(t[1])


def right_comb(parts):
    parts = list(parts)
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = (p, out)
    return out


def source_tree(C):
    """Bracketing of T^{x_C} o prod T^{x_[c,sc]}: a right comb of right-comb blocks."""
    return right_comb([right_comb(range(c, sc)) for c, sc in C.intervals()])


def all_trees(a, b):
    """Every bracketing of the leaves a..b-1."""
    if b - a == 1:
        return [a]
    out = []
    for k in range(a + 1, b):
        for left in all_trees(a, k):
            for right in all_trees(k, b):
                out.append((left, right))
    return out


class SkewClassifier:
    """Functors and transformations of the classifying map of one skew structure.

    ``conflicts`` collects every bracketing from which two rewrite sequences
    reach the right comb with different transformations.
    """

    def __init__(self, s):
        self.s = s
        A = s.base
        self._idA = Functor.identity(A)
        self._idI = Functor.identity(terminal())
        self._faces2 = {"m": s.tensor, "u": s.unit, "s0(1)": self._idA,
                        "s1(1)": self._idA, "s0(0)": self._idI}
        self._fun = {}
        self._paths = {}
        self.conflicts = []
        self.searched = 0

    def two_face(self, y):
        return self._faces2[triangle_name(y)]

    def _leaf(self, x, i):
        return self._idA if x.edge(i, i + 1) else self._idI

    def three_face(self, y):
        """The transformation y_023 o (y_012 x 1) => y_013 o (1 x y_123)."""
        f = lambda *v: self.two_face(face(y, v))
        src = functor_compose(f(0, 2, 3), functor_product([f(0, 1, 2), self._leaf(y, 2)]))
        tgt = functor_compose(f(0, 1, 3), functor_product([self._leaf(y, 0), f(1, 2, 3)]))
        given = {mu(3): self.s.alpha, L: self.s.lam, R: self.s.rho}.get(y)
        if given is not None:
            if given.src != src or given.tgt != tgt:
                raise ValueError("3-face %r: structure transformation has the wrong boundary" % (y,))
            return given
        if src != tgt:
            raise ValueError("3-face %r has no transformation between distinct functors" % (y,))
        return nat_identity(src)

    def functor(self, x, tree):
        key = (x, tree)
        got = self._fun.get(key)
        if got is None:
            if isinstance(tree, int):
                got = self._leaf(x, tree)
            else:
                l, r = tree
                top = self.two_face(face(x, (lo(l), hi(l), hi(r))))
                got = functor_compose(top, functor_product([self.functor(x, l), self.functor(x, r)]))
            self._fun[key] = got
        return got

    def rotations(self, x, tree):
        """Single rewrites ((P,Q),R) -> (P,(Q,R)) anywhere in the tree, with their transformations."""
        if isinstance(tree, int):
            return []
        l, r = tree
        out = []
        if not isinstance(l, int):
            P, Q = l
            y = face(x, (lo(P), lo(Q), lo(r), hi(r)))
            tail = functor_product([self.functor(x, P), self.functor(x, Q), self.functor(x, r)])
            out.append(((P, (Q, r)), whisker_right(self.three_face(y), tail)))
        top = self.two_face(face(x, (lo(l), hi(l), hi(r))))
        for l2, th in self.rotations(x, l):
            lift = nat_product([th, nat_identity(self.functor(x, r))])
            out.append(((l2, r), whisker_left(top, lift)))
        for r2, th in self.rotations(x, r):
            lift = nat_product([nat_identity(self.functor(x, l)), th])
            out.append(((l, r2), whisker_left(top, lift)))
        return out

    def to_comb(self, x, tree):
        """Distinct transformations F_tree => F_comb over all rewrite sequences, first found first."""
        key = (x, tree)
        got = self._paths.get(key)
        if got is not None:
            return got
        self.searched += 1
        steps = self.rotations(x, tree)
        if not steps:
            got = [nat_identity(self.functor(x, tree))]
        else:
            got = []
            for t2, th in steps:
                for v in self.to_comb(x, t2):
                    cand = nat_vcomp(v, th)
                    if cand not in got:
                        got.append(cand)
            if len(got) > 1:
                self.conflicts.append({"simplex": x.to_json(), "tree": tree, "values": len(got)})
        self._paths[key] = got
        return got

    def t(self, x):
        return self.functor(x, right_comb(range(x.dim)))

    def eta(self, x, C):
        return self.to_comb(x, source_tree(C))[0]

    def mapdata(self, max_dim):
        t_table, eta_table = lazy_tables(max_dim, self.t, self.eta)
        return MapData(max_dim, self.s.base, t_table, eta_table)


def skew_classify(s, max_dim):
    return SkewClassifier(s).mapdata(max_dim)


def skew_coherence_audit(s, max_dim, simplices=None):
    """Bracketings of nondegenerate simplices from which rewrite sequences disagree."""
    from ..catalan import nondegenerate_up_to
    k = SkewClassifier(s)
    xs = nondegenerate_up_to(max_dim, 3) if simplices is None else simplices
    for x in xs:
        for tree in all_trees(0, x.dim):
            k.to_comb(x, tree)
    return sorted(k.conflicts, key=lambda c: (c["simplex"]["dim"], repr(c["tree"])))


def skew_embed_injectivity_probe(s1, s2, max_dim):
    """True when the classifying maps agree exactly when the structures do."""
    d1, d2 = skew_classify(s1, max_dim), skew_classify(s2, max_dim)
    return skew_equal(s1, s2) == tables_equal(d1, d2)
