"""Map data out of the Catalan simplicial set and its coherence check.

A map is described by three tables over the base category A:

* a category per edge bit (1 -> A, 0 -> I),
* a functor T^x for each nondegenerate simplex x of dimension >= 2,
* a transformation eta^x_C : T^{x_C} o prod_c T^{x_[c,sc]} => T^x for each
  nondegenerate x of dimension >= 3 and each C strictly between {0,n} and [n].

Everything else (edges, degenerate simplices, C = {0,n} or [n]) is derived by
the accessors.  ``check_all`` verifies typing and then the square relating
eta^x_A and eta^x_B for every nested pair A < B, up to a dimension bound.
"""

import multiprocessing as mp
from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .catalan import (
    collapsible_indices, face, is_degenerate, nondegenerate_core,
    nondegenerate_up_to, strict_subsets_between,
)
from .fincat import (
    FinCategory, Functor, check_functor, check_natural, functor_compose, functor_product,
    nat_identity, nat_product, nat_vcomp, product, terminal, whisker_left, whisker_right,
)
from .necklace import spanning_chains
from .ordcomb import IndexSubset, codegeneracy, delta_of_subset, interval, reindex_in_interval, \
    subset_image, subset_preimage


class MissingEntry(KeyError):
    pass


def t_keys(max_dim):
    return nondegenerate_up_to(max_dim, 2)


def eta_keys(max_dim):
    for x in nondegenerate_up_to(max_dim, 3):
        for C in strict_subsets_between(x.dim):
            yield (x, C.elements)


class LazyTable(Mapping):
    """Read-only table whose values are computed on first access."""

    def __init__(self, keys, compute, size=None):
        self._keys = keys
        self._compute = compute
        self._cache = {}
        self._size = size

    def __getitem__(self, key):
        try:
            return self._cache[key]
        except KeyError:
            pass
        val = self._compute(key)
        self._cache[key] = val
        return val

    def __iter__(self):
        return iter(self._keys())

    def __len__(self):
        if self._size is None:
            self._size = sum(1 for _ in self._keys())
        return self._size

    def __contains__(self, key):
        return key in self._cache or any(k == key for k in self._keys())


def lazy_tables(max_dim, t_compute, eta_compute):
    t = LazyTable(lambda: iter(t_keys(max_dim)), t_compute)
    e = LazyTable(lambda: eta_keys(max_dim), lambda k: eta_compute(k[0], IndexSubset(k[0].dim, k[1])))
    return t, e


@dataclass
class MapData:
    max_dim: int
    base: FinCategory
    t_table: Mapping
    eta_table: Mapping
    _memo: dict = field(default_factory=dict, repr=False, compare=False)


def a_of(d, e):
    return d.base if e else terminal()


def spine_category(d, x):
    return product([a_of(d, b) for b in x.spine()])


def _check_dim(d, x):
    if x.dim > d.max_dim:
        raise ValueError("simplex of dimension %d is above the truncation %d" % (x.dim, d.max_dim))


def t_of(d, x):
    _check_dim(d, x)
    if x.dim == 0:
        return Functor.identity(terminal())
    if x.dim == 1:
        return Functor.identity(a_of(d, x.edges[0]))
    if is_degenerate(x):
        return t_of(d, nondegenerate_core(x)[0])
    try:
        return d.t_table[x]
    except KeyError:
        raise MissingEntry("no functor for %r" % (x,)) from None


def _as_subset(x, C):
    if isinstance(C, IndexSubset):
        return C
    return IndexSubset(x.dim, tuple(C))


def eta_of(d, x, C):
    C = _as_subset(x, C)
    _check_dim(d, x)
    n = x.dim
    if C.ambient_dim != n or C.elements[0] != 0 or C.elements[-1] != n:
        raise ValueError("subset must contain 0 and %d" % n)
    if C.is_endpoints() or C.is_full():
        return nat_identity(t_of(d, x))
    idx = collapsible_indices(x)
    if idx:
        i = idx[0]
        y = face(x, tuple(v for v in range(n + 1) if v != i + 1))
        return eta_of(d, y, subset_image(codegeneracy(n - 1, i), C))
    try:
        return d.eta_table[(x, C.elements)]
    except KeyError:
        raise MissingEntry("no transformation for %r at %r" % (x, C.elements)) from None


def composite_source(d, x, C):
    """T^{x_C} o prod_{c} T^{x_[c,sc]}, the expected source of eta^x_C."""
    C = _as_subset(x, C)
    key = ("src", x, C.elements)
    got = d._memo.get(key)
    if got is None:
        outer = t_of(d, face(x, C))
        inner = functor_product([t_of(d, face(x, interval(c, sc, x.dim))) for c, sc in C.intervals()])
        got = d._memo[key] = functor_compose(outer, inner)
    return got


def validate(d):
    """Typing violations of the tables, each naming the offending simplex."""
    out = []
    for x in t_keys(d.max_dim):
        sx = x.to_json()
        try:
            F = d.t_table[x]
        except KeyError:
            out.append({"kind": "typing", "what": "missing functor", "simplex": sx})
            continue
        if F.src != spine_category(d, x):
            out.append({"kind": "typing", "what": "functor source", "simplex": sx})
        elif F.tgt != a_of(d, x.edge(0, x.dim)):
            out.append({"kind": "typing", "what": "functor target", "simplex": sx})
        else:
            for v in check_functor(F):
                out.append({"kind": "typing", "what": "not a functor: " + v["law"], "simplex": sx})
                break
    if out:
        return out
    for x, els in eta_keys(d.max_dim):
        C = IndexSubset(x.dim, els)
        sx = x.to_json()
        try:
            t = d.eta_table[(x, els)]
        except KeyError:
            out.append({"kind": "typing", "what": "missing transformation", "simplex": sx, "C": list(els)})
            continue
        if t.src != composite_source(d, x, C):
            out.append({"kind": "typing", "what": "transformation source", "simplex": sx, "C": list(els)})
        elif t.tgt != t_of(d, x):
            out.append({"kind": "typing", "what": "transformation target", "simplex": sx, "C": list(els)})
        else:
            for v in check_natural(t):
                out.append({"kind": "typing", "what": "not natural: " + v["law"], "simplex": sx, "C": list(els)})
                break
    if isinstance(d.t_table, dict):
        allowed = set(t_keys(d.max_dim))
        for x in d.t_table:
            if x not in allowed:
                out.append({"kind": "typing", "what": "unexpected functor entry", "simplex": x.to_json()})
    if isinstance(d.eta_table, dict):
        allowed = set(eta_keys(d.max_dim))
        for k in d.eta_table:
            if k not in allowed:
                out.append({"kind": "typing", "what": "unexpected transformation entry",
                            "simplex": k[0].to_json(), "C": list(k[1])})
    return out


def evaluate(d, x, chain):
    """Value of the induced map on a chain C_1 <= ... <= C_k (k <= 3) of subsets of [x.dim].

    A chain cuts into pieces along the consecutive elements of C_1; the value
    is the product of the pieces' values.
    """
    chain = [_as_subset(x, C) for C in chain]
    if not 1 <= len(chain) <= 3:
        raise ValueError("chains of length 1 to 3 only")
    for a, b in zip(chain, chain[1:]):
        if not a.issubset(b) or a.elements[0] != b.elements[0] or a.elements[-1] != b.elements[-1]:
            raise ValueError("chain subsets must be nested with common endpoints")
    first = chain[0]
    parts = []
    for c, sc in first.intervals():
        if len(chain) == 1:
            parts.append(a_of(d, x.edge(c, sc)))
            continue
        top = chain[-1]
        piece = face(x, tuple(v for v in top.elements if c <= v <= sc))
        if len(chain) == 2:
            parts.append(t_of(d, piece))
        else:
            mid = reindex_within(top, chain[1], c, sc)
            parts.append(eta_of(d, piece, mid))
    if len(chain) == 1:
        return product(parts)
    if len(chain) == 2:
        return functor_product(parts)
    return nat_product(parts)


def reindex_within(top, mid, c, sc):
    """mid cut to [c, sc], expressed inside the ordinal of top cut to [c, sc]."""
    cut = IndexSubset(top.ambient_dim, tuple(v for v in top.elements if c <= v <= sc))
    part = IndexSubset(top.ambient_dim, tuple(v for v in mid.elements if c <= v <= sc))
    return subset_preimage(delta_of_subset(cut), part)


def dagger_sides(d, x, A, B):
    """The two composites compared by the coherence square, built from the algebra."""
    A, B = _as_subset(x, A), _as_subset(x, B)
    n = x.dim
    xB = face(x, B)
    inner = eta_of(d, xB, subset_preimage(delta_of_subset(B), A))
    tail = functor_product([t_of(d, face(x, interval(b, sb, n))) for b, sb in B.intervals()])
    lhs = nat_vcomp(eta_of(d, x, B), whisker_right(inner, tail))
    pieces = [eta_of(d, face(x, interval(a, sa, n)), reindex_in_interval(B, a, sa))
              for a, sa in A.intervals()]
    rhs = nat_vcomp(eta_of(d, x, A), whisker_left(t_of(d, face(x, A)), nat_product(pieces)))
    return lhs, rhs


def _check_pre(x, A, B):
    n = x.dim
    if n < 4 or is_degenerate(x):
        raise ValueError("needs a nondegenerate simplex of dimension >= 4")
    if not (A.elements[0] == 0 and A.elements[-1] == n and A.issubset(B) and A != B
            and not A.is_endpoints() and not B.is_full()):
        raise ValueError("needs {0,n} < A < B < [n]")


def check_dagger(d, x, A, B):
    A, B = _as_subset(x, A), _as_subset(x, B)
    _check_pre(x, A, B)
    lhs, rhs = dagger_sides(d, x, A, B)
    return lhs == rhs


# A second, loop-based evaluation of the same square.  It shares only the
# table accessors with dagger_sides and is used to cross-check it.

def _digits(k, radix):
    out = []
    for r in reversed(radix):
        out.append(k % r)
        k //= r
    return out[::-1]


def _number(digits, radix):
    k = 0
    for v, r in zip(digits, radix):
        k = k * r + v
    return k


def dagger_sides_pointwise(d, x, A, B):
    A, B = _as_subset(x, A), _as_subset(x, B)
    n = x.dim
    base = d.base
    no, nm = base.n_obj, base.n_mor
    spine = x.spine()
    # positions of A-factors (spine edges equal to 1) between two vertices
    def arity(p, q):
        return sum(spine[p:q])

    def apply_obj(F, digits):
        k = _number(digits, [no] * len(digits))
        return _digits(int(F.obj_map[k]), [no] * _arity_of(F.tgt))

    def apply_mor(F, digits):
        k = _number(digits, [nm] * len(digits))
        return _digits(int(F.mor_map[k]), [nm] * _arity_of(F.tgt))

    def comp_at(t, digits):
        k = _number(digits, [no] * len(digits))
        return _digits(int(t.components[k]), [nm] * _arity_of(t.cod))

    def compose(g, f):
        return [int(base.compose(a, b)) for a, b in zip(g, f)]

    def _arity_of(C):
        return len(C.atoms()) // max(1, len(base.atoms()))

    def split(digits, cuts):
        out, pos = [], 0
        for w in cuts:
            out.append(digits[pos:pos + w])
            pos += w
        return out

    t_face = lambda S: t_of(d, face(x, S))
    Bint = B.intervals()
    Aint = A.intervals()
    total = arity(0, n)
    lhs, rhs = {}, {}
    eB = eta_of(d, x, B)
    eA = eta_of(d, x, A)
    xB = face(x, B)
    inner = eta_of(d, xB, subset_preimage(delta_of_subset(B), A))
    pieces = [eta_of(d, face(x, interval(a, sa, n)), reindex_in_interval(B, a, sa)) for a, sa in Aint]
    TA = t_face(A)
    for k in range(no ** total):
        X = _digits(k, [no] * total)
        # left: apply each T^{x_[b,sb]} to its block, then inner, then eta^x_B
        blocks = split(X, [arity(b, sb) for b, sb in Bint])
        Y = []
        for (b, sb), blk in zip(Bint, blocks):
            Y.extend(apply_obj(t_face(interval(b, sb, n)), blk))
        m1 = comp_at(inner, Y)
        m2 = comp_at(eB, X)
        lhs[k] = compose(m2, m1)
        # right: each piece on its block, assembled, pushed through T^{x_A}, then eta^x_A
        blocks = split(X, [arity(a, sa) for a, sa in Aint])
        mor = []
        for piece, blk in zip(pieces, blocks):
            mor.extend(comp_at(piece, blk))
        m3 = apply_mor(TA, mor)
        m4 = comp_at(eA, X)
        rhs[k] = compose(m4, m3)
    return lhs, rhs


# ---- the sweep

def dagger_tasks(max_dim):
    for x in nondegenerate_up_to(max_dim, 4):
        yield x


def _pairs(n):
    return [(c[1], c[2]) for c in spanning_chains(n, 4)]


def _witness(d, x, A, B, lhs, rhs):
    return {"kind": "dagger", "simplex": x.to_json(), "A": list(A.elements), "B": list(B.elements),
            "lhs": lhs.component_ids(), "rhs": rhs.component_ids()}


def sweep_simplex(d, x):
    fails = []
    checked = 0
    for A, B in _pairs(x.dim):
        checked += 1
        try:
            lhs, rhs = dagger_sides(d, x, A, B)
        except (ValueError, KeyError) as e:
            fails.append({"kind": "error", "simplex": x.to_json(), "A": list(A.elements),
                          "B": list(B.elements), "error": str(e)})
            continue
        if lhs != rhs:
            fails.append(_witness(d, x, A, B, lhs, rhs))
    return checked, fails


_SWEEP = {}


def _sweep_worker(idx):
    d = _SWEEP["data"]
    x = _SWEEP["tasks"][idx]
    return sweep_simplex(d, x)


def _failure_key(f):
    s = f.get("simplex", {"dim": -1, "edges": []})
    return (s["dim"], [e[2] for e in s["edges"]], f.get("A", []), f.get("B", []), f.get("C", []), f["kind"])


def check_all(d, workers=1, max_dim=None):
    """Typing check, then the coherence square on every nondegenerate x with 4 <= dim <= max_dim."""
    top = d.max_dim if max_dim is None else min(max_dim, d.max_dim)
    failures = list(validate(d))
    checked = 0
    if not failures:
        tasks = list(dagger_tasks(top))
        if workers > 1 and len(tasks) > 1:
            _SWEEP["data"], _SWEEP["tasks"] = d, tasks
            try:
                ctx = mp.get_context("fork")
                with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
                    results = list(pool.map(_sweep_worker, range(len(tasks)), chunksize=4))
            finally:
                _SWEEP.clear()
        else:
            results = [sweep_simplex(d, x) for x in tasks]
        for c, f in results:
            checked += c
            failures.extend(f)
    failures.sort(key=_failure_key)
    return {"status": "fail" if failures else "pass", "max_dim": top, "checked": checked,
            "failures": failures}


def recheck(d, x, A, B):
    """Single-instance check used to re-verify a reported witness."""
    A, B = _as_subset(x, A), _as_subset(x, B)
    _check_pre(x, A, B)
    lhs, rhs = dagger_sides(d, x, A, B)
    res = {"simplex": x.to_json(), "A": list(A.elements), "B": list(B.elements), "holds": lhs == rhs}
    res["lhs"] = lhs.component_ids()
    res["rhs"] = rhs.component_ids()
    return res


def tables_equal(d1, d2):
    """Same base and the same table values at every key up to the common truncation."""
    if d1.base != d2.base:
        return False
    top = min(d1.max_dim, d2.max_dim)
    for x in t_keys(top):
        if t_of(d1, x) != t_of(d2, x):
            return False
    for x, els in eta_keys(top):
        if eta_of(d1, x, els) != eta_of(d2, x, els):
            return False
    return True
