"""Simplices of the Catalan simplicial set.

A simplex of dimension n is determined by its edge bits x(p, q) for p < q,
subject to one rule on every triangle p < r < q: a 0 on the long edge (p, q)
forces 0 on both short edges.  Edge bits are stored in the order of
``edge_order(n)``, i.e. by (q - p, p): x01, x12, x23, x02, x13, x03, ...
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from ._kernels import catalan_rows, edge_order
from .ordcomb import IndexSubset, MonotoneMap, codegeneracy, full_subset


def edge_index(p, q, n):
    d = q - p
    return (d - 1) * (n + 1) - (d - 1) * d // 2 + p


# the five 2-simplices, keyed by (x01, x12, x02)
TRIANGLES = {
    (0, 0, 0): "s0(0)",
    (0, 1, 1): "s0(1)",
    (1, 0, 1): "s1(1)",
    (0, 0, 1): "u",
    (1, 1, 1): "m",
}


@dataclass(frozen=True)
class CatalanSimplex:
    dim: int
    edges: Tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.edges)
        object.__setattr__(self, "edges", bits)
        if len(bits) != self.dim * (self.dim + 1) // 2:
            raise ValueError("dimension %d needs %d edge bits" % (self.dim, self.dim * (self.dim + 1) // 2))
        if any(b not in (0, 1) for b in bits):
            raise ValueError("edge bits must be 0 or 1")
        bad = self.triangle_violation()
        if bad is not None:
            raise ValueError("triangle %r violates the Catalan rule" % (bad,))

    @classmethod
    def _raw(cls, dim, edges):
        x = object.__new__(cls)
        object.__setattr__(x, "dim", dim)
        object.__setattr__(x, "edges", edges)
        return x

    @classmethod
    def from_edges(cls, dim, mapping):
        return cls(dim, tuple(mapping[pq] for pq in edge_order(dim)))

    def edge(self, p, q):
        return self.edges[edge_index(p, q, self.dim)]

    def edge_map(self):
        return dict(zip(edge_order(self.dim), self.edges))

    def spine(self):
        return tuple(self.edge(i, i + 1) for i in range(self.dim))

    def triangle_violation(self):
        n = self.dim
        for p in range(n + 1):
            for q in range(p + 2, n + 1):
                if self.edge(p, q) == 0:
                    for r in range(p + 1, q):
                        if self.edge(p, r) or self.edge(r, q):
                            return (p, r, q)
        return None

    def sort_key(self):
        return (self.dim, self.edges)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def to_json(self):
        return {"dim": self.dim, "edges": [[p, q, b] for (p, q), b in zip(edge_order(self.dim), self.edges)]}

    @classmethod
    def from_json(cls, obj):
        dim = int(obj["dim"])
        given = {}
        for p, q, b in obj["edges"]:
            given[(int(p), int(q))] = int(b)
        if set(given) != set(edge_order(dim)):
            raise ValueError("edge list must name every pair p < q of [%d] exactly once" % dim)
        return cls.from_edges(dim, given)

    def __repr__(self):
        name = NAMES.get(self)
        if name:
            return "CatalanSimplex(%s)" % name
        return "CatalanSimplex(%d, %s)" % (self.dim, "".join(map(str, self.edges)))


def point():
    return CatalanSimplex._raw(0, ())


def face(x, C):
    """The C-th face: edges (i, j) read off as x(c_i, c_j)."""
    if isinstance(C, IndexSubset):
        if C.ambient_dim != x.dim:
            raise ValueError("subset of [%d] used on a %d-simplex" % (C.ambient_dim, x.dim))
        C = C.elements
    return _face(x, tuple(C))


@lru_cache(maxsize=None)
def _face(x, els):
    m = len(els) - 1
    return CatalanSimplex._raw(m, tuple(x.edge(els[i], els[j]) for i, j in edge_order(m)))


def degeneracy(x, i):
    """s_i x, pulled back along the codegeneracy [n+1] -> [n]; collapsed edges read 0."""
    sig = codegeneracy(x.dim, i).values
    n1 = x.dim + 1
    bits = []
    for p, q in edge_order(n1):
        a, b = sig[p], sig[q]
        bits.append(0 if a == b else x.edge(a, b))
    return CatalanSimplex._raw(n1, tuple(bits))


def pullback(x, f):
    """X(f)(x) for any monotone f: [m] -> [x.dim]."""
    if f.cod_dim != x.dim:
        raise ValueError("map does not land in [%d]" % x.dim)
    v = f.values
    return CatalanSimplex._raw(
        f.dom_dim, tuple(0 if v[p] == v[q] else x.edge(v[p], v[q]) for p, q in edge_order(f.dom_dim)))


def collapsible(x, i):
    """True when x = s_i(y) for some y."""
    if x.edge(i, i + 1):
        return False
    for p in range(i):
        if x.edge(p, i) != x.edge(p, i + 1):
            return False
    for q in range(i + 2, x.dim + 1):
        if x.edge(i, q) != x.edge(i + 1, q):
            return False
    return True


def collapsible_indices(x):
    return tuple(i for i in range(x.dim) if collapsible(x, i))


def is_degenerate(x):
    return any(collapsible(x, i) for i in range(x.dim))


@lru_cache(maxsize=None)
def nondegenerate_core(x):
    """(core, collapse) with x = pullback(core, collapse) and core nondegenerate."""
    dead = {i + 1 for i in collapsible_indices(x)}
    keep = tuple(v for v in range(x.dim + 1) if v not in dead)
    core = _face(x, keep)
    vals = []
    k = -1
    for v in range(x.dim + 1):
        if v not in dead:
            k += 1
        vals.append(k)
    return core, MonotoneMap(x.dim, core.dim, tuple(vals))


def core_of(x):
    return nondegenerate_core(x)[0]


def spine_sum(x):
    return sum(x.edge(i, i + 1) for i in range(x.dim))


def is_total_degeneracy(x):
    return not any(x.edges)


@lru_cache(maxsize=None)
def enumerate_simplices(n, nondegenerate_only=False):
    """Every n-simplex exactly once, in lexicographic order of edge bits."""
    if nondegenerate_only:
        return tuple(x for x in enumerate_simplices(n) if not is_degenerate(x))
    rows = catalan_rows(n)
    return tuple(CatalanSimplex._raw(n, tuple(int(b) for b in row)) for row in rows)


def count_simplices(n):
    return len(catalan_rows(n))


def nondegenerate_up_to(max_dim, min_dim=0):
    out = []
    for n in range(min_dim, max_dim + 1):
        out.extend(enumerate_simplices(n, True))
    return out


def mu(n):
    """The n-simplex with every edge 1."""
    return CatalanSimplex._raw(n, (1,) * (n * (n + 1) // 2))


def _named(dim, **edges):
    return CatalanSimplex.from_edges(dim, {(int(k[1]), int(k[2])): v for k, v in edges.items()})


ZERO = _named(1, e01=0)
ONE = _named(1, e01=1)
S00 = _named(2, e01=0, e12=0, e02=0)
S01 = _named(2, e01=0, e12=1, e02=1)
S11 = _named(2, e01=1, e12=0, e02=1)
U = _named(2, e01=0, e12=0, e02=1)
M = _named(2, e01=1, e12=1, e02=1)
L = _named(3, e01=0, e12=0, e23=1, e02=1, e13=1, e03=1)
R = _named(3, e01=1, e12=0, e23=0, e02=1, e13=1, e03=1)

NAMES = {point(): "*", ZERO: "0", ONE: "1", S00: "s0(0)", S01: "s0(1)", S11: "s1(1)",
         U: "u", M: "m", L: "l", R: "r"}


def named_simplex(name, n=None):
    if name in ("mu", "μ"):
        if n is None:
            raise ValueError("mu needs a dimension")
        return mu(n)
    for x, nm in NAMES.items():
        if nm == name:
            return x
    raise KeyError(name)


def triangle_name(x):
    """Name of a 2-simplex among the five."""
    return TRIANGLES[(x.edge(0, 1), x.edge(1, 2), x.edge(0, 2))]


def strict_subsets_between(n):
    """All C with {0, n} strictly inside C strictly inside [n], smallest first."""
    inner = list(range(1, n))
    out = []
    for mask in range(1, (1 << len(inner)) - 1):
        els = [0] + [v for k, v in enumerate(inner) if mask >> k & 1] + [n]
        out.append(IndexSubset(n, tuple(els)))
    out.sort(key=lambda C: (len(C), C.elements))
    return out


def full(n):
    return full_subset(n)
