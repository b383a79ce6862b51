"""Finite ordinals [n] = {0, ..., n}, monotone maps between them, and subsets."""

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class MonotoneMap:
    dom_dim: int
    cod_dim: int
    values: Tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != self.dom_dim + 1:
            raise ValueError("expected %d values, got %d" % (self.dom_dim + 1, len(vals)))
        for a, b in zip(vals, vals[1:]):
            if a > b:
                raise ValueError("not order preserving: %r" % (vals,))
        if vals and (vals[0] < 0 or vals[-1] > self.cod_dim):
            raise ValueError("values out of range for [%d]: %r" % (self.cod_dim, vals))

    def __call__(self, i):
        return self.values[i]

    def is_injective(self):
        return len(set(self.values)) == len(self.values)

    def is_surjective(self):
        return set(self.values) == set(range(self.cod_dim + 1))


def identity(n):
    return MonotoneMap(n, n, tuple(range(n + 1)))


def coface(n, i):
    """delta_i : [n-1] -> [n], skipping i."""
    if not 0 <= i <= n:
        raise ValueError("coface index out of range")
    return MonotoneMap(n - 1, n, tuple(p if p < i else p + 1 for p in range(n)))


def codegeneracy(n, i):
    """sigma_i : [n+1] -> [n], hitting i twice."""
    if not 0 <= i <= n:
        raise ValueError("codegeneracy index out of range")
    return MonotoneMap(n + 1, n, tuple(p if p <= i else p - 1 for p in range(n + 2)))


def compose(f, g):
    """g after f (apply f first)."""
    if f.cod_dim != g.dom_dim:
        raise ValueError("cannot compose [%d]->[%d] with [%d]->[%d]"
                         % (f.dom_dim, f.cod_dim, g.dom_dim, g.cod_dim))
    return MonotoneMap(f.dom_dim, g.cod_dim, tuple(g.values[v] for v in f.values))


def epi_mono_factor(f):
    """Unique factorization f = mono . epi through the image of f."""
    image = sorted(set(f.values))
    pos = {v: k for k, v in enumerate(image)}
    k = len(image) - 1
    epi = MonotoneMap(f.dom_dim, k, tuple(pos[v] for v in f.values))
    mono = MonotoneMap(k, f.cod_dim, tuple(image))
    return epi, mono


@dataclass(frozen=True)
class IndexSubset:
    ambient_dim: int
    elements: Tuple[int, ...]

    def __post_init__(self):
        els = tuple(int(e) for e in self.elements)
        object.__setattr__(self, "elements", els)
        if not els:
            raise ValueError("empty subset")
        for a, b in zip(els, els[1:]):
            if a >= b:
                raise ValueError("elements must be strictly increasing: %r" % (els,))
        if els[0] < 0 or els[-1] > self.ambient_dim:
            raise ValueError("elements out of range for [%d]: %r" % (self.ambient_dim, els))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, v):
        return v in self.elements

    @property
    def dim(self):
        return len(self.elements) - 1

    def minus(self):
        """C minus its maximum."""
        return self.elements[:-1]

    def succ(self, c):
        """Next element of C after c."""
        k = self.elements.index(c)
        return self.elements[k + 1]

    def intervals(self):
        """Consecutive pairs (c, sc) for c in C minus its maximum."""
        return list(zip(self.elements, self.elements[1:]))

    def issubset(self, other):
        return self.ambient_dim == other.ambient_dim and set(self.elements) <= set(other.elements)

    def is_full(self):
        return self.elements == tuple(range(self.ambient_dim + 1))

    def is_endpoints(self):
        return self.elements == (0, self.ambient_dim)


def full_subset(n):
    return IndexSubset(n, tuple(range(n + 1)))


def delta_of_subset(C):
    """The injection [m] -> [n] sending i to c_i."""
    return MonotoneMap(len(C) - 1, C.ambient_dim, C.elements)


def subset_image(f, C):
    if C.ambient_dim != f.dom_dim:
        raise ValueError("subset lives in [%d], map starts at [%d]" % (C.ambient_dim, f.dom_dim))
    return IndexSubset(f.cod_dim, tuple(sorted({f.values[c] for c in C.elements})))


def subset_preimage(f, C):
    """Preimage of C under an injective f, as a subset of [f.dom_dim]."""
    inv = {v: i for i, v in enumerate(f.values)}
    return IndexSubset(f.dom_dim, tuple(inv[c] for c in C.elements if c in inv))


def interval(c, sc, n):
    if not 0 <= c < sc <= n:
        raise ValueError("need 0 <= c < sc <= n, got %d, %d, %d" % (c, sc, n))
    return IndexSubset(n, tuple(range(c, sc + 1)))


def reindex_in_interval(B, c, sc):
    """B intersected with [c, sc], shifted into [sc - c]."""
    return IndexSubset(sc - c, tuple(b - c for b in B.elements if c <= b <= sc))
