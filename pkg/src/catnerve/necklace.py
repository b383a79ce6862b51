"""Vertices and chains of the posets S[n](p, q) of endpoint-containing subsets."""

import itertools
from functools import lru_cache

from .ordcomb import IndexSubset, reindex_in_interval


@lru_cache(maxsize=None)
def vertices(n, p, q):
    """Subsets of {p..q} containing p and q, ordered by size then elements."""
    if not 0 <= p < q <= n:
        raise ValueError("need 0 <= p < q <= n")
    inner = range(p + 1, q)
    out = []
    for k in range(len(inner) + 1):
        for mid in itertools.combinations(inner, k):
            out.append(IndexSubset(n, (p,) + mid + (q,)))
    return tuple(out)


def _leq(a, b):
    return set(a.elements) <= set(b.elements)


@lru_cache(maxsize=None)
def chains(n, p, q, length, strict_only=False):
    """Inclusion chains C_1 <= ... <= C_length of vertices of S[n](p, q).

    These are the simplices of dimension length - 1 of the nerve; with
    strict_only the degenerate ones (repeated subsets) are dropped.
    """
    verts = vertices(n, p, q)
    out = []

    def extend(chain):
        if len(chain) == length:
            out.append(tuple(chain))
            return
        last = chain[-1]
        for v in verts:
            if _leq(last, v) and (not strict_only or v != last):
                extend(chain + [v])

    if length >= 1:
        for v in verts:
            extend([v])
    return tuple(out)


@lru_cache(maxsize=None)
def spanning_chains(n, length):
    """Strict chains from {0, n} to [n] with the given number of subsets.

    length 3 gives the middle subsets C with {0,n} < C < [n]; length 4 gives
    the pairs A < B used by the coherence sweep.
    """
    bottom = IndexSubset(n, (0, n))
    top = IndexSubset(n, tuple(range(n + 1)))
    return tuple(c for c in chains(n, 0, n, length, True) if c[0] == bottom and c[-1] == top)


def restrict_chain(B, A):
    """For each a in A minus its max, B cut to [a, sa] and shifted into [sa - a]."""
    if not A.issubset(B):
        raise ValueError("restrict_chain needs A inside B")
    return [(a, sa, reindex_in_interval(B, a, sa)) for a, sa in A.intervals()]


def union(C, D):
    return IndexSubset(C.ambient_dim, tuple(sorted(set(C.elements) | set(D.elements))))
