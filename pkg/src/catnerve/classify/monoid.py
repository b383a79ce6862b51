"""Finite monoids and the strict structures they generate."""

from dataclasses import dataclass
from functools import reduce
from typing import Tuple

import numpy as np

from ..fincat import Functor, check_functor, discrete, one_object, power


@dataclass(frozen=True)
class Monoid:
    elements: Tuple[str, ...]
    op_table: Tuple[Tuple[str, ...], ...]
    unit: str

    def __post_init__(self):
        els = tuple(str(e) for e in self.elements)
        table = tuple(tuple(str(v) for v in row) for row in self.op_table)
        object.__setattr__(self, "elements", els)
        object.__setattr__(self, "op_table", table)
        object.__setattr__(self, "unit", str(self.unit))
        n = len(els)
        if len(set(els)) != n:
            raise ValueError("duplicate monoid elements")
        if len(table) != n or any(len(r) != n for r in table):
            raise ValueError("op_table must be %d x %d" % (n, n))
        if any(v not in els for r in table for v in r) or self.unit not in els:
            raise ValueError("op_table or unit names an unknown element")
        for a in els:
            if self.mul(self.unit, a) != a or self.mul(a, self.unit) != a:
                raise ValueError("unit law fails at %s" % a)
        for a in els:
            for b in els:
                for c in els:
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        raise ValueError("associativity fails at (%s, %s, %s)" % (a, b, c))

    def mul(self, a, b):
        return self.op_table[self.elements.index(a)][self.elements.index(b)]

    def fold(self, seq):
        return reduce(self.mul, seq, self.unit)

    def is_commutative(self):
        return all(self.mul(a, b) == self.mul(b, a) for a in self.elements for b in self.elements)

    @classmethod
    def cyclic(cls, n):
        els = [str(i) for i in range(n)]
        return cls(tuple(els), tuple(tuple(str((i + j) % n) for j in range(n)) for i in range(n)), "0")


def monoid_category(M, presentation="one_object"):
    if presentation == "one_object":
        op = {(a, b): M.mul(a, b) for a in M.elements for b in M.elements}
        return one_object(M.elements, op, M.unit, name="B" + _name(M))
    if presentation == "discrete":
        return discrete(M.elements, name="D" + _name(M))
    raise ValueError("presentation must be one_object or discrete")


def _name(M):
    return "M%d" % len(M.elements)


def monoid_tensor(M, A, n, presentation="one_object"):
    """The n-fold product as a functor A^n -> A (A^0 = I picks the unit)."""
    src = power(A, n)
    if presentation == "one_object":
        ids = [m for m, _, _ in A.morphisms]
        obj_map = np.zeros(src.n_obj, dtype=np.int64)
        mor_map = []
        for k in range(src.n_mor):
            digits = np.unravel_index(k, (A.n_mor,) * n) if n else ()
            mor_map.append(A.mor_index(M.fold([ids[int(v)] for v in digits])))
        F = Functor(src, A, obj_map, mor_map)
    else:
        objs = list(A.objects)
        obj_map = []
        for k in range(src.n_obj):
            digits = np.unravel_index(k, (A.n_obj,) * n) if n else ()
            obj_map.append(A.obj_index(M.fold([objs[int(v)] for v in digits])))
        obj_map = np.array(obj_map, dtype=np.int64)
        # discrete: morphisms are identities, indexed like objects
        mor_map = A.ident[obj_map[src.src]]
        F = Functor(src, A, obj_map, mor_map)
    bad = check_functor(F)
    if bad:
        raise ValueError("the %d-fold product is not a functor on this presentation "
                         "(a one-object presentation needs a commutative monoid): %s" % (n, bad[0]))
    return F
